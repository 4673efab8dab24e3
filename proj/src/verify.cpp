#include "gmf/verify.hpp"

#include <iomanip>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include "gmf/class_sets.hpp"
#include "gmf/error.hpp"
#include "gmf/gmf.hpp"
#include "gmf/parallel.hpp"

namespace gmf {

Json to_json(const Verdict& v) {
  Json out{{"claim", v.claim},     {"subject", v.subject}, {"holds", v.holds},
           {"outcome", v.outcome}, {"cases", v.cases},     {"witness", v.witness}};
  if (!v.details.empty()) out["details"] = v.details;
  return out;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t k) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (k + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

ExactComplex brute_force_gmf(const WeightedGroup& w, const SquareMatrix& a) {
  require_same_degree(w.degree(), a.degree());
  const int n = a.degree();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) images[static_cast<std::size_t>(k)] = k + 1;

  ExactComplex total;
  auto visit = [&] {
    const Permutation sigma(images);
    const ExactComplex weight = chi_hat(w, sigma);
    if (weight.is_zero()) return;
    ExactComplex term = weight;
    for (int i = 1; i <= n; ++i) term *= a(i, images[static_cast<std::size_t>(i - 1)]);
    total += term;
  };

  // Heap's algorithm, iterative form.
  std::vector<int> counters(static_cast<std::size_t>(n), 0);
  visit();
  for (std::size_t i = 1; i < images.size();) {
    if (counters[i] < static_cast<int>(i)) {
      if (i % 2 == 0) {
        std::swap(images[0], images[i]);
      } else {
        std::swap(images[static_cast<std::size_t>(counters[i])], images[i]);
      }
      visit();
      ++counters[i];
      i = 1;
    } else {
      counters[i] = 0;
      ++i;
    }
  }
  return total;
}

namespace {

using WeightsPtr = std::shared_ptr<const WeightedGroup>;

WeightsPtr share(const WeightedGroup& w) { return std::make_shared<const WeightedGroup>(w); }

ExactComplex x_set_chi_sum(const WeightedGroup& w, const Permutation& sigma) {
  ExactComplex sum;
  for (const auto& tau : x_set(sigma).members) sum += chi_hat(w, tau);
  return sum;
}

std::string pair_subject(const WeightedGroup& a, const WeightedGroup& b) {
  return a.label() + " vs " + b.label();
}

}  // namespace

Verdict check_ssigma_sum(const WeightedGroup& w) {
  const auto perms = enumerate_sn(w.degree(), w.degree());
  std::vector<std::optional<std::pair<ExactComplex, ExactComplex>>> mismatch(perms.size());
  parallel_for(perms.size(), [&](std::size_t k) {
    ExactComplex lhs = evaluate(w, s_sigma_matrix(perms[k]));
    ExactComplex rhs = x_set_chi_sum(w, perms[k]);
    if (!(lhs == rhs)) mismatch[k].emplace(std::move(lhs), std::move(rhs));
  });

  Verdict v{.claim = "ssigma-sum", .subject = w.label(), .holds = true, .outcome = "identity-holds",
            .cases = perms.size()};
  for (std::size_t k = 0; k < perms.size(); ++k) {
    if (!mismatch[k]) continue;
    v.holds = false;
    v.outcome = "identity-fails";
    v.witness = Json{{"sigma", to_json(perms[k])},
                     {"gmf_of_s_sigma", mismatch[k]->first.to_string()},
                     {"x_set_sum", mismatch[k]->second.to_string()}};
    v.recheck = [weights = share(w), sigma = perms[k]] {
      return !(evaluate(*weights, s_sigma_matrix(sigma)) == x_set_chi_sum(*weights, sigma));
    };
    break;
  }
  return v;
}

Verdict check_perm_xset(int n, int cap) {
  const auto perms = enumerate_sn(n, cap);
  std::vector<std::optional<std::pair<ExactComplex, std::size_t>>> mismatch(perms.size());
  parallel_for(perms.size(), [&](std::size_t k) {
    ExactComplex per = permanent(s_sigma_matrix(perms[k]));
    const std::size_t size = x_set(perms[k]).members.size();
    if (!(per == ExactComplex(static_cast<long>(size)))) mismatch[k].emplace(std::move(per), size);
  });

  Verdict v{.claim = "perm-xset", .subject = "S_" + std::to_string(n), .holds = true,
            .outcome = "identity-holds", .cases = perms.size()};
  for (std::size_t k = 0; k < perms.size(); ++k) {
    if (!mismatch[k]) continue;
    v.holds = false;
    v.outcome = "identity-fails";
    v.witness = Json{{"sigma", to_json(perms[k])},
                     {"permanent", mismatch[k]->first.to_string()},
                     {"x_set_size", mismatch[k]->second}};
    v.recheck = [sigma = perms[k]] {
      return !(permanent(s_sigma_matrix(sigma)) ==
               ExactComplex(static_cast<long>(x_set(sigma).members.size())));
    };
    break;
  }
  return v;
}

Verdict check_equality_criterion(const WeightedGroup& w1, const WeightedGroup& w2) {
  require_same_degree(w1.degree(), w2.degree());
  const int n = w1.degree();
  const auto classes = class_partition(n, n);

  Verdict v{.claim = "equality-criterion", .subject = pair_subject(w1, w2), .holds = true,
            .outcome = "equal", .cases = classes.size()};

  for (const auto& c : classes) {
    ExactComplex sum1;
    ExactComplex sum2;
    for (const auto& tau : c.members) {
      sum1 += chi_hat(w1, tau);
      sum2 += chi_hat(w2, tau);
    }
    if (sum1 == sum2) continue;

    v.outcome = "not-equal";
    v.witness = Json{{"class_representative", to_json(c.representative)},
                     {"class_sum_1", sum1.to_string()},
                     {"class_sum_2", sum2.to_string()}};
    auto a = share(w1);
    auto b = share(w2);
    std::optional<Permutation> separating;
    for_each_permutation(
        n,
        [&](const Permutation& sigma) {
          if (separating) return;
          const auto s = s_sigma_matrix(sigma);
          const ExactComplex d1 = evaluate(w1, s);
          const ExactComplex d2 = evaluate(w2, s);
          if (d1 == d2) return;
          separating = sigma;
          v.witness["sigma"] = to_json(sigma);
          v.witness["matrix"] = to_json(s);
          v.witness["value_1"] = d1.to_string();
          v.witness["value_2"] = d2.to_string();
        },
        n);
    if (separating) {
      v.recheck = [a, b, sigma = *separating] {
        const auto s = s_sigma_matrix(sigma);
        return !(evaluate(*a, s) == evaluate(*b, s));
      };
    } else {
      // The class sums differ yet no S_sigma separates the functions.
      v.holds = false;
      v.recheck = [a, b, members = c.members] {
        ExactComplex s1;
        ExactComplex s2;
        for (const auto& tau : members) {
          s1 += chi_hat(*a, tau);
          s2 += chi_hat(*b, tau);
        }
        return !(s1 == s2);
      };
    }
    break;
  }
  return v;
}

Verdict cross_validate_equality(const WeightedGroup& w1, const WeightedGroup& w2,
                                const SamplingOptions& options) {
  Verdict criterion = check_equality_criterion(w1, w2);
  Verdict v{.claim = "equality-sampling", .subject = criterion.subject, .holds = true,
            .outcome = criterion.outcome};

  if (criterion.outcome == "not-equal") {
    v.cases = 1;
    v.witness = criterion.witness;
    v.recheck = criterion.recheck;
    // Re-evaluate the stored separating matrix independently of the scan.
    if (!criterion.witness.contains("matrix")) {
      v.holds = false;
      return v;
    }
    const SquareMatrix s = matrix_from_json(criterion.witness.at("matrix"));
    v.holds = !(evaluate(w1, s) == evaluate(w2, s));
    return v;
  }

  const int n = w1.degree();
  const auto trials = static_cast<std::size_t>(std::max(options.trials, 0));
  std::vector<std::optional<std::pair<ExactComplex, ExactComplex>>> mismatch(trials);
  parallel_for(trials, [&](std::size_t t) {
    const auto a = random_symmetric_matrix(n, trial_seed(options.seed, t), options.bound);
    ExactComplex d1 = evaluate(w1, a);
    ExactComplex d2 = evaluate(w2, a);
    if (!(d1 == d2)) mismatch[t].emplace(std::move(d1), std::move(d2));
  });
  v.cases = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    if (!mismatch[t]) continue;
    const auto a = random_symmetric_matrix(n, trial_seed(options.seed, t), options.bound);
    v.holds = false;
    v.outcome = "criterion-contradicted";
    v.witness = Json{{"matrix", to_json(a)},
                     {"value_1", mismatch[t]->first.to_string()},
                     {"value_2", mismatch[t]->second.to_string()}};
    v.recheck = [x = share(w1), y = share(w2), a] { return !(evaluate(*x, a) == evaluate(*y, a)); };
    break;
  }
  return v;
}

Verdict check_transpose_criterion(const WeightedGroup& w, const SamplingOptions& options) {
  const int n = w.degree();
  Verdict v{.claim = "transpose-criterion", .subject = w.label(), .holds = true};

  // chi_hat vanishes off G, so an asymmetric pair always has a member in G.
  std::optional<Permutation> asymmetric;
  std::uint64_t scanned = 0;
  for (const auto& sigma : w.elements()) {
    ++scanned;
    if (!(chi_hat(w, sigma) == chi_hat(w, inverse(sigma)))) {
      asymmetric = sigma;
      break;
    }
  }

  if (asymmetric) {
    const Permutation& sigma = *asymmetric;
    const auto [alpha, beta] = two_involution_factorization(sigma);
    // P_beta * P_alpha = P_(alpha o beta) = P_sigma.
    SquareMatrix a = permutation_matrix(beta);
    SquareMatrix b = permutation_matrix(alpha);
    const SquareMatrix ab = a * b;
    const SquareMatrix ba = b * a;
    const ExactComplex d_ab = evaluate(w, ab);
    const ExactComplex d_ba = evaluate(w, ba);
    v.outcome = "not-inverse-invariant";
    v.cases = scanned;
    v.holds = a.verify_symmetric() && b.verify_symmetric() && ab == permutation_matrix(sigma) && !(d_ab == d_ba);
    v.witness = Json{{"sigma", to_json(sigma)},
                     {"chi_sigma", chi_hat(w, sigma).to_string()},
                     {"chi_sigma_inverse", chi_hat(w, inverse(sigma)).to_string()},
                     {"alpha", to_json(alpha)},
                     {"beta", to_json(beta)},
                     {"A", to_json(a)},
                     {"B", to_json(b)},
                     {"d_AB", d_ab.to_string()},
                     {"d_BA", d_ba.to_string()}};
    v.recheck = [weights = share(w), a, b] { return !(evaluate(*weights, a * b) == evaluate(*weights, b * a)); };
    return v;
  }

  v.outcome = "inverse-invariant";
  const auto trials = static_cast<std::size_t>(std::max(options.trials, 0));
  // Slot 2t: d(A) vs d(A^T) for a general A. Slot 2t+1: d(AB) vs d(BA) for
  // symmetric A, B.
  std::vector<std::optional<Json>> failures(2 * trials);
  parallel_for(2 * trials, [&](std::size_t slot) {
    const std::size_t t = slot / 2;
    if (slot % 2 == 0) {
      const auto a = random_matrix(n, trial_seed(options.seed, 2 * t), options.bound);
      const auto d = evaluate(w, a);
      const auto dt = evaluate(w, a.transpose());
      if (!(d == dt)) {
        failures[slot] = Json{{"kind", "transpose"}, {"A", to_json(a)}, {"d_A", d.to_string()},
                              {"d_AT", dt.to_string()}};
      }
    } else {
      const auto a = random_symmetric_matrix(n, trial_seed(options.seed, 2 * t + 1), options.bound);
      const auto b = random_symmetric_matrix(n, trial_seed(options.seed ^ 0x5bd1e995ULL, 2 * t + 1), options.bound);
      const auto d_ab = evaluate(w, a * b);
      const auto d_ba = evaluate(w, b * a);
      if (!(d_ab == d_ba)) {
        failures[slot] = Json{{"kind", "product"}, {"A", to_json(a)}, {"B", to_json(b)},
                              {"d_AB", d_ab.to_string()}, {"d_BA", d_ba.to_string()}};
      }
    }
  });
  v.cases = scanned + 2 * trials;
  for (auto& f : failures) {
    if (!f) continue;
    v.holds = false;
    v.outcome = "sampling-contradicted";
    v.witness = *f;
    v.recheck = [weights = share(w), witness = *f] {
      if (witness.at("kind") == "transpose") {
        const auto a = matrix_from_json(witness.at("A"));
        return !(evaluate(*weights, a) == evaluate(*weights, a.transpose()));
      }
      const auto a = matrix_from_json(witness.at("A"));
      const auto b = matrix_from_json(witness.at("B"));
      return !(evaluate(*weights, a * b) == evaluate(*weights, b * a));
    };
    break;
  }
  return v;
}

Verdict check_lemma_ssq(int n, int cap) {
  if (n < 3) throw InputError("the S_sigma square identity needs n >= 3");
  Verdict v{.claim = "ssigma-square", .subject = "S_" + std::to_string(n), .holds = true,
            .outcome = "identity-holds"};
  for_each_permutation(
      n,
      [&](const Permutation& sigma) {
        if (moved_set(sigma).size() != 3 || !v.holds) return;
        ++v.cases;
        const auto s = s_sigma_matrix(sigma);
        const auto square = s * s;
        for (int i = 1; i <= n && v.holds; ++i) {
          for (int j = 1; j <= n; ++j) {
            const ExactComplex expected(c_sigma(sigma, i, j) + (i == j ? 1 : 0));
            if (square(i, j) == expected) continue;
            v.holds = false;
            v.outcome = "identity-fails";
            v.witness = Json{{"sigma", to_json(sigma)}, {"i", i}, {"j", j},
                             {"square_entry", square(i, j).to_string()},
                             {"expected", expected.to_string()}};
            v.recheck = [sigma, i, j] {
              const auto m = s_sigma_matrix(sigma);
              return !((m * m)(i, j) == ExactComplex(c_sigma(sigma, i, j) + (i == j ? 1 : 0)));
            };
            break;
          }
        }
      },
      cap);
  return v;
}

namespace {

// The first of the given matrices on which d and det differ, if any.
std::optional<Json> det_disagreement(const WeightedGroup& w, const std::vector<SquareMatrix>& candidates) {
  for (const auto& m : candidates) {
    const auto d = evaluate(w, m);
    const auto det = determinant(m);
    if (!(d == det)) return Json{{"matrix", to_json(m)}, {"gmf", d.to_string()}, {"det", det.to_string()}};
  }
  return std::nullopt;
}

}  // namespace

Verdict check_det_multiplicativity(const WeightedGroup& w, const SamplingOptions& options) {
  const int n = w.degree();
  if (!w.is_class_function()) throw InputError("det-multiplicativity needs a class function on G");
  if (w.chi(Permutation::identity(n)).is_zero()) throw InputError("det-multiplicativity needs chi(id) != 0");

  const auto f3c = enumerate_f3c(n, n);
  std::vector<SquareMatrix> s(f3c.size(), SquareMatrix(n));
  std::vector<ExactComplex> d(f3c.size());
  for (std::size_t k = 0; k < f3c.size(); ++k) {
    s[k] = s_sigma_matrix(f3c[k]);
    d[k] = evaluate(w, s[k]);
  }

  const std::size_t pairs = f3c.size() * f3c.size();
  std::vector<std::optional<ExactComplex>> failed(pairs);
  parallel_for(pairs, [&](std::size_t idx) {
    const std::size_t a = idx / f3c.size();
    const std::size_t b = idx % f3c.size();
    ExactComplex of_product = evaluate(w, s[a] * s[b]);
    if (!(d[a] * d[b] == of_product)) failed[idx] = std::move(of_product);
  });

  Verdict v{.claim = "det-multiplicativity", .subject = w.label(), .cases = pairs};
  std::size_t failures = 0;
  std::optional<std::size_t> first;
  for (std::size_t idx = 0; idx < pairs; ++idx) {
    if (!failed[idx]) continue;
    ++failures;
    if (!first) first = idx;
  }
  v.details["pair_failures"] = failures;

  auto weights = share(w);
  if (first) {
    const std::size_t a = *first / f3c.size();
    const std::size_t b = *first % f3c.size();
    const auto product = s[a] * s[b];
    v.outcome = "not-multiplicative";
    v.witness = Json{{"kind", "pair"},
                     {"sigma", to_json(f3c[a])},
                     {"tau", to_json(f3c[b])},
                     {"product_of_values", (d[a] * d[b]).to_string()},
                     {"value_of_product", failed[*first]->to_string()}};
    const auto disagreement = det_disagreement(w, {s[a], s[b], product});
    if (disagreement) v.witness["det_disagreement"] = *disagreement;
    v.holds = disagreement.has_value();
    v.recheck = [weights, sa = s[a], sb = s[b]] {
      return !(evaluate(*weights, sa) * evaluate(*weights, sb) == evaluate(*weights, sa * sb));
    };
    return v;
  }

  if (n == 2) {
    SquareMatrix twos(2);
    for (int i = 1; i <= 2; ++i) {
      for (int j = 1; j <= 2; ++j) twos.set(i, j, 2);
    }
    const auto square = twos * twos;
    const auto d_twos = evaluate(w, twos);
    const auto d_square = evaluate(w, square);
    ++v.cases;
    if (!(d_twos * d_twos == d_square)) {
      v.outcome = "not-multiplicative";
      v.witness = Json{{"kind", "scalar-square-probe"},
                       {"matrix", to_json(twos)},
                       {"square", to_json(square)},
                       {"product_of_values", (d_twos * d_twos).to_string()},
                       {"value_of_product", d_square.to_string()}};
      const auto disagreement = det_disagreement(w, {twos, square});
      if (disagreement) v.witness["det_disagreement"] = *disagreement;
      v.holds = disagreement.has_value();
      v.recheck = [weights, twos] {
        const auto d1 = evaluate(*weights, twos);
        return !(d1 * d1 == evaluate(*weights, twos * twos));
      };
      return v;
    }
  }

  v.outcome = "multiplicative";
  v.holds = true;
  const auto trials = static_cast<std::size_t>(std::max(options.trials, 0));
  std::vector<bool> mismatch(trials, false);
  parallel_for(trials, [&](std::size_t t) {
    const auto m = random_matrix(n, trial_seed(options.seed, t), options.bound);
    if (!(evaluate(w, m) == determinant(m))) mismatch[t] = true;
  });
  v.cases += trials;
  for (std::size_t t = 0; t < trials; ++t) {
    if (!mismatch[t]) continue;
    const auto m = random_matrix(n, trial_seed(options.seed, t), options.bound);
    v.holds = false;
    v.outcome = "multiplicative-but-not-det";
    v.witness = *det_disagreement(w, {m});
    v.recheck = [weights, m] { return !(evaluate(*weights, m) == determinant(m)); };
    break;
  }
  return v;
}

namespace {

void require_class_function_on_sn(const WeightedGroup& w) {
  if (!w.is_full_symmetric_group()) throw InputError(w.label() + ": group is not all of S_n");
  std::map<std::vector<int>, ExactComplex> by_type;
  for (std::size_t k = 0; k < w.order(); ++k) {
    auto [it, inserted] = by_type.emplace(cycle_type(w.elements()[k]), w.values()[k]);
    if (!inserted && !(it->second == w.values()[k])) {
      throw InputError(w.label() + ": not constant on conjugacy classes");
    }
  }
}

}  // namespace

Verdict check_character_equality_corollary(const WeightedGroup& w1, const WeightedGroup& w2) {
  require_same_degree(w1.degree(), w2.degree());
  require_class_function_on_sn(w1);
  require_class_function_on_sn(w2);

  const Verdict criterion = check_equality_criterion(w1, w2);
  const bool tables_equal = w1.values() == w2.values();  // same sorted element list

  Verdict v{.claim = "character-equality", .subject = criterion.subject, .outcome = criterion.outcome,
            .cases = criterion.cases + w1.order()};
  v.details["tables_equal"] = tables_equal;
  v.holds = criterion.holds && ((criterion.outcome == "equal") == tables_equal);
  v.witness = criterion.witness;
  v.recheck = criterion.recheck;
  if (!v.holds && !v.has_witness()) {
    // Equal class sums although the tables differ somewhere.
    for (std::size_t k = 0; k < w1.order(); ++k) {
      if (w1.values()[k] == w2.values()[k]) continue;
      const Permutation& sigma = w1.elements()[k];
      v.witness = Json{{"sigma", to_json(sigma)},
                       {"value_1", w1.values()[k].to_string()},
                       {"value_2", w2.values()[k].to_string()}};
      v.recheck = [a = share(w1), b = share(w2), sigma] { return !(a->chi(sigma) == b->chi(sigma)); };
      break;
    }
  }
  return v;
}

Verdict check_gmf_oracle(const WeightedGroup& w, const SamplingOptions& options) {
  const int n = w.degree();
  const auto trials = static_cast<std::size_t>(std::max(options.trials, 0));
  std::vector<std::optional<std::pair<ExactComplex, ExactComplex>>> mismatch(trials);
  parallel_for(trials, [&](std::size_t t) {
    const auto a = random_matrix(n, trial_seed(options.seed, t), options.bound);
    ExactComplex fast = evaluate(w, a);
    ExactComplex brute = brute_force_gmf(w, a);
    if (!(fast == brute)) mismatch[t].emplace(std::move(fast), std::move(brute));
  });
  Verdict v{.claim = "gmf-oracle", .subject = w.label(), .holds = true, .outcome = "agree", .cases = trials};
  for (std::size_t t = 0; t < trials; ++t) {
    if (!mismatch[t]) continue;
    const auto a = random_matrix(n, trial_seed(options.seed, t), options.bound);
    v.holds = false;
    v.outcome = "disagree";
    v.witness = Json{{"matrix", to_json(a)},
                     {"evaluate", mismatch[t]->first.to_string()},
                     {"brute_force", mismatch[t]->second.to_string()}};
    v.recheck = [weights = share(w), a] { return !(evaluate(*weights, a) == brute_force_gmf(*weights, a)); };
    break;
  }
  return v;
}

const WeightedGroup& WeightSuite::get(const std::string& label) const {
  for (const auto& w : weights) {
    if (w.label() == label) return w;
  }
  throw InputError("suite has no weights labelled '" + label + "'");
}

bool WeightSuite::has(const std::string& label) const {
  for (const auto& w : weights) {
    if (w.label() == label) return true;
  }
  return false;
}

WeightSuite standard_suite(int n, std::uint64_t seed, int cap) {
  WeightSuite suite;
  suite.weights.push_back(built_in_weights("trivial", n, cap));
  suite.weights.push_back(built_in_weights("sign", n, cap));

  if (n % 4 == 0) {
    std::vector<int> points(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) points[static_cast<std::size_t>(k)] = k + 1;
    auto powers = cyclic_group(from_cycles(n, std::vector<std::vector<int>>{points}));
    std::vector<ExactComplex> values;
    for (std::size_t k = 0; k < powers.size(); ++k) values.push_back(i_power(static_cast<long long>(k)));
    suite.weights.emplace_back(n, std::move(powers), std::move(values), "cyclic-i", true);
  }

  if (n >= 3) {
    suite.weights.push_back(weights_from_function(
        n, alternating_group(n, cap), [](const Permutation&) { return ExactComplex(1); },
        "alternating-trivial", true));
  }

  std::mt19937_64 rng(trial_seed(seed, 0xC1A55));
  auto small = [&rng] { return static_cast<long>(rng() % 7) - 3; };

  ClassTable table;
  for (const auto& type : partitions(n)) table[type] = ExactComplex(small());
  WeightedGroup class_table = class_function_weights(n, table, cap);
  class_table.set_label("random-class-table");
  suite.weights.push_back(std::move(class_table));

  // Drawn in enumeration order so the values do not depend on the sort
  // order used inside WeightedGroup.
  std::vector<Permutation> all = symmetric_group(n, cap);
  std::vector<ExactComplex> values;
  for (std::size_t k = 0; k < all.size(); ++k) {
    const long re = small();
    const long im = small();
    values.emplace_back(Rational(re), Rational(im));
  }
  WeightedGroup random_fn(n, std::move(all), std::move(values), "random-function", true);
  WeightedGroup inverted = inverted_weights(random_fn);
  suite.weights.push_back(std::move(random_fn));
  suite.weights.push_back(std::move(inverted));
  return suite;
}

std::vector<Verdict> run_all(int n, std::uint64_t seed, int trials, int cap) {
  if (n < 1) throw InputError("degree must be at least 1");
  if (n > cap) throw CapExceeded(n, cap);
  const WeightSuite suite = standard_suite(n, seed, cap);
  const SamplingOptions options{.trials = trials, .seed = seed, .bound = 5};

  std::vector<Verdict> out;
  for (const auto& w : suite.weights) {
    out.push_back(check_ssigma_sum(w));
    out.push_back(check_gmf_oracle(w, options));
    out.push_back(check_transpose_criterion(w, options));
  }
  out.push_back(check_perm_xset(n, cap));
  if (n >= 3) out.push_back(check_lemma_ssq(n, cap));

  const std::vector<std::pair<std::string, std::string>> equality_pairs{
      {"trivial", "sign"},
      {"random-function", "random-function-inverted"},
      {"random-class-table", "random-class-table"},
      {"random-function", "sign"},
  };
  for (const auto& [a, b] : equality_pairs) {
    out.push_back(check_equality_criterion(suite.get(a), suite.get(b)));
    out.push_back(cross_validate_equality(suite.get(a), suite.get(b), options));
  }

  const std::vector<std::pair<std::string, std::string>> character_pairs{
      {"trivial", "sign"},
      {"sign", "sign"},
      {"random-class-table", "trivial"},
  };
  for (const auto& [a, b] : character_pairs) {
    out.push_back(check_character_equality_corollary(suite.get(a), suite.get(b)));
  }

  for (const char* label : {"trivial", "sign", "alternating-trivial", "cyclic-i"}) {
    if (suite.has(label)) out.push_back(check_det_multiplicativity(suite.get(label), options));
  }
  return out;
}

std::string format_table(const std::vector<Verdict>& verdicts) {
  std::ostringstream os;
  os << std::left << std::setw(22) << "claim" << std::setw(50) << "subject" << std::setw(7) << "holds"
     << std::setw(28) << "outcome"
     << "cases\n";
  for (const auto& v : verdicts) {
    os << std::left << std::setw(22) << v.claim << std::setw(50) << v.subject << std::setw(7)
       << (v.holds ? "yes" : "NO") << std::setw(28) << v.outcome << v.cases << '\n';
  }
  return os.str();
}

}  // namespace gmf
