#include "gmf/weights.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "gmf/error.hpp"

namespace gmf {

WeightedGroup::WeightedGroup(int n, std::vector<Permutation> elements, std::vector<ExactComplex> chi,
                             std::string label, bool trusted)
    : n_(n), label_(std::move(label)) {
  if (elements.size() != chi.size()) {
    throw InputError("chi has " + std::to_string(chi.size()) + " values for " +
                     std::to_string(elements.size()) + " group elements");
  }
  std::vector<std::size_t> order(elements.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return elements[a] < elements[b]; });
  for (auto k : order) {
    require_same_degree(n, elements[k].degree());
    if (!elements_.empty() && elements_.back() == elements[k]) {
      throw InputError("group element " + to_cycle_string(elements[k]) + " listed twice");
    }
    index_.emplace(elements[k], elements_.size());
    elements_.push_back(std::move(elements[k]));
    chi_.push_back(std::move(chi[k]));
  }
  if (trusted) return;

  if (!contains(Permutation::identity(n))) throw InputError("not a subgroup: identity missing");
  for (const auto& a : elements_) {
    if (!contains(inverse(a))) {
      throw InputError("not a subgroup: inverse of " + to_cycle_string(a) + " missing");
    }
    for (const auto& b : elements_) {
      if (!contains(compose(a, b))) {
        throw InputError("not a subgroup: " + to_cycle_string(a) + " * " + to_cycle_string(b) +
                         " missing");
      }
    }
  }
}

const ExactComplex& WeightedGroup::chi(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw InputError(to_cycle_string(p) + " is not in the group");
  return chi_[it->second];
}

bool WeightedGroup::is_full_symmetric_group() const {
  std::size_t factorial = 1;
  for (int k = 2; k <= n_; ++k) factorial *= static_cast<std::size_t>(k);
  return elements_.size() == factorial;
}

bool WeightedGroup::is_class_function() const {
  for (const auto& g : elements_) {
    const Permutation g_inv = inverse(g);
    for (std::size_t k = 0; k < elements_.size(); ++k) {
      const Permutation conj = compose(compose(g, elements_[k]), g_inv);
      if (!(chi(conj) == chi_[k])) return false;
    }
  }
  return true;
}

ExactComplex chi_hat(const WeightedGroup& w, const Permutation& p) {
  require_same_degree(w.degree(), p.degree());
  return w.contains(p) ? w.chi(p) : ExactComplex{};
}

std::vector<Permutation> symmetric_group(int n, int cap) { return enumerate_sn(n, cap); }

std::vector<Permutation> alternating_group(int n, int cap) {
  auto all = enumerate_sn(n, cap);
  std::erase_if(all, [](const Permutation& p) { return sign(p) < 0; });
  return all;
}

std::vector<Permutation> cyclic_group(const Permutation& generator) {
  std::vector<Permutation> out{Permutation::identity(generator.degree())};
  for (Permutation p = generator; !p.is_identity(); p = compose(p, generator)) out.push_back(p);
  return out;
}

std::vector<Permutation> generated_group(int n, const std::vector<Permutation>& generators) {
  std::vector<Permutation> out{Permutation::identity(n)};
  std::unordered_set<Permutation> seen(out.begin(), out.end());
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& g : generators) {
      Permutation next = compose(out[k], g);
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  }
  return out;
}

WeightedGroup weights_from_function(int n, std::vector<Permutation> elements,
                                    const std::function<ExactComplex(const Permutation&)>& chi,
                                    std::string label, bool trusted) {
  std::vector<ExactComplex> values;
  values.reserve(elements.size());
  for (const auto& p : elements) values.push_back(chi(p));
  return WeightedGroup(n, std::move(elements), std::move(values), std::move(label), trusted);
}

WeightedGroup built_in_weights(const std::string& name, int n, int cap) {
  if (name == "trivial") {
    return weights_from_function(n, symmetric_group(n, cap), [](const Permutation&) { return ExactComplex(1); },
                                 "trivial", true);
  }
  if (name == "sign") {
    return weights_from_function(n, symmetric_group(n, cap),
                                 [](const Permutation& p) { return ExactComplex(sign(p)); }, "sign", true);
  }
  throw InputError("unknown built-in weights '" + name + "' (expected trivial or sign)");
}

WeightedGroup class_function_weights(int n, const ClassTable& table, int cap) {
  for (const auto& type : partitions(n)) {
    if (!table.contains(type)) throw InputError("class table misses cycle type " + cycle_type_key(type));
  }
  return weights_from_function(
      n, symmetric_group(n, cap), [&](const Permutation& p) { return table.at(cycle_type(p)); },
      "class-table", true);
}

WeightedGroup inverted_weights(const WeightedGroup& w) {
  return weights_from_function(
      w.degree(), w.elements(), [&](const Permutation& p) { return w.chi(inverse(p)); },
      w.label() + "-inverted", true);
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

std::string cycle_type_key(const std::vector<int>& type) {
  std::string out = "[";
  for (std::size_t k = 0; k < type.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(type[k]);
  }
  return out + "]";
}

}  // namespace gmf
