#include "gmf/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "gmf/error.hpp"

namespace gmf {

Permutation::Permutation(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw InputError("permutation degree must be at least 1");
  std::vector<bool> seen(images.size(), false);
  images_.reserve(images.size());
  for (int v : images) {
    if (v < 1 || v > n) {
      throw InputError("image " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
    }
    if (seen[static_cast<std::size_t>(v - 1)]) {
      throw InputError("image " + std::to_string(v) + " repeated; not a bijection");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
    images_.push_back(v - 1);
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw InputError("permutation degree must be at least 1");
  Permutation p;
  p.images_.resize(static_cast<std::size_t>(n));
  std::iota(p.images_.begin(), p.images_.end(), 0);
  return p;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(images_.size());
  std::transform(images_.begin(), images_.end(), out.begin(), [](int v) { return v + 1; });
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::size_t Permutation::hash() const {
  std::size_t h = images_.size();
  for (int v : images_) h = h * 31 + static_cast<std::size_t>(v);
  return h;
}

Cycle::Cycle(int degree, std::vector<int> support) : degree_(degree), support_(std::move(support)) {
  if (support_.size() < 2) throw InputError("a cycle needs at least two points");
  std::vector<bool> seen(static_cast<std::size_t>(std::max(degree, 0)), false);
  for (int v : support_) {
    if (v < 1 || v > degree) {
      throw InputError("cycle point " + std::to_string(v) + " outside [1, " +
                       std::to_string(degree) + "]");
    }
    if (seen[static_cast<std::size_t>(v - 1)]) {
      throw InputError("cycle point " + std::to_string(v) + " repeated");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  std::rotate(support_.begin(), std::min_element(support_.begin(), support_.end()), support_.end());
}

Permutation Cycle::to_permutation() const { return from_cycles(degree_, std::vector<Cycle>{*this}); }

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_degree(p.degree(), q.degree());
  Permutation r;
  r.images_.resize(q.images_.size());
  for (std::size_t i = 0; i < q.images_.size(); ++i) {
    r.images_[i] = p.images_[static_cast<std::size_t>(q.images_[i])];
  }
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r;
  r.images_.resize(p.images_.size());
  for (std::size_t i = 0; i < p.images_.size(); ++i) {
    r.images_[static_cast<std::size_t>(p.images_[i])] = static_cast<int>(i);
  }
  return r;
}

Permutation power(const Permutation& p, long long t) {
  Permutation base = t < 0 ? inverse(p) : p;
  unsigned long long e = t < 0 ? static_cast<unsigned long long>(-(t + 1)) + 1 : static_cast<unsigned long long>(t);
  Permutation result = Permutation::identity(p.degree());
  while (e > 0) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

std::vector<int> fix_set(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i <= p.degree(); ++i) {
    if (p(i) == i) out.push_back(i);
  }
  return out;
}

std::vector<int> moved_set(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i <= p.degree(); ++i) {
    if (p(i) != i) out.push_back(i);
  }
  return out;
}

CycleDecomposition decompose(const Permutation& p) {
  const int n = p.degree();
  CycleDecomposition d;
  d.degree = n;
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  for (int start = 1; start <= n; ++start) {
    if (visited[static_cast<std::size_t>(start - 1)] || p(start) == start) continue;
    std::vector<int> orbit;
    for (int x = start; !visited[static_cast<std::size_t>(x - 1)]; x = p(x)) {
      visited[static_cast<std::size_t>(x - 1)] = true;
      orbit.push_back(x);
    }
    // start is the smallest unvisited point, so the orbit is already canonical
    d.cycles.emplace_back(n, std::move(orbit));
  }
  return d;
}

Permutation from_cycles(int n, const std::vector<Cycle>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(images.size(), false);
  for (const Cycle& c : cycles) {
    require_same_degree(n, c.degree());
    const auto& s = c.support();
    for (std::size_t k = 0; k < s.size(); ++k) {
      auto idx = static_cast<std::size_t>(s[k] - 1);
      if (used[idx]) throw InputError("cycles overlap at point " + std::to_string(s[k]));
      used[idx] = true;
      images[idx] = s[(k + 1) % s.size()];
    }
  }
  return Permutation(images);
}

Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<Cycle> built;
  built.reserve(cycles.size());
  for (const auto& c : cycles) built.emplace_back(n, c);
  return from_cycles(n, built);
}

std::pair<Permutation, Permutation> two_involution_factorization(const Permutation& p) {
  const int n = p.degree();
  if (compose(p, p).is_identity()) return {p, Permutation::identity(n)};

  std::vector<int> alpha(static_cast<std::size_t>(n));
  std::vector<int> beta(static_cast<std::size_t>(n));
  std::iota(alpha.begin(), alpha.end(), 1);
  std::iota(beta.begin(), beta.end(), 1);
  // For a cycle (a_1 ... a_s): beta reflects a_k -> a_{s+1-k}, alpha reflects
  // a_k -> a_{s+2-k} (indices mod s), so alpha(beta(a_k)) = a_{k+1}.
  for (const Cycle& c : decompose(p).cycles) {
    const auto& a = c.support();
    const std::size_t s = a.size();
    for (std::size_t k = 0; k < s; ++k) {
      beta[static_cast<std::size_t>(a[k] - 1)] = a[s - 1 - k];
      alpha[static_cast<std::size_t>(a[k] - 1)] = a[(s - k) % s];
    }
  }
  return {Permutation(alpha), Permutation(beta)};
}

int sign(const Permutation& p) {
  int transpositions = 0;
  for (const Cycle& c : decompose(p).cycles) transpositions += static_cast<int>(c.length()) - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

std::vector<int> cycle_type(const Permutation& p) {
  std::vector<int> lengths;
  int moved = 0;
  for (const Cycle& c : decompose(p).cycles) {
    lengths.push_back(static_cast<int>(c.length()));
    moved += static_cast<int>(c.length());
  }
  lengths.insert(lengths.end(), static_cast<std::size_t>(p.degree() - moved), 1);
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::string to_cycle_string(const Permutation& p) {
  const auto d = decompose(p);
  if (d.cycles.empty()) return "()";
  std::string out;
  for (const Cycle& c : d.cycles) {
    out += '(';
    for (std::size_t k = 0; k < c.support().size(); ++k) {
      if (k > 0) out += ' ';
      out += std::to_string(c.support()[k]);
    }
    out += ')';
  }
  return out;
}

namespace {

void check_cap(int n, int cap) {
  if (n < 1) throw InputError("degree must be at least 1");
  if (n > cap) throw CapExceeded(n, cap);
}

}  // namespace

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit, int cap) {
  check_cap(n, cap);
  // reversed holds (a_n, ..., a_1); walking it in decreasing lexicographic
  // order keeps large points fixed for as long as possible.
  std::vector<int> reversed(static_cast<std::size_t>(n));
  std::iota(reversed.rbegin(), reversed.rend(), 1);
  std::vector<int> images(reversed.size());
  do {
    std::reverse_copy(reversed.begin(), reversed.end(), images.begin());
    visit(Permutation(images));
  } while (std::prev_permutation(reversed.begin(), reversed.end()));
}

std::vector<Permutation> enumerate_sn(int n, int cap) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); }, cap);
  return out;
}

std::vector<Permutation> enumerate_f3c(int n, int cap) {
  std::vector<Permutation> out;
  for_each_permutation(
      n,
      [&](const Permutation& p) {
        if (moved_set(p).size() <= 3) out.push_back(p);
      },
      cap);
  return out;
}

}  // namespace gmf
