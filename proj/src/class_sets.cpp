#include "gmf/class_sets.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "gmf/error.hpp"

namespace gmf {

void normalize(PermSet& set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
}

bool contains(const PermSet& set, const Permutation& p) {
  return std::binary_search(set.begin(), set.end(), p);
}

namespace {

// Elementwise products of two sets whose supports are disjoint.
PermSet product(const PermSet& lhs, const PermSet& rhs) {
  PermSet out;
  out.reserve(lhs.size() * rhs.size());
  for (const auto& a : lhs) {
    for (const auto& b : rhs) out.push_back(compose(a, b));
  }
  normalize(out);
  return out;
}

PermSet cycle_and_inverse(const Cycle& c) {
  Permutation p = c.to_permutation();
  PermSet out{p, inverse(p)};
  normalize(out);
  return out;
}

bool is_type_two(const Cycle& c) { return c.length() >= 4 && c.length() % 2 == 0; }

Permutation split_at_first(const Cycle& c) {
  const auto& a = c.support();
  std::vector<std::vector<int>> pairs;
  for (std::size_t k = 0; k + 1 < a.size(); k += 2) pairs.push_back({a[k], a[k + 1]});
  return from_cycles(c.degree(), pairs);
}

Permutation split_at_last(const Cycle& c) {
  const auto& a = c.support();
  std::vector<std::vector<int>> pairs{{a.back(), a.front()}};
  for (std::size_t k = 1; k + 2 < a.size(); k += 2) pairs.push_back({a[k], a[k + 1]});
  return from_cycles(c.degree(), pairs);
}

}  // namespace

PermClass equivalence_class(const Permutation& p) {
  PermSet members{Permutation::identity(p.degree())};
  for (const Cycle& c : decompose(p).cycles) members = product(members, cycle_and_inverse(c));
  return PermClass{members.front(), std::move(members)};
}

PermSet s_split(const Cycle& c) {
  if (c.length() % 2 != 0) {
    throw InputError("s_split needs an even cycle, got length " + std::to_string(c.length()));
  }
  PermSet out{split_at_first(c), split_at_last(c)};
  normalize(out);
  return out;
}

PermSet x_set_cycle(const Cycle& c) {
  PermSet out = cycle_and_inverse(c);
  if (c.length() % 2 == 0) {
    for (auto& s : s_split(c)) out.push_back(std::move(s));
    normalize(out);
  }
  return out;
}

XSet x_set(const Permutation& p) {
  PermSet members{Permutation::identity(p.degree())};
  for (const Cycle& c : decompose(p).cycles) members = product(members, x_set_cycle(c));
  return XSet{p, std::move(members)};
}

int type_two_cycle_count(const Permutation& p) {
  const auto cycles = decompose(p).cycles;
  return static_cast<int>(std::count_if(cycles.begin(), cycles.end(), is_type_two));
}

PermType type_of(const Permutation& p) {
  return type_two_cycle_count(p) > 0 ? PermType::TypeII : PermType::TypeI;
}

XSetPartition x_set_partition(const Permutation& p) {
  const int n = p.degree();
  const auto cycles = decompose(p).cycles;
  std::vector<std::size_t> type_two;  // positions in `cycles`
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    if (is_type_two(cycles[k])) type_two.push_back(k);
  }
  const std::size_t l = type_two.size();

  XSetPartition result{p, equivalence_class(p), {}};

  // Index sets ordered by size, then lexicographically.
  std::vector<unsigned> masks;
  for (unsigned mask = 1; mask < (1u << l); ++mask) masks.push_back(mask);
  std::sort(masks.begin(), masks.end(), [&](unsigned a, unsigned b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    for (std::size_t i = 0; i < l; ++i) {
      const bool ia = (a >> i) & 1u;
      const bool ib = (b >> i) & 1u;
      if (ia != ib) return ia;
    }
    return false;
  });

  for (unsigned mask : masks) {
    XSetPiece piece;
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < l; ++i) {
      if ((mask >> i) & 1u) {
        piece.index_set.push_back(static_cast<int>(i + 1));
        chosen.push_back(type_two[i]);
      }
    }
    // One class per choice of split for each chosen cycle.
    for (unsigned pick = 0; pick < (1u << chosen.size()); ++pick) {
      Permutation tau = Permutation::identity(n);
      for (std::size_t k = 0; k < cycles.size(); ++k) {
        auto it = std::find(chosen.begin(), chosen.end(), k);
        if (it == chosen.end()) {
          tau = compose(tau, cycles[k].to_permutation());
        } else {
          auto bit = static_cast<std::size_t>(it - chosen.begin());
          const bool last = (pick >> bit) & 1u;
          tau = compose(tau, last ? split_at_last(cycles[k]) : split_at_first(cycles[k]));
        }
      }
      piece.classes.push_back(equivalence_class(tau));
    }
    result.pieces.push_back(std::move(piece));
  }
  return result;
}

std::vector<PermClass> class_partition(int n, int cap) {
  std::vector<PermClass> classes;
  std::unordered_map<Permutation, std::size_t> seen;
  for_each_permutation(
      n,
      [&](const Permutation& p) {
        if (seen.contains(p)) return;
        PermClass c = equivalence_class(p);
        for (const auto& m : c.members) seen.emplace(m, classes.size());
        classes.push_back(std::move(c));
      },
      cap);
  return classes;
}

}  // namespace gmf
