#pragma once

#include <vector>

#include "gmf/permutation.hpp"

namespace gmf {

/// Sorted, duplicate-free list of permutations of one degree.
using PermSet = std::vector<Permutation>;

/// The class [sigma]: every product of sigma's cycles with each cycle
/// independently kept or inverted.
struct PermClass {
  Permutation representative;  // lexicographically least member
  PermSet members;
};

struct XSet {
  Permutation source;
  PermSet members;
};

enum class PermType { TypeI, TypeII };

struct XSetPiece {
  std::vector<int> index_set;  // 1-based positions among the type-II cycles
  std::vector<PermClass> classes;
};

struct XSetPartition {
  Permutation source;
  PermClass own_class;
  std::vector<XSetPiece> pieces;
};

PermClass equivalence_class(const Permutation& p);

/// The two perfect matchings (a1 a2)(a3 a4)... and (as a1)(a2 a3)... of an
/// even cycle. A transposition yields a single element.
PermSet s_split(const Cycle& c);

/// {c, c^-1} for odd cycles, {c, c^-1} plus s_split(c) for even cycles.
PermSet x_set_cycle(const Cycle& c);

XSet x_set(const Permutation& p);

/// TypeII iff some cycle has even length >= 4.
PermType type_of(const Permutation& p);

/// Number of cycles of even length >= 4.
int type_two_cycle_count(const Permutation& p);

XSetPartition x_set_partition(const Permutation& p);

/// The classes [sigma] covering S_n, ordered by first appearance in
/// enumerate_sn(n).
std::vector<PermClass> class_partition(int n, int cap = kDefaultEnumerationCap);

/// Sorts and removes duplicates.
void normalize(PermSet& set);

bool contains(const PermSet& set, const Permutation& p);

}  // namespace gmf
