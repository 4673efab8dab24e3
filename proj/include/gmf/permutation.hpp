#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace gmf {

inline constexpr int kDefaultEnumerationCap = 9;

/// A bijection of {1, ..., n}. Points are 1-based at every public accessor;
/// the 0-based storage never leaves this class.
class Permutation {
 public:
  /// Builds from a 1-based image array; throws InputError unless it is a
  /// bijection of {1..n} with n >= 1.
  explicit Permutation(const std::vector<int>& images);

  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }

  /// sigma(i) for 1-based i.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)] + 1; }

  std::vector<int> images() const;

  bool is_identity() const;

  /// Lexicographic on the image array.
  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

  std::size_t hash() const;

 private:
  Permutation() = default;
  std::vector<int> images_;  // 0-based

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
};

/// A cycle of length >= 2, rotated so its smallest point comes first.
class Cycle {
 public:
  Cycle(int degree, std::vector<int> support);

  int degree() const { return degree_; }
  std::size_t length() const { return support_.size(); }
  const std::vector<int>& support() const { return support_; }

  Permutation to_permutation() const;

  bool operator==(const Cycle&) const = default;

 private:
  int degree_;
  std::vector<int> support_;
};

struct CycleDecomposition {
  int degree = 1;
  std::vector<Cycle> cycles;  // disjoint, sorted by first (= minimum) point
};

/// (p o q)(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
Permutation power(const Permutation& p, long long t);

std::vector<int> fix_set(const Permutation& p);
std::vector<int> moved_set(const Permutation& p);

CycleDecomposition decompose(const Permutation& p);
Permutation from_cycles(int n, const std::vector<Cycle>& cycles);
Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

/// Returns (alpha, beta) with alpha o beta = p and alpha^2 = beta^2 = id.
std::pair<Permutation, Permutation> two_involution_factorization(const Permutation& p);

/// Parity sign, +1 or -1.
int sign(const Permutation& p);

/// Cycle lengths including fixed points, in non-increasing order.
std::vector<int> cycle_type(const Permutation& p);

/// "(1 2 3)(4 5)"; the identity prints as "()".
std::string to_cycle_string(const Permutation& p);

/// All of S_n. The order lists permutations fixing n first, recursively, so
/// that S_1, S_2, ... appear as prefixes (identity first, then (1 2), ...).
std::vector<Permutation> enumerate_sn(int n, int cap = kDefaultEnumerationCap);

/// Calls visit on each permutation of S_n in enumerate_sn order without
/// materializing the list.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit,
                          int cap = kDefaultEnumerationCap);

/// Permutations moving at most three points, in enumerate_sn order.
std::vector<Permutation> enumerate_f3c(int n, int cap = kDefaultEnumerationCap);

}  // namespace gmf

template <>
struct std::hash<gmf::Permutation> {
  std::size_t operator()(const gmf::Permutation& p) const noexcept { return p.hash(); }
};
