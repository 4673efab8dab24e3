#pragma once

#include <cstdint>
#include <vector>

#include "gmf/exact.hpp"

namespace gmf {

/// Dense n x n matrix over the Gaussian rationals. Indices are 1-based at the
/// public accessors. The symmetric marker is set only after a full check.
class SquareMatrix {
 public:
  explicit SquareMatrix(int n);
  /// rows must be n x n; throws InputError otherwise.
  explicit SquareMatrix(const std::vector<std::vector<ExactComplex>>& rows);

  static SquareMatrix identity(int n);

  int degree() const { return n_; }

  const ExactComplex& operator()(int i, int j) const { return entries_[index(i, j)]; }
  void set(int i, int j, ExactComplex value);

  /// Cached result of the last verify_symmetric(); cleared by set().
  bool symmetric() const { return symmetric_; }
  bool verify_symmetric();

  SquareMatrix transpose() const;

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1);
  }

  int n_;
  std::vector<ExactComplex> entries_;
  bool symmetric_ = false;
};

/// Symmetric matrix with integer entries in [-bound, bound], reproducible
/// from seed.
SquareMatrix random_symmetric_matrix(int n, std::uint64_t seed, int bound);

/// Unstructured integer matrix with entries in [-bound, bound].
SquareMatrix random_matrix(int n, std::uint64_t seed, int bound);

}  // namespace gmf
