#include "gmf/matrix.hpp"

#include <random>

#include "gmf/error.hpp"

namespace gmf {

SquareMatrix::SquareMatrix(int n) : n_(n) {
  if (n < 1) throw InputError("matrix degree must be at least 1");
  entries_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
}

SquareMatrix::SquareMatrix(const std::vector<std::vector<ExactComplex>>& rows)
    : SquareMatrix(static_cast<int>(rows.size())) {
  for (int i = 1; i <= n_; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != n_) {
      throw InputError("matrix row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(n_));
    }
    for (int j = 1; j <= n_; ++j) entries_[index(i, j)] = row[static_cast<std::size_t>(j - 1)];
  }
}

SquareMatrix SquareMatrix::identity(int n) {
  SquareMatrix m(n);
  for (int i = 1; i <= n; ++i) m.entries_[m.index(i, i)] = 1;
  m.symmetric_ = true;
  return m;
}

void SquareMatrix::set(int i, int j, ExactComplex value) {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw InputError("matrix index out of range");
  entries_[index(i, j)] = std::move(value);
  symmetric_ = false;
}

bool SquareMatrix::verify_symmetric() {
  symmetric_ = true;
  for (int i = 1; i <= n_ && symmetric_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      if (!(entries_[index(i, j)] == entries_[index(j, i)])) {
        symmetric_ = false;
        break;
      }
    }
  }
  return symmetric_;
}

SquareMatrix SquareMatrix::transpose() const {
  SquareMatrix t(n_);
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) t.entries_[t.index(j, i)] = entries_[index(i, j)];
  }
  t.symmetric_ = symmetric_;
  return t;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_degree(a.n_, b.n_);
  SquareMatrix c(a.n_);
  for (int i = 1; i <= a.n_; ++i) {
    for (int k = 1; k <= a.n_; ++k) {
      const ExactComplex& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 1; j <= a.n_; ++j) {
        if (!b(k, j).is_zero()) c.entries_[c.index(i, j)] += aik * b(k, j);
      }
    }
  }
  return c;
}

namespace {

// mt19937_64 output is fully specified by the standard, unlike the
// distributions, so the draw is reproducible across standard libraries.
long draw(std::mt19937_64& rng, int bound) {
  const auto width = static_cast<std::uint64_t>(2 * bound + 1);
  return static_cast<long>(rng() % width) - bound;
}

}  // namespace

SquareMatrix random_symmetric_matrix(int n, std::uint64_t seed, int bound) {
  if (bound < 1) throw InputError("entry bound must be at least 1");
  std::mt19937_64 rng(seed);
  SquareMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      const long v = draw(rng, bound);
      m.set(i, j, v);
      m.set(j, i, v);
    }
  }
  m.verify_symmetric();
  return m;
}

SquareMatrix random_matrix(int n, std::uint64_t seed, int bound) {
  if (bound < 1) throw InputError("entry bound must be at least 1");
  std::mt19937_64 rng(seed);
  SquareMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) m.set(i, j, draw(rng, bound));
  }
  return m;
}

}  // namespace gmf
