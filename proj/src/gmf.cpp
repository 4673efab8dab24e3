#include "gmf/gmf.hpp"

#include <bit>
#include <utility>

#include "gmf/error.hpp"

namespace gmf {

ExactComplex diagonal_product(const SquareMatrix& a, const Permutation& sigma) {
  require_same_degree(a.degree(), sigma.degree());
  ExactComplex product(1);
  for (int i = 1; i <= a.degree(); ++i) {
    const ExactComplex& entry = a(i, sigma(i));
    if (entry.is_zero()) return {};
    product *= entry;
  }
  return product;
}

ExactComplex evaluate(const WeightedGroup& w, const SquareMatrix& a) {
  require_same_degree(w.degree(), a.degree());
  ExactComplex total;
  const auto& elements = w.elements();
  const auto& values = w.values();
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (values[k].is_zero()) continue;
    ExactComplex term = diagonal_product(a, elements[k]);
    if (term.is_zero()) continue;
    total += values[k] * term;
  }
  return total;
}

SquareMatrix s_sigma_matrix(const Permutation& sigma) {
  const int n = sigma.degree();
  const Permutation sigma_inv = inverse(sigma);
  SquareMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    m.set(i, sigma(i), 1);
    m.set(i, sigma_inv(i), 1);
  }
  m.verify_symmetric();
  return m;
}

SquareMatrix permutation_matrix(const Permutation& sigma) {
  SquareMatrix m(sigma.degree());
  for (int i = 1; i <= sigma.degree(); ++i) m.set(i, sigma(i), 1);
  m.verify_symmetric();
  return m;
}

ExactComplex permanent(const SquareMatrix& a) {
  const int n = a.degree();
  if (n > 30) throw InputError("permanent: degree too large for subset enumeration");
  std::vector<ExactComplex> row_sums(static_cast<std::size_t>(n));
  ExactComplex total;
  std::uint64_t gray = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const int column = std::countr_zero(k) + 1;
    const std::uint64_t bit = std::uint64_t{1} << (column - 1);
    gray ^= bit;
    const bool added = (gray & bit) != 0;
    ExactComplex product(1);
    for (int i = 1; i <= n; ++i) {
      auto& s = row_sums[static_cast<std::size_t>(i - 1)];
      if (added) {
        s += a(i, column);
      } else {
        s -= a(i, column);
      }
      if (!product.is_zero()) product *= s;
    }
    if (product.is_zero()) continue;
    if (std::popcount(gray) % 2 == 0) {
      total += product;
    } else {
      total -= product;
    }
  }
  return n % 2 == 0 ? total : -total;
}

ExactComplex permanent_naive(const SquareMatrix& a) {
  ExactComplex total;
  for_each_permutation(
      a.degree(), [&](const Permutation& p) { total += diagonal_product(a, p); }, a.degree());
  return total;
}

ExactComplex determinant(const SquareMatrix& a) {
  const auto n = static_cast<std::size_t>(a.degree());
  std::vector<std::vector<ExactComplex>> m(n, std::vector<ExactComplex>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(static_cast<int>(i + 1), static_cast<int>(j + 1));
  }
  bool negate = false;
  ExactComplex previous(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return {};
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
      }
      m[i][k] = ExactComplex{};
    }
    previous = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

int c_sigma(const Permutation& sigma, int i, int j) {
  const int n = sigma.degree();
  if (i < 1 || i > n || j < 1 || j > n) {
    throw InputError("index (" + std::to_string(i) + ", " + std::to_string(j) + ") outside [1, " +
                     std::to_string(n) + "]");
  }
  return sigma(i) != i && sigma(j) != j ? 1 : 0;
}

}  // namespace gmf
