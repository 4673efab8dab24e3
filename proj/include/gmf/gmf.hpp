#pragma once

#include "gmf/exact.hpp"
#include "gmf/matrix.hpp"
#include "gmf/permutation.hpp"
#include "gmf/weights.hpp"

namespace gmf {

/// prod_i A[i, sigma(i)].
ExactComplex diagonal_product(const SquareMatrix& a, const Permutation& sigma);

/// Generalized matrix function: sum over g in G of chi(g) * prod_i A[i, g(i)].
ExactComplex evaluate(const WeightedGroup& w, const SquareMatrix& a);

/// 1 at (i, j) iff j = sigma(i) or j = sigma^-1(i).
SquareMatrix s_sigma_matrix(const Permutation& sigma);

/// 1 at (i, sigma(i)).
SquareMatrix permutation_matrix(const Permutation& sigma);

/// Ryser inclusion-exclusion over column subsets in Gray-code order.
ExactComplex permanent(const SquareMatrix& a);

/// Direct sum over S_n; kept as the reference for permanent().
ExactComplex permanent_naive(const SquareMatrix& a);

/// Fraction-free (Bareiss) elimination with row pivoting.
ExactComplex determinant(const SquareMatrix& a);

/// 1 iff both i and j are moved by sigma.
int c_sigma(const Permutation& sigma, int i, int j);

}  // namespace gmf
