#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gmf/json_io.hpp"
#include "gmf/matrix.hpp"
#include "gmf/weights.hpp"

namespace gmf {

/// Result of one checker run.
///
/// `holds` reports whether the checked statement survived. `outcome` names
/// which branch of the statement applied (for example "equal" or
/// "not-equal"), and `witness` carries the concrete objects behind it. A
/// false verdict always has a witness. `recheck` rebuilds the witness values
/// from scratch and returns true when the recorded inequality reproduces.
struct Verdict {
  std::string claim;
  std::string subject;
  bool holds = false;
  std::string outcome;
  std::uint64_t cases = 0;
  Json witness;  // null when absent
  Json details = Json::object();
  std::function<bool()> recheck;

  bool has_witness() const { return !witness.is_null(); }
};

Json to_json(const Verdict& v);

struct SamplingOptions {
  int trials = 100;
  std::uint64_t seed = 0;
  int bound = 5;
};

/// Seed for the k-th sampled matrix of a run.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t k);

/// sum over all of S_n of chi_hat(sigma) * prod_i A[i, sigma(i)], with its own
/// permutation generator (Heap's algorithm).
ExactComplex brute_force_gmf(const WeightedGroup& w, const SquareMatrix& a);

/// For every sigma: evaluate(w, S_sigma) == sum of chi_hat over X_sigma.
Verdict check_ssigma_sum(const WeightedGroup& w);

/// For every sigma in S_n: permanent(S_sigma) == |X_sigma|.
Verdict check_perm_xset(int n, int cap = kDefaultEnumerationCap);

/// Compares class sums of chi_hat over every [sigma]. On a mismatch, scans
/// S_n for a sigma whose S_sigma separates the two functions.
Verdict check_equality_criterion(const WeightedGroup& w1, const WeightedGroup& w2);

/// Confirms the criterion by sampling random symmetric matrices (equal case)
/// or by re-evaluating the separating S_sigma (not-equal case).
Verdict cross_validate_equality(const WeightedGroup& w1, const WeightedGroup& w2,
                                const SamplingOptions& options = {});

/// chi_hat(sigma) == chi_hat(sigma^-1) for all sigma, then either sampled
/// d(A) = d(A^T) and d(AB) = d(BA), or a symmetric pair built from a
/// two-involution factorization that breaks d(AB) = d(BA).
Verdict check_transpose_criterion(const WeightedGroup& w, const SamplingOptions& options = {});

/// (S_sigma^2)[i, j] == C_sigma(i, j) + delta_ij for every 3-cycle. n >= 3.
Verdict check_lemma_ssq(int n, int cap = kDefaultEnumerationCap);

/// Multiplicativity of d on products S_sigma S_tau for sigma, tau moving at
/// most three points, against agreement with the determinant. At n = 2 the
/// all-2s matrix is also probed, since the S_sigma pairs alone cannot tell
/// the permanent from the determinant there. Requires a class function with
/// chi(id) != 0.
Verdict check_det_multiplicativity(const WeightedGroup& w, const SamplingOptions& options = {});

/// For class functions on all of S_n: the equality criterion says "equal"
/// exactly when the two tables coincide.
Verdict check_character_equality_corollary(const WeightedGroup& w1, const WeightedGroup& w2);

/// evaluate versus brute_force_gmf on random matrices.
Verdict check_gmf_oracle(const WeightedGroup& w, const SamplingOptions& options = {});

struct WeightSuite {
  std::vector<WeightedGroup> weights;
  const WeightedGroup& get(const std::string& label) const;
  bool has(const std::string& label) const;
};

/// trivial, sign, cyclic-i (n divisible by 4), alternating-trivial (n >= 3),
/// random-class-table, random-function, random-function-inverted.
WeightSuite standard_suite(int n, std::uint64_t seed, int cap = kDefaultEnumerationCap);

/// Every checker over the standard suite. Deterministic for a given seed;
/// the order of the returned verdicts is fixed.
std::vector<Verdict> run_all(int n, std::uint64_t seed, int trials = 100, int cap = kDefaultEnumerationCap);

/// One line per verdict, fixed-width columns.
std::string format_table(const std::vector<Verdict>& verdicts);

}  // namespace gmf
