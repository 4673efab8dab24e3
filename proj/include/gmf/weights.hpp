#pragma once

#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "gmf/exact.hpp"
#include "gmf/permutation.hpp"

namespace gmf {

/// A subgroup G of S_n together with a complex-valued function chi on G.
/// Construction validates that G contains the identity and is closed under
/// composition and inversion, unless the caller marks the element list as
/// trusted (used for groups generated here).
class WeightedGroup {
 public:
  WeightedGroup(int n, std::vector<Permutation> elements, std::vector<ExactComplex> chi,
                std::string label, bool trusted = false);

  int degree() const { return n_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Sorted.
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<ExactComplex>& values() const { return chi_; }
  std::size_t order() const { return elements_.size(); }

  bool contains(const Permutation& p) const { return index_.contains(p); }
  /// chi(p); throws InputError if p is outside G.
  const ExactComplex& chi(const Permutation& p) const;

  bool is_full_symmetric_group() const;
  /// chi(g x g^-1) = chi(x) for all g, x in G.
  bool is_class_function() const;

 private:
  int n_;
  std::vector<Permutation> elements_;
  std::vector<ExactComplex> chi_;
  std::unordered_map<Permutation, std::size_t> index_;
  std::string label_;
};

/// chi(p) when p is in G, zero otherwise.
ExactComplex chi_hat(const WeightedGroup& w, const Permutation& p);

/// "trivial" (chi = 1) or "sign" on S_n.
WeightedGroup built_in_weights(const std::string& name, int n, int cap = kDefaultEnumerationCap);

/// Keys are cycle types in non-increasing order, e.g. {3, 1}.
using ClassTable = std::map<std::vector<int>, ExactComplex>;

/// chi(sigma) = table[cycle_type(sigma)] on S_n. Throws InputError when a
/// cycle type is missing.
WeightedGroup class_function_weights(int n, const ClassTable& table, int cap = kDefaultEnumerationCap);

/// Builds weights on an explicit group from a function of the element.
WeightedGroup weights_from_function(int n, std::vector<Permutation> elements,
                                    const std::function<ExactComplex(const Permutation&)>& chi,
                                    std::string label, bool trusted = false);

/// psi(sigma) = phi(sigma^-1) on the same group.
WeightedGroup inverted_weights(const WeightedGroup& w);

std::vector<Permutation> symmetric_group(int n, int cap = kDefaultEnumerationCap);
std::vector<Permutation> alternating_group(int n, int cap = kDefaultEnumerationCap);
/// Powers generator^0, ..., generator^(k-1), in that order.
std::vector<Permutation> cyclic_group(const Permutation& generator);
/// Closure of the generators under composition.
std::vector<Permutation> generated_group(int n, const std::vector<Permutation>& generators);

/// Partitions of n in non-increasing order, listed in reverse lexicographic
/// order starting with {n}.
std::vector<std::vector<int>> partitions(int n);

std::string cycle_type_key(const std::vector<int>& type);

}  // namespace gmf
