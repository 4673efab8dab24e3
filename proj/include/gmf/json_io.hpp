#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>

#include "gmf/class_sets.hpp"
#include "gmf/exact.hpp"
#include "gmf/matrix.hpp"
#include "gmf/permutation.hpp"
#include "gmf/weights.hpp"

namespace gmf {

using Json = nlohmann::ordered_json;

/// {"n": 5, "images": [...]}.
Json to_json(const Permutation& p);
/// Accepts {"n", "images"} or {"n", "cycles"}.
Permutation permutation_from_json(const Json& j);

/// Cycle notation such as "(1 2 3)(4 5)" or "()" with an explicit degree.
/// Without a degree, the largest point named is used.
Permutation parse_cycle_notation(std::string_view text, std::optional<int> degree = std::nullopt);

/// The rational string form, see ExactComplex::to_string.
Json to_json(const ExactComplex& z);
ExactComplex exact_from_json(const Json& j);

/// {"n": 3, "entries": [["1","0"], ...]}.
Json to_json(const SquareMatrix& m);
SquareMatrix matrix_from_json(const Json& j);

/// {"representative": <perm>, "members": [...], "size": k}.
Json to_json(const PermClass& c);
Json to_json(const XSet& x);
Json to_json(const XSetPartition& partition);

/// {"n", "group": [<perm>...], "chi": [{"perm", "re", "im"}...]}.
Json to_json(const WeightedGroup& w);

/// Accepts
///   {"n", "group": "S_n" | "A_n" | "cyclic:<cycles>" | [<perm>...],
///    "chi": [{"perm", "re", "im"}...] | "chi_builtin": "trivial" | "sign"}
///   {"n", "class_table": {"[3,1]": {"re", "im"}, ...}}
/// An explicit group list is validated as a subgroup.
WeightedGroup weighted_group_from_json(const Json& j, int cap = kDefaultEnumerationCap);

/// Parses JSON text, converting parse errors into InputError.
Json parse_json_text(std::string_view text);

}  // namespace gmf
