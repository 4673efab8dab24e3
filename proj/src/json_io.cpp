#include "gmf/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "gmf/error.hpp"

namespace gmf {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int require_degree(const Json& j) {
  const Json& n = require(j, "n");
  if (!n.is_number_integer() || n.get<int>() < 1) throw InputError("field 'n' must be a positive integer");
  return n.get<int>();
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError(std::string(what) + " must be an array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const Permutation& p) { return Json{{"n", p.degree()}, {"images", p.images()}}; }

Permutation permutation_from_json(const Json& j) {
  const int n = require_degree(j);
  if (j.contains("images")) {
    auto images = int_list(j.at("images"), "images");
    if (static_cast<int>(images.size()) != n) throw DegreeMismatch(n, static_cast<int>(images.size()));
    return Permutation(images);
  }
  if (j.contains("cycles")) {
    const Json& cycles = j.at("cycles");
    if (!cycles.is_array()) throw InputError("cycles must be an array of arrays");
    std::vector<std::vector<int>> parsed;
    for (const auto& c : cycles) {
      auto points = int_list(c, "cycle");
      if (points.size() >= 2) parsed.push_back(std::move(points));
    }
    return from_cycles(n, parsed);
  }
  throw InputError("permutation needs 'images' or 'cycles'");
}

Permutation parse_cycle_notation(std::string_view text, std::optional<int> degree) {
  std::vector<std::vector<int>> cycles;
  std::vector<int>* current = nullptr;
  int largest = 1;
  for (std::size_t k = 0; k < text.size();) {
    const char c = text[k];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++k;
    } else if (c == '(') {
      if (current) throw InputError("nested '(' in cycle notation");
      current = &cycles.emplace_back();
      ++k;
    } else if (c == ')') {
      if (!current) throw InputError("unbalanced ')' in cycle notation");
      current = nullptr;
      ++k;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!current) throw InputError("point outside parentheses in cycle notation");
      std::size_t end = k;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      const int v = std::stoi(std::string(text.substr(k, end - k)));
      current->push_back(v);
      largest = std::max(largest, v);
      k = end;
    } else {
      throw InputError("unexpected character '" + std::string(1, c) + "' in cycle notation");
    }
  }
  if (current) throw InputError("unterminated cycle in cycle notation");
  std::erase_if(cycles, [](const auto& c) { return c.size() < 2; });
  return from_cycles(degree.value_or(largest), cycles);
}

Json to_json(const ExactComplex& z) { return z.to_string(); }

ExactComplex exact_from_json(const Json& j) {
  if (j.is_string()) return ExactComplex::parse(j.get<std::string>());
  if (j.is_number_integer()) return ExactComplex(j.get<long>());
  if (j.is_object()) {
    Rational re = j.contains("re") ? exact_from_json(j.at("re")).re() : Rational(0);
    Rational im = j.contains("im") ? exact_from_json(j.at("im")).re() : Rational(0);
    return {re, im};
  }
  throw InputError("number must be a rational string such as \"3/4\" or \"1/2+1 i\"");
}

Json to_json(const SquareMatrix& m) {
  Json rows = Json::array();
  for (int i = 1; i <= m.degree(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= m.degree(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.degree()}, {"entries", std::move(rows)}};
}

SquareMatrix matrix_from_json(const Json& j) {
  const int n = require_degree(j);
  const Json& entries = require(j, "entries");
  if (!entries.is_array() || static_cast<int>(entries.size()) != n) {
    throw InputError("entries must be an array of " + std::to_string(n) + " rows");
  }
  std::vector<std::vector<ExactComplex>> rows;
  for (const auto& row : entries) {
    if (!row.is_array()) throw InputError("each matrix row must be an array");
    auto& out = rows.emplace_back();
    for (const auto& v : row) out.push_back(exact_from_json(v));
  }
  SquareMatrix m(rows);
  m.verify_symmetric();
  return m;
}

Json to_json(const PermClass& c) {
  Json members = Json::array();
  for (const auto& m : c.members) members.push_back(to_json(m));
  return Json{{"representative", to_json(c.representative)}, {"members", std::move(members)},
              {"size", c.members.size()}};
}

Json to_json(const XSet& x) {
  Json members = Json::array();
  for (const auto& m : x.members) members.push_back(to_json(m));
  return Json{{"representative", to_json(x.source)}, {"members", std::move(members)},
              {"size", x.members.size()}};
}

Json to_json(const XSetPartition& partition) {
  Json pieces = Json::array();
  for (const auto& piece : partition.pieces) {
    Json classes = Json::array();
    for (const auto& c : piece.classes) classes.push_back(to_json(c));
    pieces.push_back(Json{{"index_set", piece.index_set}, {"classes", std::move(classes)}});
  }
  return Json{{"source", to_json(partition.source)},
              {"own_class", to_json(partition.own_class)},
              {"pieces", std::move(pieces)}};
}

Json to_json(const WeightedGroup& w) {
  Json group = Json::array();
  Json chi = Json::array();
  for (std::size_t k = 0; k < w.order(); ++k) {
    group.push_back(to_json(w.elements()[k]));
    const ExactComplex& v = w.values()[k];
    chi.push_back(Json{{"perm", to_json(w.elements()[k])},
                       {"re", format_rational(v.re())},
                       {"im", format_rational(v.im())}});
  }
  return Json{{"n", w.degree()}, {"label", w.label()}, {"group", std::move(group)}, {"chi", std::move(chi)}};
}

namespace {

std::vector<int> parse_type_key(const std::string& key) {
  std::vector<int> type;
  std::string digits;
  for (char c : key) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
    } else if (c == ',' || c == ']') {
      if (!digits.empty()) type.push_back(std::stoi(digits));
      digits.clear();
    } else if (c != '[' && !std::isspace(static_cast<unsigned char>(c))) {
      throw InputError("bad cycle-type key '" + key + "'");
    }
  }
  if (!digits.empty()) type.push_back(std::stoi(digits));
  std::sort(type.begin(), type.end(), std::greater<>());
  return type;
}

std::pair<std::vector<Permutation>, bool> group_elements(const Json& j, int n, int cap) {
  const Json group = j.contains("group") ? j.at("group") : Json("S_n");
  if (group.is_string()) {
    const auto name = group.get<std::string>();
    if (name == "S_n") return {symmetric_group(n, cap), true};
    if (name == "A_n") return {alternating_group(n, cap), true};
    if (name.rfind("cyclic:", 0) == 0) return {cyclic_group(parse_cycle_notation(name.substr(7), n)), true};
    throw InputError("unknown group shorthand '" + name + "' (expected S_n, A_n or cyclic:<cycles>)");
  }
  if (!group.is_array()) throw InputError("group must be a shorthand string or an array of permutations");
  std::vector<Permutation> elements;
  for (const auto& p : group) {
    Permutation perm = permutation_from_json(p);
    require_same_degree(n, perm.degree());
    elements.push_back(std::move(perm));
  }
  return {std::move(elements), false};
}

}  // namespace

WeightedGroup weighted_group_from_json(const Json& j, int cap) {
  const int n = require_degree(j);
  const std::string label = j.contains("label") ? j.at("label").get<std::string>() : "custom";

  if (j.contains("class_table")) {
    const Json& table = j.at("class_table");
    if (!table.is_object()) throw InputError("class_table must be an object keyed by cycle type");
    ClassTable parsed;
    for (const auto& [key, value] : table.items()) {
      auto type = parse_type_key(key);
      int total = 0;
      for (int part : type) total += part;
      if (total != n) throw InputError("cycle type " + key + " is not a partition of " + std::to_string(n));
      parsed[type] = exact_from_json(value);
    }
    WeightedGroup w = class_function_weights(n, parsed, cap);
    w.set_label(label == "custom" ? "class-table" : label);
    return w;
  }

  auto [elements, trusted] = group_elements(j, n, cap);

  if (j.contains("chi_builtin")) {
    const auto name = j.at("chi_builtin").get<std::string>();
    if (name != "trivial" && name != "sign") {
      throw InputError("unknown chi_builtin '" + name + "' (expected trivial or sign)");
    }
    const bool is_sign = name == "sign";
    return weights_from_function(
        n, std::move(elements),
        [is_sign](const Permutation& p) { return ExactComplex(is_sign ? sign(p) : 1); },
        label == "custom" ? name : label, trusted);
  }

  const Json& chi = require(j, "chi");
  if (!chi.is_array()) throw InputError("chi must be an array of {perm, re, im}");
  std::unordered_map<Permutation, ExactComplex> values;
  for (const auto& entry : chi) {
    Permutation p = permutation_from_json(require(entry, "perm"));
    require_same_degree(n, p.degree());
    values[p] = exact_from_json(entry);
  }
  std::vector<ExactComplex> ordered;
  for (const auto& p : elements) {
    auto it = values.find(p);
    if (it == values.end()) throw InputError("chi missing value for group element " + to_cycle_string(p));
    ordered.push_back(it->second);
  }
  if (values.size() != elements.size()) throw InputError("chi assigns values outside the group");
  return WeightedGroup(n, std::move(elements), std::move(ordered), label, trusted);
}

}  // namespace gmf
