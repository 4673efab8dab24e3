#include "gmf/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <utility>

#include "gmf/class_sets.hpp"
#include "gmf/error.hpp"
#include "gmf/gmf.hpp"
#include "gmf/json_io.hpp"
#include "gmf/parallel.hpp"
#include "gmf/verify.hpp"

namespace gmf {

namespace {

constexpr std::array<std::pair<const char*, const char*>, 16> kCommands{{
    {"classify", "type (I or II) and cycle type of --perm"},
    {"class", "equivalence class [sigma] of --perm"},
    {"xset", "the set X_sigma of --perm"},
    {"partition", "split X_sigma into equivalence classes"},
    {"ssigma", "print the 0/1 matrix S_sigma"},
    {"eval", "evaluate --weights on --matrix"},
    {"perm", "permanent of --matrix"},
    {"det", "determinant of --matrix"},
    {"factor-involutions", "write --perm as a product of two involutions"},
    {"check-equality", "decide whether --weights and --weights2 agree on symmetric matrices"},
    {"check-transpose", "decide transpose and product invariance for --weights"},
    {"check-ssigma", "d(S_sigma) against the chi sum over X_sigma, all sigma"},
    {"check-perm-xset", "perm(S_sigma) = |X_sigma| for all sigma in S_n"},
    {"check-lemma-ssq", "S_sigma squared against C_sigma + delta for 3-cycles"},
    {"check-det-mult", "multiplicativity against agreement with det"},
    {"verify-all", "every check over the built-in weight suite"},
}};

struct Flags {
  std::string perm;
  std::string weights;
  std::string weights2;
  std::string matrix;
  std::optional<int> n;
  std::uint64_t seed = 0;
  int trials = 100;
  int bound = 5;
  int cap = kDefaultEnumerationCap;
  unsigned threads = 0;
  bool json = false;
};

// Inline JSON, a path to a JSON file, or nullopt when the text is neither.
std::optional<Json> load_json_argument(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) return parse_json_text(text);
  std::error_code ec;
  if (std::filesystem::is_regular_file(text, ec)) {
    std::ifstream in(text);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str());
  }
  return std::nullopt;
}

Permutation load_permutation(const Flags& f) {
  if (f.perm.empty()) throw InputError("--perm is required");
  Permutation p = [&] {
    if (auto j = load_json_argument(f.perm)) return permutation_from_json(*j);
    return parse_cycle_notation(f.perm, f.n);
  }();
  if (f.n) require_same_degree(*f.n, p.degree());
  return p;
}

SquareMatrix load_matrix(const Flags& f) {
  if (f.matrix.empty()) throw InputError("--matrix is required");
  if (f.matrix.rfind("identity", 0) == 0) {
    const std::string digits = f.matrix.substr(8);
    if (digits.empty() || digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits == "0") {
      throw InputError("matrix shorthand must look like identity3");
    }
    SquareMatrix m = SquareMatrix::identity(std::stoi(digits));
    if (f.n) require_same_degree(*f.n, m.degree());
    return m;
  }
  auto j = load_json_argument(f.matrix);
  if (!j) throw InputError("--matrix must be inline JSON, a JSON file, or identityN");
  SquareMatrix m = matrix_from_json(*j);
  if (f.n) require_same_degree(*f.n, m.degree());
  return m;
}

WeightedGroup load_weights(const std::string& spec, std::optional<int> n, int cap) {
  if (spec.empty()) throw InputError("weights are required");
  if (spec == "trivial" || spec == "sign") {
    if (!n) throw InputError("built-in weights '" + spec + "' need a degree (--n or a matrix)");
    return built_in_weights(spec, *n, cap);
  }
  auto j = load_json_argument(spec);
  if (!j) throw InputError("weights must be trivial, sign, inline JSON, or a JSON file");
  WeightedGroup w = weighted_group_from_json(*j, cap);
  if (n) require_same_degree(*n, w.degree());
  return w;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void print_set(std::ostream& out, const std::string& title, const PermSet& members) {
  out << title << ": " << members.size() << " member" << (members.size() == 1 ? "" : "s") << '\n';
  for (const auto& m : members) out << "  " << to_cycle_string(m) << '\n';
}

int report(std::ostream& out, const Flags& f, const std::vector<Verdict>& verdicts, Json header = Json::object()) {
  const bool all = std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.holds; });
  if (f.json) {
    if (verdicts.size() == 1 && header.empty()) {
      emit(out, to_json(verdicts.front()));
    } else {
      header["holds"] = all;
      Json list = Json::array();
      for (const auto& v : verdicts) list.push_back(to_json(v));
      header["verdicts"] = std::move(list);
      emit(out, header);
    }
  } else {
    for (const auto& v : verdicts) {
      out << v.claim << " [" << v.subject << "]: " << v.cases << " cases, " << (v.holds ? "holds" : "FAILS")
          << " (" << v.outcome << ")\n";
      if (v.has_witness()) out << "  witness: " << v.witness.dump() << '\n';
    }
  }
  return all ? kExitOk : kExitCheckFailed;
}

SamplingOptions sampling(const Flags& f) { return {.trials = f.trials, .seed = f.seed, .bound = f.bound}; }

int dispatch(const std::string& command, const Flags& f, std::ostream& out) {
  if (command == "classify") {
    const Permutation p = load_permutation(f);
    const bool type_one = type_of(p) == PermType::TypeI;
    if (f.json) {
      emit(out, Json{{"perm", to_json(p)},
                     {"cycles", to_cycle_string(p)},
                     {"cycle_type", cycle_type(p)},
                     {"type", type_one ? "TypeI" : "TypeII"},
                     {"type_two_cycles", type_two_cycle_count(p)}});
    } else {
      out << (type_one ? "TypeI" : "TypeII") << "  " << to_cycle_string(p) << "  cycle type "
          << cycle_type_key(cycle_type(p)) << '\n';
    }
    return kExitOk;
  }
  if (command == "class") {
    const PermClass c = equivalence_class(load_permutation(f));
    if (f.json) {
      emit(out, to_json(c));
    } else {
      print_set(out, "[" + to_cycle_string(c.representative) + "]", c.members);
    }
    return kExitOk;
  }
  if (command == "xset") {
    const XSet x = x_set(load_permutation(f));
    if (f.json) {
      emit(out, to_json(x));
    } else {
      print_set(out, "X_" + to_cycle_string(x.source), x.members);
    }
    return kExitOk;
  }
  if (command == "partition") {
    const XSetPartition part = x_set_partition(load_permutation(f));
    if (f.json) {
      emit(out, to_json(part));
    } else {
      print_set(out, "own class", part.own_class.members);
      for (const auto& piece : part.pieces) {
        out << "piece {";
        for (std::size_t k = 0; k < piece.index_set.size(); ++k) out << (k ? "," : "") << piece.index_set[k];
        out << "}\n";
        for (const auto& c : piece.classes) print_set(out, "  class", c.members);
      }
    }
    return kExitOk;
  }
  if (command == "ssigma") {
    const SquareMatrix s = s_sigma_matrix(load_permutation(f));
    if (f.json) {
      emit(out, to_json(s));
    } else {
      for (int i = 1; i <= s.degree(); ++i) {
        for (int j = 1; j <= s.degree(); ++j) out << (j > 1 ? " " : "") << s(i, j);
        out << '\n';
      }
    }
    return kExitOk;
  }
  if (command == "eval" || command == "perm" || command == "det") {
    const SquareMatrix m = load_matrix(f);
    ExactComplex value;
    if (command == "eval") {
      value = evaluate(load_weights(f.weights, m.degree(), f.cap), m);
    } else if (command == "perm") {
      value = permanent(m);
    } else {
      value = determinant(m);
    }
    if (f.json) {
      emit(out, Json{{"value", value.to_string()}});
    } else {
      out << value << '\n';
    }
    return kExitOk;
  }
  if (command == "factor-involutions") {
    const Permutation p = load_permutation(f);
    const auto [alpha, beta] = two_involution_factorization(p);
    if (f.json) {
      emit(out, Json{{"perm", to_json(p)}, {"alpha", to_json(alpha)}, {"beta", to_json(beta)}});
    } else {
      out << to_cycle_string(p) << " = " << to_cycle_string(alpha) << " * " << to_cycle_string(beta) << '\n';
    }
    return kExitOk;
  }
  if (command == "check-equality") {
    const auto w1 = load_weights(f.weights, f.n, f.cap);
    const auto w2 = load_weights(f.weights2, w1.degree(), f.cap);
    return report(out, f, {check_equality_criterion(w1, w2), cross_validate_equality(w1, w2, sampling(f))});
  }
  if (command == "check-transpose") {
    return report(out, f, {check_transpose_criterion(load_weights(f.weights, f.n, f.cap), sampling(f))});
  }
  if (command == "check-ssigma") {
    return report(out, f, {check_ssigma_sum(load_weights(f.weights, f.n, f.cap))});
  }
  if (command == "check-det-mult") {
    return report(out, f, {check_det_multiplicativity(load_weights(f.weights, f.n, f.cap), sampling(f))});
  }

  if (!f.n) throw InputError("--n is required for " + command);
  if (command == "check-perm-xset") return report(out, f, {check_perm_xset(*f.n, f.cap)});
  if (command == "check-lemma-ssq") return report(out, f, {check_lemma_ssq(*f.n, f.cap)});
  if (command == "verify-all") {
    const auto verdicts = run_all(*f.n, f.seed, f.trials, f.cap);
    if (!f.json) out << format_table(verdicts);
    const bool all = std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.holds; });
    if (f.json) {
      return report(out, f, verdicts, Json{{"n", *f.n}, {"seed", f.seed}, {"trials", f.trials}});
    }
    out << (all ? "all checks hold\n" : "some checks FAIL\n");
    return all ? kExitOk : kExitCheckFailed;
  }
  throw InputError("unknown command '" + command + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (!args.empty() && args.front().rfind("-", 0) != 0 &&
      std::none_of(kCommands.begin(), kCommands.end(), [&](const auto& c) { return args.front() == c.first; })) {
    err << "error: unknown command '" << args.front() << "'\n";
    return kExitInputError;
  }

  CLI::App app{"Generalized matrix functions: evaluation and exact identity checks", "gmfcheck"};
  app.require_subcommand(1);
  Flags f;
  for (const auto& [name, description] : kCommands) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("--perm", f.perm, "permutation: JSON, JSON file, or cycle notation like \"(1 2 3)\"");
    sub->add_option("--weights", f.weights, "trivial, sign, inline JSON, or a JSON file");
    sub->add_option("--weights2", f.weights2, "second weight function (check-equality)");
    sub->add_option("--matrix", f.matrix, "inline JSON, a JSON file, or identityN");
    sub->add_option("--n", f.n, "degree");
    sub->add_option("--seed", f.seed, "seed for sampled matrices and random weights");
    sub->add_option("--trials", f.trials, "sampled matrices per check")->check(CLI::NonNegativeNumber);
    sub->add_option("--bound", f.bound, "entry bound for sampled matrices")->check(CLI::PositiveNumber);
    sub->add_option("--cap", f.cap, "largest degree allowed for S_n enumeration")->check(CLI::PositiveNumber);
    sub->add_option("--threads", f.threads, "worker threads (0 = all cores)");
    sub->add_flag("--json", f.json, "machine-readable output");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  set_thread_count(f.threads);
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return dispatch(command, f, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
  }
  return kExitInputError;
}

}  // namespace gmf
