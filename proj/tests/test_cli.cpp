#include <doctest.h>

#include <sstream>

#include "gmf/cli.hpp"
#include "gmf/json_io.hpp"

using namespace gmf;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("structural subcommands") {
  const auto x = run({"xset", "--perm", "(1 2 3 4)"});
  CHECK(x.code == kExitOk);
  CHECK(x.out.find("4 members") != std::string::npos);

  const auto c = run({"classify", "--perm", "(1 2 3 4)(5 6)", "--n", "7"});
  CHECK(c.code == kExitOk);
  CHECK(c.out.rfind("TypeII", 0) == 0);

  const auto cls = run({"class", "--perm", R"({"n":3,"images":[2,3,1]})", "--json"});
  CHECK(cls.code == kExitOk);
  CHECK(Json::parse(cls.out).at("size") == 2);

  const auto f = run({"factor-involutions", "--perm", "(1 2 3 4)", "--json"});
  CHECK(f.code == kExitOk);
  const auto j = Json::parse(f.out);
  CHECK(j.contains("alpha"));
  CHECK(j.contains("beta"));

  CHECK(run({"partition", "--perm", "(1 2 3 4)"}).code == kExitOk);
  CHECK(run({"ssigma", "--perm", "(1 2 3)"}).out == "0 1 1\n1 0 1\n1 1 0\n");
}

TEST_CASE("evaluation subcommands") {
  CHECK(run({"eval", "--weights", "sign", "--matrix", "identity3"}).out == "1\n");
  CHECK(run({"perm", "--matrix", R"({"n":2,"entries":[[1,2],[3,4]]})"}).out == "10\n");
  CHECK(run({"det", "--matrix", R"({"n":2,"entries":[[1,2],[3,4]]})"}).out == "-2\n");
  const auto j = run({"eval", "--weights", R"({"n":2,"chi_builtin":"trivial"})", "--matrix", "identity2", "--json"});
  CHECK(Json::parse(j.out).at("value") == "1");
}

TEST_CASE("checks and exit codes") {
  const auto p = run({"check-perm-xset", "--n", "5"});
  CHECK(p.code == kExitOk);
  CHECK(p.out.find("120 cases, holds") != std::string::npos);

  const auto e = run({"check-equality", "--weights", "trivial", "--weights2", "sign", "--n", "3", "--json"});
  CHECK(e.code == kExitOk);
  const auto j = Json::parse(e.out);
  CHECK(j.at("holds") == true);
  CHECK(j.at("verdicts").size() == 2);
  CHECK(j.at("verdicts")[0].at("outcome") == "not-equal");

  CHECK(run({"check-lemma-ssq", "--n", "4"}).code == kExitOk);
  CHECK(run({"check-ssigma", "--weights", "sign", "--n", "3"}).code == kExitOk);
  CHECK(run({"check-transpose", "--weights", "trivial", "--n", "3", "--trials", "5"}).code == kExitOk);
  CHECK(run({"check-det-mult", "--weights", "sign", "--n", "3", "--trials", "5"}).code == kExitOk);

  const auto all = run({"verify-all", "--n", "3", "--trials", "3", "--json"});
  CHECK(all.code == kExitOk);
  const auto aj = Json::parse(all.out);
  CHECK(aj.at("holds") == true);
  CHECK(aj.at("n") == 3);
}

TEST_CASE("input errors") {
  CHECK(run({"frobnicate"}).code == kExitInputError);
  CHECK(run({"frobnicate"}).err.find("unknown command") != std::string::npos);
  CHECK(run({}).code == kExitInputError);
  CHECK(run({"xset"}).code == kExitInputError);
  CHECK(run({"xset", "--perm", "(1 2"}).code == kExitInputError);
  CHECK(run({"xset", "--perm", "(1 2 3)", "--n", "2"}).code == kExitInputError);
  CHECK(run({"eval", "--weights", "sign", "--matrix", "{\"n\": 2"}).code == kExitInputError);
  CHECK(run({"eval", "--weights", "sign", "--n", "3", "--matrix", "identity2"}).code == kExitInputError);
  CHECK(run({"check-perm-xset"}).code == kExitInputError);
  CHECK(run({"check-perm-xset", "--n", "12"}).code == kExitInputError);
  CHECK(run({"check-lemma-ssq", "--n", "2"}).code == kExitInputError);
  CHECK(run({"xset", "--bogus"}).code == kExitInputError);
}
