#include <doctest.h>

#include "gmf/error.hpp"
#include "gmf/gmf.hpp"
#include "gmf/json_io.hpp"
#include "test_support.hpp"

using namespace gmf;
using gmf::test::cyc;

TEST_CASE("permutation json") {
  const auto p = cyc("(1 3)(2 4 5)", 6);
  const Json j = to_json(p);
  CHECK(j.dump() == R"({"n":6,"images":[3,4,1,5,2,6]})");
  CHECK(permutation_from_json(j) == p);
  CHECK(permutation_from_json(Json::parse(R"({"n":6,"cycles":[[1,3],[2,4,5]]})")) == p);
  CHECK_THROWS_AS(permutation_from_json(Json::parse(R"({"n":3,"images":[1,2]})")), DegreeMismatch);
  CHECK_THROWS_AS(permutation_from_json(Json::parse(R"({"n":3})")), InputError);
  CHECK_THROWS_AS(permutation_from_json(Json::parse(R"({"images":[1]})")), InputError);
  CHECK_THROWS_AS(permutation_from_json(Json::parse(R"({"n":2,"images":[1,1]})")), InputError);
}

TEST_CASE("cycle notation") {
  CHECK(parse_cycle_notation("(1 2 3)").degree() == 3);
  CHECK(parse_cycle_notation("(1 2)", 4).images() == std::vector<int>{2, 1, 3, 4});
  CHECK(parse_cycle_notation("()", 3).is_identity());
  CHECK(parse_cycle_notation("(1,2)(3,4)", 4) == parse_cycle_notation("(1 2)(3 4)", 4));
  CHECK_THROWS_AS(parse_cycle_notation("(1 2", 3), InputError);
  CHECK_THROWS_AS(parse_cycle_notation("1 2)", 3), InputError);
  CHECK_THROWS_AS(parse_cycle_notation("(1 (2))", 3), InputError);
  CHECK_THROWS_AS(parse_cycle_notation("(1 a)", 3), InputError);
  CHECK_THROWS_AS(parse_cycle_notation("(1 5)", 3), InputError);
  CHECK_THROWS_AS(parse_cycle_notation("(1 2)(2 3)", 3), InputError);
}

TEST_CASE("exact numbers and matrices") {
  CHECK(exact_from_json(Json("1/2+1 i")) == ExactComplex(Rational(1, 2), 1));
  CHECK(exact_from_json(Json(-4)) == ExactComplex(-4));
  CHECK(exact_from_json(Json::parse(R"({"re":"1/3","im":-2})")) == ExactComplex(Rational(1, 3), -2));
  CHECK_THROWS_AS(exact_from_json(Json(1.5)), InputError);
  CHECK(to_json(ExactComplex(0, -1)) == Json("0-1 i"));

  const auto s = s_sigma_matrix(cyc("(1 2 3)", 3));
  const Json j = to_json(s);
  CHECK(j.dump() == R"({"n":3,"entries":[["0","1","1"],["1","0","1"],["1","1","0"]]})");
  const auto back = matrix_from_json(j);
  CHECK(back == s);
  CHECK(back.symmetric());
  CHECK_FALSE(matrix_from_json(Json::parse(R"({"n":2,"entries":[[1,2],[3,4]]})")).symmetric());
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"n":2,"entries":[[1,2]]})")), InputError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"n":2,"entries":[[1,2],[3]]})")), InputError);
}

TEST_CASE("class and set json") {
  const Json c = to_json(equivalence_class(cyc("(1 2 3)", 3)));
  CHECK(c.at("size") == 2);
  CHECK(c.at("members").size() == 2);
  CHECK(c.at("representative") == to_json(cyc("(1 2 3)", 3)));
  const Json x = to_json(x_set(cyc("(1 2 3 4)", 4)));
  CHECK(x.at("size") == 4);
  const Json part = to_json(x_set_partition(cyc("(1 2 3 4)", 4)));
  CHECK(part.contains("own_class"));
  CHECK(part.at("pieces").size() == 1);
}

TEST_CASE("weighted group json") {
  const auto sgn = weighted_group_from_json(Json::parse(R"({"n":3,"group":"S_n","chi_builtin":"sign"})"));
  CHECK(sgn.order() == 6);
  CHECK(sgn.chi(cyc("(1 2)", 3)) == ExactComplex(-1));

  const auto alt = weighted_group_from_json(Json::parse(R"({"n":4,"group":"A_n","chi_builtin":"trivial"})"));
  CHECK(alt.order() == 12);

  const auto cyclic = weighted_group_from_json(Json::parse(R"J({"n":3,"group":"cyclic:(1 2 3)","chi":[
      {"perm":{"n":3,"images":[1,2,3]},"re":1},
      {"perm":{"n":3,"cycles":[[1,2,3]]},"re":0,"im":1},
      {"perm":{"n":3,"cycles":[[1,3,2]]},"re":0,"im":-1}],"label":"c3"})J"));
  CHECK(cyclic.label() == "c3");
  CHECK(cyclic.chi(cyc("(1 2 3)", 3)) == ExactComplex::i());

  const auto table = weighted_group_from_json(
      Json::parse(R"({"n":3,"class_table":{"[1,1,1]":2,"[2,1]":{"re":0},"[3]":"-1"}})"));
  CHECK(table.chi(cyc("(1 3 2)", 3)) == ExactComplex(-1));
  CHECK(table.chi(Permutation::identity(3)) == ExactComplex(2));

  CHECK_THROWS_AS(weighted_group_from_json(Json::parse(R"({"n":3,"class_table":{"[1,1,1]":1}})")), InputError);
  CHECK_THROWS_AS(weighted_group_from_json(Json::parse(R"({"n":3,"class_table":{"[4]":1}})")), InputError);
  CHECK_THROWS_AS(weighted_group_from_json(Json::parse(R"({"n":3,"group":"Q_8","chi_builtin":"sign"})")),
                  InputError);
  CHECK_THROWS_AS(weighted_group_from_json(Json::parse(R"({"n":3,"group":[{"n":3,"cycles":[[1,2]]}],
      "chi":[{"perm":{"n":3,"cycles":[[1,2]]},"re":1}]})")),
                  InputError);
  CHECK_THROWS_AS(weighted_group_from_json(Json::parse(R"({"n":3,"chi_builtin":"frob"})")), InputError);

  // round trip through to_json
  const auto again = weighted_group_from_json(to_json(cyclic));
  CHECK(again.elements() == cyclic.elements());
  CHECK(again.values() == cyclic.values());
}

TEST_CASE("malformed text") {
  CHECK_THROWS_AS(parse_json_text("{\"n\": 3"), InputError);
  CHECK(parse_json_text("[1, 2]").size() == 2);
}
