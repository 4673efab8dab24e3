#include <doctest.h>

#include <set>

#include "gmf/error.hpp"
#include "gmf/weights.hpp"
#include "test_support.hpp"

using namespace gmf;
using gmf::test::cyc;

TEST_CASE("built-in weights") {
  const auto triv = built_in_weights("trivial", 3);
  const auto sgn = built_in_weights("sign", 3);
  CHECK(triv.order() == 6);
  CHECK(triv.is_full_symmetric_group());
  CHECK(triv.chi(cyc("(1 2)", 3)) == ExactComplex(1));
  CHECK(sgn.chi(cyc("(1 2)", 3)) == ExactComplex(-1));
  CHECK(sgn.chi(cyc("(1 2 3)", 3)) == ExactComplex(1));
  CHECK(triv.is_class_function());
  CHECK(sgn.is_class_function());
  CHECK_THROWS_AS(built_in_weights("alternating", 3), InputError);
}

TEST_CASE("subgroup validation") {
  const auto id = Permutation::identity(3);
  const auto t = cyc("(1 2)", 3);
  CHECK_NOTHROW(WeightedGroup(3, {id, t}, {1, 1}, "ok"));
  CHECK_THROWS_AS(WeightedGroup(3, {t}, {1}, "no id"), InputError);
  CHECK_THROWS_AS(WeightedGroup(3, {id, cyc("(1 2 3)", 3)}, {1, 1}, "no inverse"), InputError);
  CHECK_THROWS_AS(WeightedGroup(3, {id, t, cyc("(2 3)", 3)}, {1, 1, 1}, "not closed"), InputError);
  CHECK_THROWS_AS(WeightedGroup(3, {id, id}, {1, 1}, "duplicate"), InputError);
  CHECK_THROWS_AS(WeightedGroup(3, {id}, {1, 1}, "count"), InputError);
  try {
    WeightedGroup(3, {id, t, cyc("(2 3)", 3)}, {1, 1, 1}, "x");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).rfind("not a subgroup", 0) == 0);
  }
}

TEST_CASE("chi_hat extends by zero") {
  const auto c = cyc("(1 2 3 4)", 4);
  const auto w = weights_from_function(
      4, cyclic_group(c),
      [&](const Permutation& p) {
        auto q = Permutation::identity(4);
        for (int k = 0; k < 4; ++k, q = compose(c, q)) {
          if (q == p) return i_power(k);
        }
        return ExactComplex();
      },
      "cyclic-i");
  CHECK(w.order() == 4);
  CHECK(chi_hat(w, c) == ExactComplex::i());
  CHECK(chi_hat(w, cyc("(1 3)(2 4)", 4)) == ExactComplex(-1));
  CHECK(chi_hat(w, inverse(c)) == -ExactComplex::i());
  CHECK(chi_hat(w, cyc("(1 2)", 4)) == ExactComplex());
  CHECK_THROWS_AS(w.chi(cyc("(1 2)", 4)), InputError);
  CHECK_FALSE(w.is_full_symmetric_group());
  // abelian, so every function is a class function on G
  CHECK(w.is_class_function());
}

TEST_CASE("class function weights and inversion") {
  ClassTable table{{{1, 1, 1}, 2}, {{2, 1}, 0}, {{3}, -1}};
  const auto w = class_function_weights(3, table);
  CHECK(w.label() == "class-table");
  CHECK(w.chi(Permutation::identity(3)) == ExactComplex(2));
  CHECK(w.chi(cyc("(1 3 2)", 3)) == ExactComplex(-1));
  CHECK(w.is_class_function());
  table.erase({3});
  CHECK_THROWS_AS(class_function_weights(3, table), InputError);

  const auto g = symmetric_group(3);
  const auto phi = weights_from_function(
      3, g, [](const Permutation& p) { return ExactComplex(p(1), p(2)); }, "phi");
  CHECK_FALSE(phi.is_class_function());
  const auto psi = inverted_weights(phi);
  CHECK(psi.label() == "phi-inverted");
  for (const auto& p : g) CHECK(psi.chi(p) == phi.chi(inverse(p)));
}

TEST_CASE("group constructors") {
  CHECK(symmetric_group(4).size() == 24);
  CHECK(alternating_group(4).size() == 12);
  for (const auto& p : alternating_group(5)) CHECK(sign(p) == 1);
  CHECK(alternating_group(1).size() == 1);

  const auto c = cyclic_group(cyc("(1 2 3)(4 5)", 5));
  REQUIRE(c.size() == 6);
  CHECK(c[0].is_identity());
  CHECK(c[1] == cyc("(1 2 3)(4 5)", 5));

  const auto d4 = generated_group(4, {cyc("(1 2 3 4)", 4), cyc("(1 3)", 4)});
  CHECK(d4.size() == 8);
  CHECK(generated_group(4, {cyc("(1 2)", 4), cyc("(1 2 3 4)", 4)}).size() == 24);
  CHECK(generated_group(3, {}).size() == 1);
}

TEST_CASE("partitions") {
  CHECK(partitions(1) == std::vector<std::vector<int>>{{1}});
  CHECK(partitions(4) == std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  const std::vector<std::size_t> counts{1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 1; n <= 8; ++n) CHECK(partitions(n).size() == counts[static_cast<std::size_t>(n - 1)]);

  // every cycle type of S_n appears in the list
  for (int n = 1; n <= 6; ++n) {
    const auto ps = partitions(n);
    std::set<std::vector<int>> listed(ps.begin(), ps.end());
    for (const auto& p : enumerate_sn(n)) CHECK(listed.contains(cycle_type(p)));
  }
  CHECK(cycle_type_key({3, 1}) == "[3,1]");
}
