#include <doctest.h>

#include <set>

#include "gmf/error.hpp"
#include "gmf/permutation.hpp"
#include "test_support.hpp"

using namespace gmf;
using gmf::test::cyc;

TEST_CASE("construction rejects non-bijections") {
  CHECK_THROWS_AS(Permutation(std::vector<int>{1, 1, 3}), InputError);
  CHECK_THROWS_AS(Permutation(std::vector<int>{1, 4, 2}), InputError);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), InputError);
  CHECK_NOTHROW(Permutation(std::vector<int>{3, 1, 2}));
}

TEST_CASE("compose applies right to left") {
  const auto p = cyc("(1 2 3)", 4);
  CHECK(compose(Permutation::identity(4), p) == p);
  CHECK(compose(cyc("(1 2)", 2), cyc("(1 2)", 2)).is_identity());
  CHECK(compose(cyc("(1 3)", 3), cyc("(1 2)", 3)) == cyc("(1 2 3)", 3));
  CHECK_THROWS_AS(compose(cyc("(1 2)", 2), cyc("(1 2)", 3)), DegreeMismatch);
}

TEST_CASE("compose matches the image-array oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 8;
    const auto p = test::random_permutation(n, rng);
    const auto q = test::random_permutation(n, rng);
    CHECK(compose(p, q).images() == test::compose_images(p.images(), q.images()));
  }
}

TEST_CASE("inverse and power") {
  CHECK(inverse(Permutation::identity(3)).is_identity());
  CHECK(inverse(cyc("(1 2 3)", 3)) == cyc("(1 3 2)", 3));
  CHECK(inverse(cyc("(1 2)(3 4 5)", 5)) == cyc("(1 2)(3 5 4)", 5));

  CHECK(power(cyc("(1 2 3)", 3), 3).is_identity());
  CHECK(power(cyc("(1 2 3 4)", 4), 2) == cyc("(1 3)(2 4)", 4));
  const auto p = cyc("(1 4 2)(3 5)", 6);
  CHECK(power(p, 1) == p);
  CHECK(power(p, 0).is_identity());
  CHECK(power(p, -1) == inverse(p));
  CHECK(power(p, -7) == inverse(power(p, 7)));
}

TEST_CASE("fix and moved sets") {
  CHECK(fix_set(Permutation::identity(4)) == std::vector<int>{1, 2, 3, 4});
  CHECK(fix_set(cyc("(1 2)", 4)) == std::vector<int>{3, 4});
  CHECK(fix_set(cyc("(1 2 3)(4 5)", 6)) == std::vector<int>{6});
  CHECK(moved_set(cyc("(1 2 3)(4 5)", 6)) == std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("decompose is canonical") {
  CHECK(decompose(Permutation::identity(5)).cycles.empty());

  const auto single = decompose(cyc("(1 2 3 4)", 4));
  REQUIRE(single.cycles.size() == 1);
  CHECK(single.cycles[0].support() == std::vector<int>{1, 2, 3, 4});

  const auto d = decompose(Permutation(std::vector<int>{2, 1, 5, 3, 4, 6}));
  REQUIRE(d.cycles.size() == 2);
  CHECK(d.cycles[0].support() == std::vector<int>{1, 2});
  CHECK(d.cycles[1].support() == std::vector<int>{3, 5, 4});

  CHECK(Cycle(6, {5, 3, 4}).support() == std::vector<int>{3, 4, 5});
  CHECK_THROWS_AS(Cycle(3, {1}), InputError);
  CHECK_THROWS_AS(Cycle(3, {1, 4}), InputError);
}

TEST_CASE("from_cycles") {
  CHECK(from_cycles(3, std::vector<Cycle>{}).is_identity());
  CHECK(from_cycles(4, std::vector<std::vector<int>>{{1, 2}, {3, 4}}).images() == std::vector<int>{2, 1, 4, 3});
  CHECK(from_cycles(5, std::vector<std::vector<int>>{{1, 3, 5}}).images() == std::vector<int>{3, 2, 5, 4, 1});
  CHECK_THROWS_AS(from_cycles(4, std::vector<std::vector<int>>{{1, 2}, {2, 3}}), InputError);
  CHECK_THROWS_AS(from_cycles(3, std::vector<std::vector<int>>{{1, 5}}), InputError);
}

TEST_CASE("two-involution factorization examples") {
  const auto [a0, b0] = two_involution_factorization(Permutation::identity(3));
  CHECK(a0.is_identity());
  CHECK(b0.is_identity());

  const auto t = cyc("(1 2)", 2);
  const auto [a1, b1] = two_involution_factorization(t);
  CHECK(a1 == t);
  CHECK(b1.is_identity());

  const auto c = cyc("(1 2 3 4)", 4);
  const auto [a2, b2] = two_involution_factorization(c);
  CHECK(compose(a2, a2).is_identity());
  CHECK(compose(b2, b2).is_identity());
  CHECK(compose(a2, b2) == c);
}

TEST_CASE("property: permutation invariants on random inputs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 9;
    const auto p = test::random_permutation(n, rng);
    CAPTURE(to_cycle_string(p));

    CHECK(compose(p, inverse(p)).is_identity());
    CHECK(inverse(inverse(p)) == p);

    const auto d = decompose(p);
    CHECK(from_cycles(n, d.cycles) == p);

    // every moved point lies in exactly one cycle; fixed points in none
    std::vector<int> hits(static_cast<std::size_t>(n), 0);
    for (const auto& c : d.cycles) {
      CHECK(c.support().front() == *std::min_element(c.support().begin(), c.support().end()));
      for (int x : c.support()) ++hits[static_cast<std::size_t>(x - 1)];
    }
    for (int i = 1; i <= n; ++i) CHECK(hits[static_cast<std::size_t>(i - 1)] == (p(i) == i ? 0 : 1));
    for (std::size_t k = 1; k < d.cycles.size(); ++k) {
      CHECK(d.cycles[k - 1].support().front() < d.cycles[k].support().front());
    }

    const auto [alpha, beta] = two_involution_factorization(p);
    CHECK(compose(alpha, alpha).is_identity());
    CHECK(compose(beta, beta).is_identity());
    CHECK(compose(alpha, beta) == p);
  }
}

TEST_CASE("enumerate_sn") {
  CHECK(enumerate_sn(1) == std::vector<Permutation>{Permutation::identity(1)});
  CHECK(enumerate_sn(3).size() == 6);

  std::size_t factorial = 1;
  for (int n = 1; n <= 7; ++n) {
    factorial *= static_cast<std::size_t>(n);
    const auto all = enumerate_sn(n);
    std::set<Permutation> unique(all.begin(), all.end());
    CHECK(all.size() == factorial);
    CHECK(unique.size() == factorial);
  }
  CHECK_THROWS_AS(enumerate_sn(10), CapExceeded);
  CHECK(enumerate_sn(4, 4).size() == 24);
  CHECK_THROWS_AS(enumerate_sn(5, 4), CapExceeded);
}

TEST_CASE("enumeration order starts with the smaller symmetric groups") {
  const auto s4 = enumerate_sn(4);
  CHECK(s4[0].is_identity());
  CHECK(s4[1] == cyc("(1 2)", 4));
  CHECK(s4[2] == cyc("(2 3)", 4));
  for (std::size_t k = 0; k < 6; ++k) CHECK(s4[k](4) == 4);
}

TEST_CASE("enumerate_f3c against a brute-force filter") {
  CHECK(enumerate_f3c(2).size() == 2);
  CHECK(enumerate_f3c(3).size() == 6);
  CHECK(enumerate_f3c(4).size() == 15);
  for (int n = 1; n <= 7; ++n) {
    std::set<std::vector<int>> expected;
    for (const auto& a : test::all_image_arrays(n)) {
      if (test::moved_count(a) <= 3) expected.insert(a);
    }
    std::set<std::vector<int>> got;
    for (const auto& p : enumerate_f3c(n)) got.insert(p.images());
    CHECK(got == expected);
  }
}

TEST_CASE("sign and cycle type") {
  CHECK(sign(Permutation::identity(3)) == 1);
  CHECK(sign(cyc("(1 2)", 3)) == -1);
  CHECK(sign(cyc("(1 2 3 4)", 4)) == -1);
  CHECK(cycle_type(cyc("(1 2)(3 4 5)", 7)) == std::vector<int>{3, 2, 1, 1});
  CHECK(to_cycle_string(cyc("(3 5 4)(1 2)", 6)) == "(1 2)(3 5 4)");
  CHECK(to_cycle_string(Permutation::identity(2)) == "()");
}
