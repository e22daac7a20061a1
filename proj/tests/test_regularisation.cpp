#include "oracles.hpp"
#include "regent/instances.hpp"

#include <doctest.h>

#include <algorithm>

using namespace regent;

TEST_CASE("default forcing pool is the pairwise differences") {
  const auto g = exa1_group();
  const auto pool = default_pool(g, integer_set({3, 10}), integer_element(130));
  // 10-3, 130-3, 130-10
  CHECK(pool.size() == 3);
  CHECK(std::find(pool.begin(), pool.end(), integer_element(7)) != pool.end());
  CHECK(std::find(pool.begin(), pool.end(), integer_element(127)) != pool.end());
  CHECK(std::find(pool.begin(), pool.end(), integer_element(120)) != pool.end());
  const auto extended = default_pool(g, integer_set({3}), integer_element(3), {integer_element(1)});
  CHECK(extended == std::vector<GroupElement>{integer_element(1)});
}

TEST_CASE("L(S_M) on exa1: -1 <= 0 via the sign split on 1") {
  const MinimalSystem sm(exa1_group());
  auto l = l_holds(sm, integer_set({-1}), integer_element(0), {integer_element(1)}, {64, 1});
  REQUIRE(l.holds());
  REQUIRE(l.certificate->branches.size() == 2);
  CHECK(replay(sm, *l.certificate));

  auto dropped = *l.certificate;
  dropped.branches.pop_back();
  std::string why;
  CHECK_FALSE(replay(sm, dropped, &why));
  CHECK_FALSE(why.empty());

  auto shallow = *l.certificate;
  shallow.branches[0].ks[0] -= 1;
  CHECK_FALSE(replay(sm, shallow, &why));
  CHECK(why.find("branch") != std::string::npos);

  // the same entailment from S directly is false, and a tiny budget cannot find it
  CHECK_FALSE(sm.holds(integer_set({-1}), integer_element(0)));
  CHECK(l_holds(sm, integer_set({-1}), integer_element(0), {integer_element(1)}, {10, 1}).unknown());
}

TEST_CASE("Pruefer witnesses and cycles on exa1") {
  const auto g = exa1_group();
  const MinimalSystem sm(g);
  CHECK(prufer_check(sm, integer_set({-1}), integer_range(1, 60)));
  CHECK_FALSE(prufer_check(sm, integer_set({-1}), integer_range(1, 59)));
  for (long a = -10; a <= 10; ++a) {
    auto w = prufer_search(sm, integer_set({a}), integer_range(-60, 60), 121);
    CHECK(w.has_value() == (a <= 0));
    if (!w || a == 0) continue;
    CHECK(prufer_check(sm, integer_set({a}), w->witness));
    const auto c = cycle_extract(g, integer_element(a), w->witness);
    CHECK(c.n >= 1);
    CHECK(g.leq(g.scale(c.n, integer_element(a)), g.zero()));
  }
  CHECK_THROWS_AS(cycle_extract(g, integer_element(1), integer_set({0})), std::invalid_argument);
}

TEST_CASE("lcd decision with certificates") {
  const auto g = exa1_group();
  auto pos = lcd_decide(g, integer_set({-1}));
  CHECK(pos.positive);
  CHECK(pos.n == std::vector<Int>{60});
  CHECK(pos.m == std::vector<Int>{1});
  CHECK(check_cone_decision(g, integer_set({-1}), pos));
  auto neg = lcd_decide(g, integer_set({1}));
  CHECK_FALSE(neg.positive);
  CHECK(check_cone_decision(g, integer_set({1}), neg));
  auto forged = neg;
  forged.functional[0] = -forged.functional[0];
  CHECK_FALSE(check_cone_decision(g, integer_set({1}), forged));
  CHECK_THROWS(lcd_decide(exa2_group(), FinSubset{GroupElement(FieldElement(2))}));
}

TEST_CASE("lcd agrees with bounded coefficient search") {
  std::mt19937_64 rng(17);
  {
    const auto g = exa1_group();
    std::uniform_int_distribution<long> d(-10, 10);
    for (int i = 0; i < 60; ++i) {
      const auto a = integer_set({d(rng), d(rng)});
      const auto dec = lcd_decide(g, a);
      CHECK(check_cone_decision(g, a, dec));
      CHECK(dec.positive == oracle::bounded_cone_search(g, a, 120));
    }
  }
  {
    const auto g = GroupDescriptor::cone(2, {IntVector{1, 0}, IntVector{1, 2}});
    std::uniform_int_distribution<long> d(-4, 4);
    for (int i = 0; i < 60; ++i) {
      const FinSubset a{vector_element({d(rng), d(rng)}), vector_element({d(rng), d(rng)})};
      const auto dec = lcd_decide(g, a);
      CHECK(check_cone_decision(g, a, dec));
      CHECK(dec.positive == oracle::bounded_cone_search(g, a, 40));
    }
  }
}

TEST_CASE("regularised order on exa1 is the usual order") {
  const auto g = exa1_group();
  for (long p = -12; p <= 12; ++p)
    for (long q = -12; q <= 12; ++q) CHECK(regular_entails_decidable(g, integer_set({p}), integer_set({q})) == (p <= q));
}
