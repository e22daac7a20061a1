#include "regent/instances.hpp"
#include "regent/lgroup.hpp"

#include <doctest.h>

using namespace regent;

TEST_CASE("meet-monoid order from raw S_M is not cancellative") {
  const auto g = exa1_group();
  auto raw = make_entailment("raw", g, "sm");
  const auto x = integer_set({0, 1});
  const auto a = integer_set({1, -1});
  const auto b = integer_set({0});
  CHECK(meet_monoid_leq(*raw, minkowski_sum(g, a, x), minkowski_sum(g, b, x)) == Status::holds);
  CHECK(meet_monoid_leq(*raw, a, b) == Status::refuted);
  // dense small sets make X + A <= X + B common under the raw order
  const auto r = check_cancellative(*raw, integer_sampler(3, 1, 60), 300, 1);
  CHECK_FALSE(r.passed());
  CHECK(r.counterexamples.front().axiom == "cancel");
}

TEST_CASE("regularised orders are cancellative") {
  auto cone = make_entailment("cone", exa1_group(), "sm");
  CHECK(check_cancellative(*cone, default_sampler("exa1"), 200, 2).passed());
  const auto dense = check_cancellative(*cone, integer_sampler(3, 1, 60), 200, 2);
  CHECK(dense.passed());
  CHECK(dense.count("cancel") > 0);
  IntervalEntailment interval;
  CHECK(check_cancellative(interval, default_sampler("exa3"), 200, 3).passed());
}

TEST_CASE("l-group laws") {
  auto cone = make_entailment("cone", exa1_group(), "sm");
  CHECK(check_lgroup_laws(*cone, default_sampler("exa1"), 100, 4).passed());
  IntervalEntailment interval;
  CHECK(check_lgroup_laws(interval, default_sampler("exa3"), 100, 5).passed());
}

TEST_CASE("elements of Z x Z° as pairs") {
  const auto g = exa3_group();
  IntervalEntailment e;
  auto p = [&](long m) { return phi(g, integer_element(m)); };
  CHECK(to_pair(g, p(3)) == std::pair<Int, Int>(3, 3));
  CHECK(to_pair(g, lg_zero(g)) == std::pair<Int, Int>(0, 0));
  const auto x = lg_meet(g, p(1), p(4));
  CHECK(to_pair(g, x) == std::pair<Int, Int>(1, 4));
  CHECK(to_pair(g, lg_join(g, p(1), p(4))) == std::pair<Int, Int>(4, 1));
  CHECK(to_pair(g, lg_add(g, x, p(2))) == std::pair<Int, Int>(3, 6));
  // (m,n) <= (m',n') iff m <= m' and n >= n'
  for (long m1 = -2; m1 <= 2; ++m1)
    for (long n1 = -2; n1 <= 2; ++n1)
      for (long m2 = -2; m2 <= 2; ++m2)
        for (long n2 = -2; n2 <= 2; ++n2) {
          // meets of points realise every (m,n) with m <= n; joins the rest
          auto make = [&](long m, long n) { return m <= n ? lg_meet(g, p(m), p(n)) : lg_join(g, p(m), p(n)); };
          const auto u = make(m1, n1), v = make(m2, n2);
          REQUIRE(to_pair(g, u) == std::pair<Int, Int>(m1, n1));
          CHECK((lg_leq(e, u, v) == Status::holds) == (m1 <= m2 && n1 >= n2));
        }
  CHECK_THROWS(to_pair(exa1_group(), phi(exa1_group(), integer_element(1))));
}
