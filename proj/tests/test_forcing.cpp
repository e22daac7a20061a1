#include "regent/instances.hpp"

#include <doctest.h>

using namespace regent;

namespace {

// Least k with A ∪ (A - x) ∪ ... ∪ (A - kx) <=_S every target, by direct
// construction of the chain.
std::optional<unsigned> scan_depth(const GroupDescriptor& g, const FinSubset& a, long x, const FinSubset& targets,
                                   unsigned limit) {
  std::vector<Int> chain;
  for (unsigned k = 0; k <= limit; ++k) {
    for (const auto& e : a) chain.push_back(e.vector()[0] - Int(x) * k);
    bool ok = true;
    for (const auto& b : targets) {
      bool some = false;
      for (const auto& c : chain) some = some || g.leq(integer_element(c), b);
      ok = ok && some;
    }
    if (ok) return k;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("chain expansion") {
  const auto g = exa1_group();
  CHECK(chain_expand(g, integer_set({3}), integer_element(-7), 3) == integer_set({3, 10, 17, 24}));
  CHECK(chain_expand(g, integer_set({3}), integer_element(-7), 0) == integer_set({3}));
}

TEST_CASE("T_{-7} depths on exa1 agree with a direct scan") {
  const auto g = exa1_group();
  const MinimalSystem sm(g);
  const auto x = integer_element(-7);
  auto both = t_force_holds(sm, x, integer_set({3}), integer_set({130, 84}));
  REQUIRE(both.holds());
  CHECK(both.certificate->ks[0] == 3);
  CHECK(both.certificate->chain == integer_set({3, 10, 17, 24}));
  CHECK(replay(sm, integer_set({3}), *both.certificate));
  CHECK(t_force_holds(sm, x, integer_set({3}), integer_element(84)).certificate->ks[0] == 3);
  CHECK(t_force_holds(sm, x, integer_set({3}), integer_element(130)).certificate->ks[0] == 1);

  for (long a = -20; a <= 20; a += 3) {
    for (long b : {0L, 84L, 130L, -50L}) {
      for (long step : {-7L, 5L, 11L}) {
        const auto expected = scan_depth(g, integer_set({a}), step, integer_set({b}), 64);
        const auto v = t_force_holds(sm, integer_element(step), integer_set({a}), integer_element(b), Budget{64});
        REQUIRE(expected.has_value() == v.holds());
        if (expected) CHECK(v.certificate->ks[0] == *expected);
      }
    }
  }
}

TEST_CASE("U_1 certificate on exa1") {
  const MinimalSystem sm(exa1_group());
  auto u = u_force_holds(sm, integer_element(1), integer_set({-1}), integer_element(0));
  REQUIRE(u.holds());
  CHECK(u.certificate->positive.ks[0] == 59);
  CHECK(u.certificate->negative.ks[0] == 1);
  CHECK(scan_depth(exa1_group(), integer_set({-1}), 1, integer_set({0}), 128) == 59u);
  CHECK(scan_depth(exa1_group(), integer_set({-1}), -1, integer_set({0}), 128) == 1u);

  auto tampered = u.certificate->positive;
  tampered.ks[0] = 58;
  tampered.chain = chain_expand(exa1_group(), integer_set({-1}), integer_element(1), 58);
  CHECK_FALSE(replay(sm, integer_set({-1}), tampered));
}

TEST_CASE("budget exhaustion is unknown, never refuted") {
  const MinimalSystem sm(exa1_group());
  auto v = t_force_holds(sm, integer_element(1), integer_set({-1}), integer_element(0), Budget{10});
  CHECK(v.unknown());
  // x = 0 adds nothing, so the search can refute outright or give up; it must not prove
  CHECK_FALSE(t_force_holds(sm, integer_element(0), integer_set({-1}), integer_element(0), Budget{10}).holds());
}

TEST_CASE("forcing commutes and composes") {
  const auto g = exa1_group();
  const MinimalSystem sm(g);
  const std::vector<GroupElement> xy{integer_element(-7), integer_element(5)};
  const std::vector<GroupElement> yx{integer_element(5), integer_element(-7)};
  for (long a = -30; a <= 30; a += 7) {
    for (long b : {0L, 84L, 130L}) {
      auto one = t_compose_holds(sm, xy, integer_set({a}), integer_set({b}), Budget{32});
      auto two = t_compose_holds(sm, yx, integer_set({a}), integer_set({b}), Budget{32});
      CHECK(one.status == two.status);
      if (one.holds()) CHECK(replay(sm, integer_set({a}), *one.certificate));
    }
  }
}

TEST_CASE("T_x(S) satisfies S1-S4 on samples and extends S") {
  const auto g = exa1_group();
  auto sm = make_system("sm", g);
  const ForcedSystem forced(sm, integer_element(-7), Budget{64});
  CHECK(check_system_axioms(forced, default_sampler("exa1"), 200, 9).passed());
  CHECK(forced.holds(integer_set({3}), integer_element(84)));
  CHECK_FALSE(sm->holds(integer_set({3}), integer_element(84)));
  std::mt19937_64 rng(2);
  const auto s = default_sampler("exa1");
  for (int i = 0; i < 200; ++i) {
    const auto a = s.subset(rng);
    const auto b = s.element(rng);
    if (sm->holds(a, b)) CHECK(forced.holds(a, b));
  }
}

TEST_CASE("forcing also works for the Dedekind system") {
  const auto g = exa2_group();
  const DedekindSystem ded(g);
  const GroupElement y(exa2_y()), z(exa2_z()), one(g.field().one());
  auto tz = t_force_holds(ded, z, FinSubset{z}, one, Budget{8});
  REQUIRE(tz.holds());
  CHECK(tz.certificate->ks[0] == 1);
  auto ty = t_force_holds(ded, y, FinSubset{z}, one, Budget{8});
  REQUIRE(ty.holds());
  // z ∪ z/y = (z, z^2) already contains 1
  CHECK(ty.certificate->ks[0] == 1);
}
