#include "regent/instances.hpp"

#include "regent/lgroup.hpp"

#include <chrono>

namespace regent {

GroupDescriptor exa1_group() { return GroupDescriptor::cone(1, {IntVector{60}}); }
GroupDescriptor exa2_group() { return GroupDescriptor::divisibility(CubicField::standard()); }
GroupDescriptor exa3_group() { return GroupDescriptor::discrete(1); }

GroupDescriptor named_instance(const std::string& name) {
  if (name == "exa1") return exa1_group();
  if (name == "exa2") return exa2_group();
  if (name == "exa3") return exa3_group();
  throw std::invalid_argument("unknown instance '" + name + "' (expected exa1, exa2 or exa3)");
}

FieldElement exa2_y() {
  const auto& f = CubicField::standard();
  return f.scale(Rational(1, 2), f.add(f.pow(f.generator(), 2), f.one()));
}

FieldElement exa2_z() { return CubicField::standard().inv(exa2_y()); }

Sampler integer_sampler(long radius, long step, long unit) {
  Sampler s;
  s.element = [radius, step](std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(-radius, radius);
    return integer_element(step * d(rng));
  };
  if (unit != 0) {
    s.nonnegative = [unit](std::mt19937_64& rng) {
      std::uniform_int_distribution<long> d(0, 3);
      return integer_element(unit * d(rng));
    };
  }
  return s;
}

Sampler field_sampler() {
  Sampler s;
  s.element = [](std::mt19937_64& rng) {
    const auto& f = CubicField::standard();
    std::uniform_int_distribution<int> e(-1, 2);
    std::uniform_int_distribution<int> sign(0, 1);
    FieldElement v = f.mul(f.pow(f.generator(), std::max(0, e(rng))), f.pow(exa2_y(), e(rng)));
    if (sign(rng)) v = f.neg(v);
    return GroupElement(std::move(v));
  };
  s.nonnegative = [](std::mt19937_64& rng) {
    // elements of O: b/1 integral means 1 <= b
    const auto& f = CubicField::standard();
    std::uniform_int_distribution<int> c(-3, 3);
    FieldElement v(c(rng), c(rng), c(rng));
    return GroupElement(v.is_zero() ? f.one() : v);
  };
  s.max_subset_size = 2;
  return s;
}

Sampler default_sampler(const std::string& instance) {
  if (instance == "exa1") return integer_sampler(12, 10, 60);
  if (instance == "exa2") return field_sampler();
  if (instance == "exa3") return integer_sampler(6, 1, 0);
  throw std::invalid_argument("unknown instance '" + instance + "'");
}

bool SuiteReport::passed() const {
  for (const auto& c : claims) {
    if (!c.passed) return false;
  }
  return true;
}

Json SuiteReport::to_json() const {
  Json j;
  j["example"] = name;
  j["passed"] = passed();
  j["seconds"] = seconds;
  Json list = Json::array();
  for (const auto& c : claims) list.push_back({{"id", c.id}, {"statement", c.statement}, {"passed", c.passed}, {"detail", c.detail}});
  j["claims"] = list;
  return j;
}

namespace {

void exa1_suite(SuiteReport& r) {
  const GroupDescriptor g = exa1_group();
  const MinimalSystem sm(g);
  const FinSubset a = integer_set({10, 24});
  const FinSubset b = integer_set({130, 84});

  r.claims.push_back({"meet", "10 ∧ 24 <=_S 130 ∧ 84", meet_leq(sm, a, b), {}});

  {
    const GroupElement x = integer_element(-7);
    const FinSubset three = integer_set({3});
    auto meet_target = t_force_holds(sm, x, three, b, Budget{10});
    auto only84 = t_force_holds(sm, x, three, integer_element(84), Budget{10});
    auto only130 = t_force_holds(sm, x, three, integer_element(130), Budget{10});
    const bool ok = meet_target.holds() && meet_target.certificate->ks[0] == 3 &&
                    meet_target.certificate->chain == integer_set({3, 10, 17, 24}) && only84.holds() &&
                    only84.certificate->ks[0] == 3 && only130.holds() && only130.certificate->ks[0] == 1;
    Json d;
    if (meet_target.holds()) {
      d["certificate"] = t_certificate_json(g, "sm", three, *meet_target.certificate);
      d["k_for_84"] = only84.holds() ? Json(only84.certificate->ks[0]) : Json();
      d["k_for_130"] = only130.holds() ? Json(only130.certificate->ks[0]) : Json();
    }
    r.claims.push_back({"force", "3 <= 130 ∧ 84 in T_{-7}(S_M), least chain depth 3", ok, d});

    auto depth = min_chain_depth(sm, x, three, b, 10);
    const bool two_point_fails = !meet_leq(sm, integer_set({3, 24}), b);
    r.claims.push_back({"two-point", "3 ∧ 24 is not <=_S 130 ∧ 84 although the full chain succeeds",
                        two_point_fails && depth && !depth->two_point_holds,
                        {{"k", depth ? Json(depth->k) : Json()}}});
  }

  {
    auto u = u_force_holds(sm, integer_element(1), integer_set({-1}), integer_element(0), Budget{64});
    const bool ok = u.holds() && u.certificate->positive.ks[0] == 59 && u.certificate->negative.ks[0] == 1;
    Json d;
    if (u.holds()) d["certificate"] = u_certificate_json(g, "sm", integer_set({-1}), integer_element(1), *u.certificate);
    r.claims.push_back({"U1", "-1 <= 0 in U_1(S_M), depths 59 and 1", ok, d});
  }

  {
    auto l = l_holds(sm, integer_set({-1}), integer_element(0), {integer_element(1)}, {64, 1});
    Json d;
    bool ok = l.holds() && replay(sm, *l.certificate);
    if (l.holds()) d["certificate"] = lorenzen_certificate_json(g, "sm", *l.certificate);
    r.claims.push_back({"regularised", "0 |- 1 in L(S_M)", ok, d});
  }

  {
    bool ok = regular_entails_decidable(g, integer_set({0}), integer_set({1})) &&
              !regular_entails_decidable(g, integer_set({1}), integer_set({0}));
    std::size_t checked = 0;
    for (long p = -100; p <= 100 && ok; ++p) {
      for (long q = -100; q <= 100; ++q) {
        ++checked;
        // linear order: p |- q iff q - p >= 0
        if (regular_entails_decidable(g, integer_set({p}), integer_set({q})) != (q - p >= 0)) {
          ok = false;
          break;
        }
      }
    }
    r.claims.push_back({"linear-order", "L(S_M) is the usual order on [-100,100]", ok, {{"pairs", checked}}});
  }
}

void exa2_suite(SuiteReport& r) {
  const auto& f = CubicField::standard();
  const GroupDescriptor g = exa2_group();
  const DedekindSystem ded(g);
  const FieldElement y = exa2_y();
  const FieldElement z = exa2_z();
  const GroupElement one(f.one());
  auto el = [](const FieldElement& v) { return GroupElement(v); };

  const FieldElement y3 = f.pow(y, 3);
  auto poly = [&](long c) { return f.add(f.sub(f.pow(y, 2), f.scale(4, y)), FieldElement(c)); };
  r.claims.push_back({"y-cubed", "y^3 = y^2 - 4y + 4", y3 == poly(4),
                      {{"y^3", element_to_json(el(y3))}, {"y^2-4y+4", element_to_json(el(poly(4)))},
                       {"y^3 = y^2-4y+8", y3 == poly(8)}}});

  {
    const FinSubset gens{el(z), el(f.pow(z, 2)), el(f.pow(z, 3))};
    const bool in_ideal = ded.holds(gens, one);
    auto combo = [&](long c3) { return f.add(f.sub(z, f.scale(4, f.pow(z, 2))), f.scale(c3, f.pow(z, 3))); };
    r.claims.push_back({"z-ideal", "1 in (z, z^2, z^3) with 1 = z - 4z^2 + 4z^3", in_ideal && combo(4) == f.one(),
                        {{"contains_1", in_ideal}, {"identity_4z3_replays", combo(4) == f.one()},
                         {"identity_8z3_replays", combo(8) == f.one()}}});
  }

  {
    const bool holds = ded.holds(FinSubset{el(z), el(f.pow(z, 3))}, one);
    r.claims.push_back({"z-z3", "1 not in (z, z^3)", !holds, {{"contains_1", holds}}});
  }

  {
    auto l = l_holds(ded, FinSubset{el(z)}, one, {el(y)}, {8, 1});
    Json d;
    bool ok = false;
    if (l.holds()) {
      d["certificate"] = lorenzen_certificate_json(g, "dedekind", *l.certificate);
      const auto& br = l.certificate->branches;
      ok = br.size() == 2 && br[0].ks[0] == 2 && br[1].ks[0] == 1 && replay(ded, *l.certificate);
      d["T_y_depth"] = br[0].ks[0];
      d["T_z_depth"] = br[1].ks[0];
    }
    d["holds"] = l.holds();
    r.claims.push_back({"regularised", "z |- 1 in L(Dedekind) with T_y depth 2 and T_z depth 1", ok, d});
  }
}

void exa3_suite(SuiteReport& r) {
  const GroupDescriptor g = exa3_group();
  auto lor = make_entailment("lorenzen", g, "sm", RegularisationBudget{8, 2});
  const IntervalEntailment interval;

  std::vector<FinSubset> subsets;
  for (unsigned mask = 1; mask < (1U << 9); ++mask) {
    if (__builtin_popcount(mask) > 3) continue;
    std::vector<Int> v;
    for (int i = 0; i < 9; ++i)
      if (mask >> i & 1U) v.push_back(i - 4);
    subsets.push_back(integer_set(v));
  }
  std::size_t certified = 0, oracle_true = 0, wrong = 0;
  for (const auto& a : subsets) {
    for (const auto& b : subsets) {
      const bool expected = interval_oracle(a, b);
      const auto v = entails(*lor, a, b);
      oracle_true += expected;
      certified += v.holds();
      if (v.holds() != expected) ++wrong;
    }
  }
  r.claims.push_back({"intervals", "L(S_M) on discrete Z is interval inclusion (A, B in [-4,4], size <= 3)", wrong == 0,
                      {{"pairs", subsets.size() * subsets.size()}, {"oracle_true", oracle_true}, {"certified", certified}}});

  {
    bool ok = true;
    for (long m = -5; m <= 5; ++m) {
      ok = ok && to_pair(g, phi(g, integer_element(m))) == std::pair<Int, Int>(m, m);
      for (long n = -5; n <= 5; ++n) {
        const auto e = lg_meet(g, phi(g, integer_element(m)), phi(g, integer_element(n)));
        ok = ok && to_pair(g, e) == std::pair<Int, Int>(std::min(m, n), std::max(m, n));
        ok = ok && to_pair(g, lg_neg(e)) == std::pair<Int, Int>(-std::min(m, n), -std::max(m, n));
      }
    }
    r.claims.push_back({"pairs", "m -> (m,m), meets are (min, max), negation is (-m,-n)", ok, {}});
  }

  {
    auto laws = check_lgroup_laws(interval, default_sampler("exa3"), 200, 7);
    r.claims.push_back({"laws", "l-group laws on Z x Z°", laws.passed(), {{"violations", laws.counterexamples.size()}}});
  }
}

}  // namespace

SuiteReport run_example(const std::string& name) {
  SuiteReport r;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  if (name == "exa1") {
    exa1_suite(r);
  } else if (name == "exa2") {
    exa2_suite(r);
  } else if (name == "exa3") {
    exa3_suite(r);
  } else {
    throw std::invalid_argument("unknown example '" + name + "'");
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace regent
