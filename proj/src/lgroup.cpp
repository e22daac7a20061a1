#include "regent/lgroup.hpp"

#include <functional>
#include <stdexcept>

namespace regent {

Status meet_monoid_leq(const RegularEntailment& e, const FinSubset& a, const FinSubset& b) {
  Status out = Status::holds;
  for (const auto& x : b) {
    const Status s = entails_status(e, a, FinSubset{x});
    if (s == Status::refuted) return Status::refuted;
    if (s == Status::unknown) out = Status::unknown;
  }
  return out;
}

std::string to_string(const LGroupElement& x) { return "/\\" + to_string(x.plus) + " - /\\" + to_string(x.minus); }

LGroupElement phi(const GroupDescriptor& g, const GroupElement& a) { return {FinSubset{a}, FinSubset{g.zero()}}; }

LGroupElement lg_zero(const GroupDescriptor& g) { return phi(g, g.zero()); }

LGroupElement lg_add(const GroupDescriptor& g, const LGroupElement& x, const LGroupElement& y) {
  return {minkowski_sum(g, x.plus, y.plus), minkowski_sum(g, x.minus, y.minus)};
}

LGroupElement lg_neg(const LGroupElement& x) { return {x.minus, x.plus}; }

LGroupElement lg_sub(const GroupDescriptor& g, const LGroupElement& x, const LGroupElement& y) {
  return lg_add(g, x, lg_neg(y));
}

LGroupElement lg_meet(const GroupDescriptor& g, const LGroupElement& x, const LGroupElement& y) {
  return {minkowski_sum(g, x.plus, y.minus).unite(minkowski_sum(g, y.plus, x.minus)), minkowski_sum(g, x.minus, y.minus)};
}

LGroupElement lg_join(const GroupDescriptor& g, const LGroupElement& x, const LGroupElement& y) {
  return lg_neg(lg_meet(g, lg_neg(x), lg_neg(y)));
}

Status lg_leq(const RegularEntailment& e, const LGroupElement& x, const LGroupElement& y) {
  const GroupDescriptor& g = e.group();
  return meet_monoid_leq(e, minkowski_sum(g, x.plus, y.minus), minkowski_sum(g, y.plus, x.minus));
}

Status lg_equiv(const RegularEntailment& e, const LGroupElement& x, const LGroupElement& y) {
  const Status forward = lg_leq(e, x, y);
  if (forward == Status::refuted) return forward;
  const Status backward = lg_leq(e, y, x);
  if (backward == Status::refuted) return backward;
  return forward == Status::holds && backward == Status::holds ? Status::holds : Status::unknown;
}

std::pair<Int, Int> to_pair(const GroupDescriptor& g, const LGroupElement& x) {
  if (!(g == GroupDescriptor::discrete(1))) throw std::invalid_argument("to_pair is defined on discrete Z only");
  const auto first = [](const FinSubset& s) { return s.front().vector()[0]; };
  const auto last = [](const FinSubset& s) { return s.back().vector()[0]; };
  return {first(x.plus) - first(x.minus), last(x.plus) - last(x.minus)};
}

namespace {

void tally(AxiomReport& report, const char* name, Status s, const std::function<std::string()>& detail) {
  if (s == Status::unknown) {
    ++report.unresolved[name];
    return;
  }
  ++report.nontrivial[name];
  if (s == Status::refuted) report.counterexamples.push_back({name, detail()});
}

}  // namespace

AxiomReport check_cancellative(const RegularEntailment& e, const Sampler& sampler, std::size_t n, std::uint64_t seed) {
  const GroupDescriptor& g = e.group();
  std::mt19937_64 rng(seed);
  AxiomReport report;
  report.seed = seed;
  report.samples = n;
  for (std::size_t i = 0; i < n; ++i) {
    const FinSubset x = sampler.subset(rng);
    const FinSubset a = sampler.subset(rng);
    const FinSubset b = sampler.subset(rng);
    const Status premise = meet_monoid_leq(e, minkowski_sum(g, x, a), minkowski_sum(g, x, b));
    if (premise == Status::refuted) continue;
    if (premise == Status::unknown) {
      ++report.unresolved["cancel"];
      continue;
    }
    tally(report, "cancel", meet_monoid_leq(e, a, b), [&] {
      return "X+A <= X+B but not A <= B for X=" + to_string(x) + ", A=" + to_string(a) + ", B=" + to_string(b);
    });
  }
  return report;
}

AxiomReport check_lgroup_laws(const RegularEntailment& e, const Sampler& sampler, std::size_t n, std::uint64_t seed) {
  const GroupDescriptor& g = e.group();
  std::mt19937_64 rng(seed);
  AxiomReport report;
  report.seed = seed;
  report.samples = n;
  auto sample = [&] {
    const FinSubset a = sampler.subset(rng, 1, 2);
    const FinSubset b = sampler.subset(rng, 1, 2);
    return LGroupElement{a, b};
  };
  auto add = [&](const LGroupElement& x, const LGroupElement& y) { return lg_add(g, x, y); };
  auto meet = [&](const LGroupElement& x, const LGroupElement& y) { return lg_meet(g, x, y); };
  auto join = [&](const LGroupElement& x, const LGroupElement& y) { return lg_join(g, x, y); };
  auto eq = [&](const char* law, const LGroupElement& lhs, const LGroupElement& rhs) {
    tally(report, law, lg_equiv(e, lhs, rhs), [&] { return to_string(lhs) + " is not equivalent to " + to_string(rhs); });
  };
  auto le = [&](const char* law, const LGroupElement& lhs, const LGroupElement& rhs) {
    tally(report, law, lg_leq(e, lhs, rhs), [&] { return to_string(lhs) + " is not below " + to_string(rhs); });
  };
  const LGroupElement zero = lg_zero(g);

  for (std::size_t i = 0; i < n; ++i) {
    const LGroupElement x = sample();
    const LGroupElement y = sample();
    const LGroupElement z = sample();

    eq("add-assoc", add(add(x, y), z), add(x, add(y, z)));
    eq("add-comm", add(x, y), add(y, x));
    eq("add-zero", add(x, zero), x);
    eq("add-inverse", add(x, lg_neg(x)), zero);
    eq("meet-comm", meet(x, y), meet(y, x));
    eq("meet-idem", meet(x, x), x);
    eq("absorb", meet(x, join(x, y)), x);
    eq("absorb", join(x, meet(x, y)), x);
    eq("distrib", meet(x, join(y, z)), join(meet(x, y), meet(x, z)));
    eq("translate-meet", add(meet(x, y), z), meet(add(x, z), add(y, z)));
    le("meet-lower", meet(x, y), x);
    le("meet-lower", meet(x, y), y);
    le("join-upper", x, join(x, y));

    const Status base = lg_leq(e, x, y);
    const Status moved = lg_leq(e, add(x, z), add(y, z));
    if (base == Status::unknown || moved == Status::unknown) {
      ++report.unresolved["compatible"];
    } else {
      ++report.nontrivial["compatible"];
      if (base != moved)
        report.counterexamples.push_back({"compatible", "order of " + to_string(x) + ", " + to_string(y) +
                                                            " changes under translation by " + to_string(z)});
    }
  }
  return report;
}

}  // namespace regent
