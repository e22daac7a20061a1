#include "regent/entailment.hpp"

#include <functional>
#include <stdexcept>

namespace regent {

ConeEntailment::ConeEntailment(GroupDescriptor group) : RegularEntailment(std::move(group)) {
  if (this->group().kind() == GroupKind::divisibility)
    throw std::invalid_argument("the cone backend needs a cone-preordered or discrete Z^d group");
}

Verdict<Evidence> ConeEntailment::regular(const FinSubset& d) const {
  ConeDecision decision = lcd_decide(group(), d);
  const bool positive = decision.positive;
  return positive ? Verdict<Evidence>::proved(std::move(decision)) : Verdict<Evidence>::disproved(std::move(decision));
}

IntervalEntailment::IntervalEntailment() : RegularEntailment(GroupDescriptor::discrete(1)) {}

Verdict<Evidence> IntervalEntailment::regular(const FinSubset& d) const {
  const Int& lo = d.front().vector()[0];
  const Int& hi = d.back().vector()[0];
  if (lo <= 0 && hi >= 0) return Verdict<Evidence>::proved(std::monostate{});
  return Verdict<Evidence>::disproved();
}

LorenzenEntailment::LorenzenEntailment(SystemPtr system, RegularisationBudget budget, std::vector<GroupElement> pool_extras)
    : RegularEntailment(system->group()), system_(std::move(system)), budget_(budget), extras_(std::move(pool_extras)) {}

Verdict<Evidence> LorenzenEntailment::regular(const FinSubset& d) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(d); it != cache_.end()) return it->second;
  }
  const GroupElement zero = group().zero();
  auto found = l_holds(*system_, d, zero, default_pool(group(), d, zero, extras_), budget_);
  Verdict<Evidence> out = found.holds() ? Verdict<Evidence>::proved(std::move(*found.certificate))
                                        : Verdict<Evidence>::undecided();
  std::lock_guard lock(mutex_);
  cache_.emplace(d, out);
  return out;
}

std::size_t LorenzenEntailment::cache_size() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

RawEntailment::RawEntailment(SystemPtr system) : RegularEntailment(system->group()), system_(std::move(system)) {}

Verdict<Evidence> RawEntailment::regular(const FinSubset& d) const {
  return system_->holds_zero(d) ? Verdict<Evidence>::proved(std::monostate{}) : Verdict<Evidence>::disproved();
}

EntailmentPtr make_entailment(const std::string& backend, const GroupDescriptor& group, const std::string& system,
                              RegularisationBudget budget, std::vector<GroupElement> pool_extras) {
  if (backend == "cone") return std::make_shared<ConeEntailment>(group);
  if (backend == "interval") {
    if (!(group == GroupDescriptor::discrete(1))) throw std::invalid_argument("the interval backend is for discrete Z");
    return std::make_shared<IntervalEntailment>();
  }
  if (backend == "lorenzen") {
    auto base = std::make_shared<MemoizedSystem>(make_system(system, group));
    return std::make_shared<LorenzenEntailment>(std::move(base), budget, std::move(pool_extras));
  }
  if (backend == "raw") return std::make_shared<RawEntailment>(make_system(system, group));
  throw std::invalid_argument("unknown entailment backend '" + backend + "'");
}

Verdict<Evidence> entails(const RegularEntailment& e, const FinSubset& a, const FinSubset& b) {
  return e.regular(difference_set(e.group(), a, b));
}

Status entails_status(const RegularEntailment& e, const FinSubset& a, const FinSubset& b) {
  return entails(e, a, b).status;
}

bool interval_oracle(const FinSubset& a, const FinSubset& b) {
  const Int& min_a = a.front().vector()[0];
  const Int& max_a = a.back().vector()[0];
  const Int& min_b = b.front().vector()[0];
  const Int& max_b = b.back().vector()[0];
  return min_a <= max_b && max_a >= min_b;
}

namespace {

std::string show(const FinSubset& a, const FinSubset& b) { return to_string(a) + " |- " + to_string(b); }

// Three-valued bookkeeping for sampled implications.
class Tally {
 public:
  Tally(AxiomReport& report, const RegularEntailment& e) : report_(report), e_(e) {}

  Status ent(const FinSubset& a, const FinSubset& b) const { return entails_status(e_, a, b); }
  Status reg(const FinSubset& d) const { return e_.regular(d).status; }

  /// Premises are evaluated in order and short-circuit on refutation.
  void implication(const char* name, std::initializer_list<std::function<Status()>> premises,
                   const std::function<Status()>& conclusion, const std::function<std::string()>& detail) {
    bool unknown = false;
    for (const auto& p : premises) {
      const Status s = p();
      if (s == Status::refuted) return;
      if (s == Status::unknown) unknown = true;
    }
    if (unknown) {
      ++report_.unresolved[name];
      return;
    }
    ++report_.nontrivial[name];
    const Status c = conclusion();
    if (c == Status::unknown) {
      ++report_.unresolved[name];
    } else if (c == Status::refuted) {
      report_.counterexamples.push_back({name, detail()});
    }
  }

  void equivalence(const char* name, Status left, Status right, const std::function<std::string()>& detail) {
    if (left == Status::unknown || right == Status::unknown) {
      ++report_.unresolved[name];
      return;
    }
    if (left == Status::holds || right == Status::holds) ++report_.nontrivial[name];
    if (left != right) report_.counterexamples.push_back({name, detail()});
  }

 private:
  AxiomReport& report_;
  const RegularEntailment& e_;
};

FinSubset single(const GroupElement& x) { return FinSubset{x}; }

GroupElement upper(const GroupDescriptor& g, const Sampler& sampler, std::mt19937_64& rng, const GroupElement& a) {
  if (sampler.nonnegative) return g.add(a, sampler.nonnegative(rng));
  return a;
}

}  // namespace

AxiomReport check_regular_axioms(const RegularEntailment& e, const Sampler& sampler, std::size_t n, std::uint64_t seed) {
  const GroupDescriptor& g = e.group();
  std::mt19937_64 rng(seed);
  AxiomReport report;
  report.seed = seed;
  report.samples = n;
  Tally t(report, e);

  for (std::size_t i = 0; i < n; ++i) {
    const FinSubset a = sampler.subset(rng);
    const FinSubset b = sampler.subset(rng);
    const FinSubset extra_a = sampler.subset(rng);
    const FinSubset extra_b = sampler.subset(rng);
    const GroupElement x = sampler.element(rng);
    const GroupElement y = sampler.element(rng);
    const GroupElement u = sampler.element(rng);
    const GroupElement v = sampler.element(rng);

    t.implication("R1", {[&] { return t.ent(a, b); }}, [&] { return t.ent(a.unite(extra_a), b.unite(extra_b)); },
                  [&] { return show(a, b) + " but not " + show(a.unite(extra_a), b.unite(extra_b)); });

    t.implication("R2", {[&] { return t.ent(a.with(x), b); }, [&] { return t.ent(a, b.with(x)); }},
                  [&] { return t.ent(a, b); },
                  [&] { return "cut on " + to_string(x) + " fails for " + show(a, b); });

    {
      const GroupElement lo = a.front();
      const GroupElement hi = upper(g, sampler, rng, lo);
      if (g.leq(lo, hi)) {
        t.implication("R3", {}, [&] { return t.ent(single(lo), single(hi)); },
                      [&] { return to_string(lo) + " <= " + to_string(hi) + " but not entailed"; });
      }
    }

    t.equivalence("R4", t.ent(a, b), t.ent(translate(g, a, x), translate(g, b, x)),
                  [&] { return show(a, b) + " differs from its translate by " + to_string(x); });

    {
      const FinSubset left{g.add(u, x), g.add(v, y)};
      const FinSubset right{g.add(u, v), g.add(x, y)};
      t.implication("R5", {}, [&] { return t.ent(left, right); }, [&] { return "not " + show(left, right); });
    }

    t.implication("P1", {[&] { return t.reg(a); }}, [&] { return t.reg(a.unite(extra_a)); },
                  [&] { return "R(" + to_string(a) + ") but not R(" + to_string(a.unite(extra_a)) + ")"; });

    {
      const FinSubset sum = minkowski_sum(g, a, b);
      t.implication("P2", {[&] { return t.reg(sum.unite(a)); }, [&] { return t.reg(sum.unite(b)); }},
                    [&] { return t.reg(sum); },
                    [&] { return "R(A+B,A) and R(A+B,B) but not R(A+B) for A=" + to_string(a) + ", B=" + to_string(b); });
    }

    {
      // a <= 0: use the negative of a nonnegative sample when available
      const GroupElement low = sampler.nonnegative ? g.neg(sampler.nonnegative(rng)) : g.zero();
      for (const auto& c : {x, low}) {
        if (g.leq(c, g.zero())) {
          t.implication("P3", {}, [&] { return t.reg(single(c)); },
                        [&] { return to_string(c) + " <= 0 but not R(" + to_string(c) + ")"; });
        }
      }
    }

    t.implication("P5", {}, [&] { return t.reg(FinSubset{x, g.neg(x)}); },
                  [&] { return "not R(" + to_string(x) + ", " + to_string(g.neg(x)) + ")"; });
  }
  return report;
}

namespace {

// Least-effort |-_x: forcing 0 <= x on the system A |> b := A |- b is
// T_{-x}, searched up to `depth`.
Status forced_entails(const RegularEntailment& e, const FinSubset& a, const FinSubset& b, const GroupElement& x,
                      unsigned depth) {
  struct View final : SystemOfIdeals {
    const RegularEntailment& e;
    explicit View(const RegularEntailment& inner) : SystemOfIdeals(inner.group()), e(inner) {}
    std::string name() const override { return "view"; }
    bool holds(const FinSubset& s, const GroupElement& t) const override {
      return entails_status(e, s, FinSubset{t}) == Status::holds;
    }
  } view(e);
  auto v = t_force_holds(view, e.group().neg(x), a, b, Budget{depth});
  return v.holds() ? Status::holds : Status::unknown;
}

}  // namespace

AxiomReport check_derived_lemmas(const RegularEntailment& e, const Sampler& sampler, std::size_t n, std::uint64_t seed,
                                 unsigned force_depth) {
  const GroupDescriptor& g = e.group();
  std::mt19937_64 rng(seed);
  AxiomReport report;
  report.seed = seed;
  report.samples = n;
  Tally t(report, e);
  std::uniform_int_distribution<int> small(0, 6);
  std::uniform_int_distribution<int> arity(1, 4);
  const FinSubset zero{g.zero()};

  for (std::size_t i = 0; i < n; ++i) {
    const FinSubset a = sampler.subset(rng);
    const FinSubset b = sampler.subset(rng);
    const GroupElement u = sampler.element(rng);
    const GroupElement v = sampler.element(rng);
    const GroupElement x = sampler.element(rng);

    {
      const FinSubset left{u, v};
      const FinSubset right{g.add(u, x), g.sub(v, x)};
      t.implication("main1", {}, [&] { return t.ent(left, right); }, [&] { return "not " + show(left, right); });
      t.implication("main1", {}, [&] { return t.ent(right, left); }, [&] { return "not " + show(right, left); });
    }

    {
      const FinSubset plus = a.unite(translate(g, a, x));
      const FinSubset minus = a.unite(translate(g, a, g.neg(x)));
      t.implication("R1-cor", {[&] { return t.ent(plus, b); }, [&] { return t.ent(minus, b); }},
                    [&] { return t.ent(a, b); },
                    [&] { return "case split on " + to_string(x) + " fails for " + show(a, b); });
      t.equivalence("R2", t.ent(plus, b), t.ent(a, b.unite(translate(g, b, g.neg(x)))),
                    [&] { return "A,A+x |- B and A |- B,B-x disagree for A=" + to_string(a) + ", B=" + to_string(b) +
                                 ", x=" + to_string(x); });
    }

    {
      int p = small(rng), q = small(rng);
      if (p > q) std::swap(p, q);
      const FinSubset left{u, g.add(u, g.scale(Int(q), x))};
      const FinSubset right{g.add(u, g.scale(Int(p), x))};
      t.implication("conv", {}, [&] { return t.ent(left, right); }, [&] { return "not " + show(left, right); });
    }

    t.implication("main3", {[&] { return forced_entails(e, a, b, x, force_depth); },
                            [&] { return forced_entails(e, a, b, g.neg(x), force_depth); }},
                  [&] { return t.ent(a, b); },
                  [&] { return "forcing both signs of " + to_string(x) + " proves " + show(a, b) + " but it fails"; });

    {
      const Status direct = t.ent(a, b);
      t.equivalence("key", direct, t.reg(difference_set(g, a, b)), [&] { return "A-B |- 0 disagrees for " + show(a, b); });
      t.equivalence("key", direct, t.ent(zero, difference_set(g, b, a)),
                    [&] { return "0 |- B-A disagrees for " + show(a, b); });
    }

    {
      const FinSubset sum = minkowski_sum(g, a, b);
      Status all = Status::holds;
      for (const auto& bj : b) {
        const Status s = t.ent(sum, FinSubset{bj});
        if (s == Status::refuted) {
          all = Status::refuted;
          break;
        }
        if (s == Status::unknown) all = Status::unknown;
      }
      t.implication("cancel", {[&] { return all; }}, [&] { return t.reg(a); },
                    [&] { return "A+B <= B but not A |- 0 for A=" + to_string(a) + ", B=" + to_string(b); });
    }

    {
      const int k = arity(rng);
      std::vector<GroupElement> terms;
      GroupElement total = g.zero();
      for (int j = 0; j < k; ++j) {
        terms.push_back(sampler.element(rng));
        total = g.add(total, terms.back());
      }
      terms.push_back(g.neg(total));
      const FinSubset tuple(terms);
      t.implication("zero-sum", {}, [&] { return t.reg(tuple); },
                    [&] { return "elements of " + to_string(tuple) + " sum to 0 but R fails"; });

      // a1+...+an = b1+...+bn
      std::vector<GroupElement> others;
      GroupElement partial = g.zero();
      for (std::size_t j = 0; j + 1 < terms.size(); ++j) {
        others.push_back(sampler.element(rng));
        partial = g.add(partial, others.back());
      }
      GroupElement sum_a = g.zero();
      for (const auto& a_i : terms) sum_a = g.add(sum_a, a_i);
      others.push_back(g.sub(sum_a, partial));
      const FinSubset lhs(terms);
      const FinSubset rhs(others);
      t.implication("zero-sum", {}, [&] { return t.ent(lhs, rhs); }, [&] { return "equal sums but not " + show(lhs, rhs); });
    }
  }
  return report;
}

SystemPtr as_system(EntailmentPtr e) {
  const GroupDescriptor g = e->group();
  return std::make_shared<PredicateSystem>(g, "entails:" + e->name(), [e](const FinSubset& a, const GroupElement& b) {
    return entails_status(*e, a, FinSubset{b}) == Status::holds;
  });
}

}  // namespace regent
