#include "regent/forcing.hpp"

#include <stdexcept>

namespace regent {

FinSubset chain_expand(const GroupDescriptor& g, const FinSubset& a, const GroupElement& x, unsigned k) {
  if (k == 0) return a;
  std::vector<GroupElement> out(a.begin(), a.end());
  out.reserve(a.size() * (k + 1));
  const GroupElement minus_x = g.neg(x);
  std::vector<GroupElement> current(a.begin(), a.end());
  for (unsigned j = 1; j <= k; ++j) {
    for (auto& e : current) {
      e = g.add(e, minus_x);
      out.push_back(e);
    }
  }
  return FinSubset(std::move(out));
}

FinSubset chain_expand(const GroupDescriptor& g, const FinSubset& a, std::span<const GroupElement> xs,
                       std::span<const unsigned> ks) {
  if (xs.size() != ks.size()) throw std::invalid_argument("chain_expand: one depth per forcing element");
  FinSubset c = a;
  for (std::size_t i = 0; i < xs.size(); ++i) c = chain_expand(g, c, xs[i], ks[i]);
  return c;
}

bool replay(const SystemOfIdeals& s, const FinSubset& a, const ChainCertificate& cert) {
  if (cert.xs.size() != cert.ks.size()) return false;
  const FinSubset chain = chain_expand(s.group(), a, cert.xs, cert.ks);
  if (!(chain == cert.chain)) return false;
  return meet_leq(s, chain, cert.targets);
}

namespace {

// Least value in [lo, hi] satisfying a monotone predicate, given that it
// holds at hi.
template <class Pred>
unsigned least_true(unsigned lo, unsigned hi, Pred&& pred) {
  while (lo < hi) {
    unsigned mid = lo + (hi - lo) / 2;
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return hi;
}

// Smallest r in [0, k_max] with pred(r), probing 0, 1, 2, 4, ... first so that
// cheap depths are tried before expensive ones.
template <class Pred>
std::optional<unsigned> least_radius(unsigned k_max, Pred&& pred) {
  unsigned failed_below = 0;  // every r < failed_below is known to fail
  unsigned probe = 0;
  while (true) {
    if (pred(probe)) return least_true(failed_below, probe, pred);
    failed_below = probe + 1;
    if (probe == k_max) return std::nullopt;
    probe = probe == 0 ? 1 : std::min<unsigned>(k_max, probe * 2);
  }
}

}  // namespace

Verdict<ChainCertificate> t_compose_holds(const SystemOfIdeals& s, std::span<const GroupElement> xs,
                                          const FinSubset& a, const FinSubset& targets, Budget budget) {
  const GroupDescriptor& g = s.group();
  for (const auto& x : xs) {
    if (!g.belongs(x)) throw std::invalid_argument("forcing element " + to_string(x) + " is not in the group");
  }
  const std::size_t n = xs.size();
  auto probe = [&](const std::vector<unsigned>& ks) { return meet_leq(s, chain_expand(g, a, xs, ks), targets); };

  auto radius = least_radius(budget.k_max, [&](unsigned r) { return probe(std::vector<unsigned>(n, r)); });
  if (!radius) return Verdict<ChainCertificate>::undecided();

  std::vector<unsigned> ks(n, *radius);
  for (std::size_t i = 0; i < n; ++i) {
    ks[i] = least_true(0, *radius, [&](unsigned k) {
      auto trial = ks;
      trial[i] = k;
      return probe(trial);
    });
  }
  ChainCertificate cert{std::vector<GroupElement>(xs.begin(), xs.end()), ks, chain_expand(g, a, xs, ks), targets, true};
  return Verdict<ChainCertificate>::proved(std::move(cert));
}

Verdict<ChainCertificate> t_force_holds(const SystemOfIdeals& s, const GroupElement& x, const FinSubset& a,
                                        const FinSubset& targets, Budget budget) {
  return t_compose_holds(s, std::span<const GroupElement>(&x, 1), a, targets, budget);
}

Verdict<ChainCertificate> t_force_holds(const SystemOfIdeals& s, const GroupElement& x, const FinSubset& a,
                                        const GroupElement& b, Budget budget) {
  return t_force_holds(s, x, a, FinSubset{b}, budget);
}

Verdict<UCertificate> u_force_holds(const SystemOfIdeals& s, const GroupElement& x, const FinSubset& a,
                                    const FinSubset& targets, Budget budget) {
  auto positive = t_force_holds(s, x, a, targets, budget);
  if (!positive.holds()) return Verdict<UCertificate>::undecided();
  auto negative = t_force_holds(s, s.group().neg(x), a, targets, budget);
  if (!negative.holds()) return Verdict<UCertificate>::undecided();
  return Verdict<UCertificate>::proved(UCertificate{std::move(*positive.certificate), std::move(*negative.certificate)});
}

Verdict<UCertificate> u_force_holds(const SystemOfIdeals& s, const GroupElement& x, const FinSubset& a,
                                    const GroupElement& b, Budget budget) {
  return u_force_holds(s, x, a, FinSubset{b}, budget);
}

std::optional<ChainDepth> min_chain_depth(const SystemOfIdeals& s, const GroupElement& x, const FinSubset& a,
                                          const FinSubset& targets, unsigned k_max) {
  auto verdict = t_force_holds(s, x, a, targets, Budget{k_max});
  if (!verdict.holds()) return std::nullopt;
  const unsigned k = verdict.certificate->ks.front();
  const GroupDescriptor& g = s.group();
  const FinSubset two_point = a.unite(translate(g, a, g.neg(g.scale(Int(k), x))));
  return ChainDepth{k, meet_leq(s, two_point, targets)};
}

ForcedSystem::ForcedSystem(SystemPtr base, GroupElement x, Budget budget)
    : SystemOfIdeals(base->group()), base_(std::move(base)), x_(std::move(x)), budget_(budget) {}

std::string ForcedSystem::name() const { return "T[" + to_string(x_) + "](" + base_->name() + ")"; }

bool ForcedSystem::holds(const FinSubset& a, const GroupElement& b) const {
  return t_force_holds(*base_, x_, a, b, budget_).holds();
}

}  // namespace regent
