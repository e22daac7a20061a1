#include "regent/regularisation.hpp"

#include "regent/linear.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace regent {

namespace {

std::vector<int> signs_for(std::size_t n, std::size_t index) {
  // Bit (n - 1 - i) of index selects -1 for position i, so index order is
  // lexicographic with +1 before -1.
  std::vector<int> signs(n);
  for (std::size_t i = 0; i < n; ++i) signs[i] = ((index >> (n - 1 - i)) & 1U) ? -1 : 1;
  return signs;
}

std::vector<GroupElement> signed_elements(const GroupDescriptor& g, const std::vector<GroupElement>& xs,
                                          const std::vector<int>& signs) {
  std::vector<GroupElement> out;
  out.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out.push_back(signs[i] > 0 ? xs[i] : g.neg(xs[i]));
  return out;
}

std::string describe_signs(const std::vector<int>& signs) {
  std::string s = "(";
  for (std::size_t i = 0; i < signs.size(); ++i) s += (i ? "," : "") + std::string(signs[i] > 0 ? "+" : "-");
  return s + ")";
}

}  // namespace

bool replay(const SystemOfIdeals& s, const LorenzenCertificate& cert, std::string* failure) {
  auto fail = [&](std::string why) {
    if (failure) *failure = std::move(why);
    return false;
  };
  const GroupDescriptor& g = s.group();
  const std::size_t n = cert.xs.size();
  if (n >= 8 * sizeof(std::size_t)) return fail("too many forcing elements");
  const std::size_t expected = std::size_t{1} << n;
  if (cert.branches.size() != expected)
    return fail("expected " + std::to_string(expected) + " branches, found " + std::to_string(cert.branches.size()));
  std::vector<bool> seen(expected, false);
  for (std::size_t bi = 0; bi < cert.branches.size(); ++bi) {
    const auto& branch = cert.branches[bi];
    if (branch.signs.size() != n || branch.ks.size() != n) return fail("branch " + std::to_string(bi) + " has wrong arity");
    std::size_t index = 0;
    for (int sign : branch.signs) {
      if (sign != 1 && sign != -1) return fail("branch " + std::to_string(bi) + " has a sign other than +1/-1");
      index = (index << 1U) | (sign < 0 ? 1U : 0U);
    }
    if (seen[index]) return fail("sign vector " + describe_signs(branch.signs) + " appears twice");
    seen[index] = true;
    const auto forced = signed_elements(g, cert.xs, branch.signs);
    const FinSubset chain = chain_expand(g, cert.a, forced, branch.ks);
    if (!s.holds(chain, cert.b)) return fail("branch " + describe_signs(branch.signs) + " does not replay");
  }
  return true;
}

std::vector<GroupElement> default_pool(const GroupDescriptor& g, const FinSubset& a, const GroupElement& b,
                                       const std::vector<GroupElement>& extras) {
  const FinSubset points = a.with(b);
  const GroupElement zero = g.zero();
  std::vector<GroupElement> pool;
  auto consider = [&](const GroupElement& x) {
    if (x == zero) return;
    const GroupElement minus = g.neg(x);
    if (std::find(pool.begin(), pool.end(), x) != pool.end()) return;
    if (std::find(pool.begin(), pool.end(), minus) != pool.end()) return;
    pool.push_back(x);
  };
  const auto& e = points.elements();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) consider(g.sub(e[j], e[i]));
  for (const auto& x : extras) {
    if (!g.belongs(x)) throw std::invalid_argument("pool element " + to_string(x) + " is not in the group");
    consider(x);
  }
  return pool;
}

Verdict<LorenzenCertificate> l_holds(const SystemOfIdeals& s, const FinSubset& a, const GroupElement& b,
                                     const std::vector<GroupElement>& pool, RegularisationBudget budget) {
  const GroupDescriptor& g = s.group();
  if (s.holds(a, b)) {
    return Verdict<LorenzenCertificate>::proved(LorenzenCertificate{a, b, {}, {LorenzenBranch{}}});
  }
  const FinSubset target{b};
  const std::size_t max_n = std::min<std::size_t>(budget.n_max, pool.size());

  for (std::size_t n = 1; n <= max_n; ++n) {
    // Index combinations in lexicographic order.
    std::vector<std::size_t> pick(n);
    for (std::size_t i = 0; i < n; ++i) pick[i] = i;
    while (true) {
      std::vector<GroupElement> xs;
      for (std::size_t i : pick) xs.push_back(pool[i]);

      std::vector<LorenzenBranch> branches;
      bool all = true;
      for (std::size_t index = 0; index < (std::size_t{1} << n); ++index) {
        auto signs = signs_for(n, index);
        const auto forced = signed_elements(g, xs, signs);
        auto verdict = t_compose_holds(s, forced, a, target, Budget{budget.k_max});
        if (!verdict.holds()) {
          all = false;
          break;
        }
        branches.push_back(LorenzenBranch{std::move(signs), std::move(verdict.certificate->ks)});
      }
      if (all) return Verdict<LorenzenCertificate>::proved(LorenzenCertificate{a, b, std::move(xs), std::move(branches)});

      // next combination
      std::size_t i = n;
      while (i > 0 && pick[i - 1] == pool.size() - n + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return Verdict<LorenzenCertificate>::undecided();
}

// ---------------------------------------------------------------------------
// Prufer

bool prufer_check(const SystemOfIdeals& s, const FinSubset& a, const FinSubset& b) {
  return meet_leq(s, minkowski_sum(s.group(), a, b), b);
}

namespace {

// Largest B' ⊆ candidates with A + B' <=_S B', by repeated deletion.
std::vector<GroupElement> greatest_witness(const SystemOfIdeals& s, const FinSubset& a, std::vector<GroupElement> candidates) {
  const GroupDescriptor& g = s.group();
  bool changed = true;
  while (changed && !candidates.empty()) {
    changed = false;
    const FinSubset sum = minkowski_sum(g, a, FinSubset(candidates));
    std::vector<GroupElement> kept;
    kept.reserve(candidates.size());
    for (auto& b : candidates) {
      if (s.holds(sum, b)) {
        kept.push_back(std::move(b));
      } else {
        changed = true;
      }
    }
    candidates = std::move(kept);
  }
  return candidates;
}

}  // namespace

std::optional<PruferCertificate> prufer_search(const SystemOfIdeals& s, const FinSubset& a, const FinSubset& universe,
                                               std::size_t size_cap) {
  auto best = greatest_witness(s, a, universe.elements());
  if (best.empty()) return std::nullopt;
  // Drop elements in ascending order while the rest stays a witness; witness
  // validity is not monotone in B, so sweep until no single removal works.
  bool shrunk = true;
  while (shrunk && best.size() > 1) {
    shrunk = false;
    for (std::size_t i = 0; i < best.size() && best.size() > 1;) {
      std::vector<GroupElement> trial = best;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      if (prufer_check(s, a, FinSubset(trial))) {
        best = std::move(trial);
        shrunk = true;
      } else {
        ++i;
      }
    }
  }
  if (best.size() > size_cap) return std::nullopt;
  return PruferCertificate{a, FinSubset(std::move(best))};
}

FinSubset integer_range(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("empty integer range");
  std::vector<GroupElement> v;
  for (long x = lo; x <= hi; ++x) v.push_back(integer_element(x));
  return FinSubset(std::move(v));
}

CycleCertificate cycle_extract(const GroupDescriptor& g, const GroupElement& a, const FinSubset& b) {
  const MinimalSystem sm(g);
  if (!prufer_check(sm, FinSubset{a}, b)) throw std::invalid_argument("cycle_extract: a + B <= B does not hold");
  auto successor = [&](const GroupElement& x) -> const GroupElement& {
    for (const auto& y : b) {
      if (g.leq(g.add(a, y), x)) return y;
    }
    throw std::logic_error("cycle_extract: no successor");  // excluded by the precondition
  };
  std::map<GroupElement, std::size_t> position;
  std::vector<GroupElement> walk;
  GroupElement current = b.front();
  while (!position.contains(current)) {
    position.emplace(current, walk.size());
    walk.push_back(current);
    current = successor(current);
  }
  std::vector<GroupElement> cycle(walk.begin() + static_cast<std::ptrdiff_t>(position.at(current)), walk.end());
  const Int n = static_cast<long>(cycle.size());
  if (!g.leq(g.scale(n, a), g.zero())) throw std::logic_error("cycle_extract: n*a <= 0 failed to verify");
  return CycleCertificate{n, std::move(cycle)};
}

// ---------------------------------------------------------------------------
// LCD decision

namespace {

void require_integer_group(const GroupDescriptor& g) {
  if (g.kind() == GroupKind::divisibility)
    throw std::invalid_argument("lcd_decide needs a cone-preordered (or discrete) Z^d instance");
}

std::vector<Int> scale_to_integers(const RationalRow& values) {
  Int den = 1;
  for (const auto& v : values) den = lcm(den, denominator(v));
  std::vector<Int> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(numerator(v * Rational(den)));
  Int content = 0;
  for (const auto& v : out) content = gcd(content, v);
  if (content > 1)
    for (auto& v : out) v /= content;
  return out;
}

}  // namespace

ConeDecision lcd_decide(const GroupDescriptor& g, const FinSubset& a) {
  require_integer_group(g);
  for (const auto& e : a) {
    if (!g.belongs(e)) throw std::invalid_argument("element " + to_string(e) + " does not belong to " + g.describe());
  }
  const std::size_t d = g.rank();
  const auto& p = g.generators();
  const auto& elems = a.elements();
  const std::size_t k = elems.size();
  const std::size_t q = p.size();

  // sum n_i a_i + sum m_j p_j = 0,  sum n_i = 1,  n, m >= 0.
  RationalMatrix primal(d + 1, RationalRow(k + q, Rational(0)));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t i = 0; i < k; ++i) primal[r][i] = elems[i].vector()[r];
    for (std::size_t j = 0; j < q; ++j) primal[r][k + j] = p[j][r];
  }
  for (std::size_t i = 0; i < k; ++i) primal[d][i] = 1;
  RationalRow rhs(d + 1, Rational(0));
  rhs[d] = 1;
  if (auto sol = find_nonnegative_solution(primal, rhs)) {
    auto ints = scale_to_integers(*sol);
    ConeDecision out;
    out.positive = true;
    out.n.assign(ints.begin(), ints.begin() + static_cast<std::ptrdiff_t>(k));
    out.m.assign(ints.begin() + static_cast<std::ptrdiff_t>(k), ints.end());
    return out;
  }

  // lambda = u - w;  lambda(a_i) - s_i = 1;  lambda(p_j) - t_j = 0.
  RationalMatrix dual(k + q, RationalRow(2 * d + k + q, Rational(0)));
  RationalRow dual_rhs(k + q, Rational(0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t r = 0; r < d; ++r) {
      dual[i][r] = elems[i].vector()[r];
      dual[i][d + r] = -Rational(elems[i].vector()[r]);
    }
    dual[i][2 * d + i] = -1;
    dual_rhs[i] = 1;
  }
  for (std::size_t j = 0; j < q; ++j) {
    for (std::size_t r = 0; r < d; ++r) {
      dual[k + j][r] = p[j][r];
      dual[k + j][d + r] = -Rational(p[j][r]);
    }
    dual[k + j][2 * d + k + j] = -1;
  }
  auto sol = find_nonnegative_solution(dual, dual_rhs);
  if (!sol) throw std::logic_error("lcd_decide: neither alternative is feasible");
  RationalRow lambda(d);
  for (std::size_t r = 0; r < d; ++r) lambda[r] = (*sol)[r] - (*sol)[d + r];
  ConeDecision out;
  out.positive = false;
  out.functional = scale_to_integers(lambda);
  return out;
}

bool check_cone_decision(const GroupDescriptor& g, const FinSubset& a, const ConeDecision& dec, std::string* failure) {
  auto fail = [&](std::string why) {
    if (failure) *failure = std::move(why);
    return false;
  };
  require_integer_group(g);
  const std::size_t d = g.rank();
  const auto& p = g.generators();
  const auto& elems = a.elements();
  if (dec.positive) {
    if (dec.n.size() != elems.size()) return fail("n has wrong length");
    if (dec.m.size() != p.size()) return fail("m has wrong length");
    Int total = 0;
    for (const auto& v : dec.n) {
      if (v < 0) return fail("negative n coefficient");
      total += v;
    }
    if (total == 0) return fail("all n coefficients are zero");
    for (const auto& v : dec.m) {
      if (v < 0) return fail("negative m coefficient");
    }
    for (std::size_t r = 0; r < d; ++r) {
      Int s = 0;
      for (std::size_t i = 0; i < elems.size(); ++i) s += dec.n[i] * elems[i].vector()[r];
      for (std::size_t j = 0; j < p.size(); ++j) s += dec.m[j] * p[j][r];
      if (s != 0) return fail("coordinate " + std::to_string(r) + " of sum n a + sum m p is not zero");
    }
    return true;
  }
  if (dec.functional.size() != d) return fail("functional has wrong length");
  auto apply = [&](const IntVector& v) {
    Int s = 0;
    for (std::size_t r = 0; r < d; ++r) s += dec.functional[r] * v[r];
    return s;
  };
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (apply(p[j]) < 0) return fail("functional is negative on generator " + std::to_string(j));
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (apply(elems[i].vector()) <= 0) return fail("functional is not positive on element " + to_string(elems[i]));
  }
  return true;
}

bool regular_entails_decidable(const GroupDescriptor& g, const FinSubset& a, const FinSubset& b) {
  return lcd_decide(g, difference_set(g, a, b)).positive;
}

}  // namespace regent
