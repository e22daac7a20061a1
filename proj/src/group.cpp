#include "regent/group.hpp"

#include "regent/linear.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace regent {

std::strong_ordering compare_vectors(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return std::strong_ordering::less;
    if (b[i] < a[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool operator==(const GroupElement& a, const GroupElement& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
  if (a.value_.index() != b.value_.index()) return a.value_.index() <=> b.value_.index();
  if (a.is_vector()) return compare_vectors(a.vector(), b.vector());
  return a.field_element() <=> b.field_element();
}

std::ostream& operator<<(std::ostream& os, const GroupElement& e) {
  if (e.is_field()) return os << e.field_element();
  const auto& v = e.vector();
  if (v.size() == 1) return os << v[0];
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

std::string to_string(const GroupElement& e) {
  std::ostringstream os;
  os << e;
  return os.str();
}

GroupElement integer_element(const Int& v) { return GroupElement(IntVector{v}); }

GroupElement vector_element(std::initializer_list<long> coords) {
  IntVector v;
  for (long c : coords) v.emplace_back(c);
  return GroupElement(std::move(v));
}

// ---------------------------------------------------------------------------
// ConeMonoid

namespace {

Int dot(const std::vector<Int>& a, const IntVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalMatrix generator_matrix(std::size_t rank, const std::vector<IntVector>& gens) {
  RationalMatrix m(rank, RationalRow(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < rank; ++i) m[i][j] = gens[j][i];
  return m;
}

// Apery tables above this many residues fall back to the general strategies.
constexpr long apery_limit = 1'000'000;

}  // namespace

ConeMonoid::ConeMonoid(std::size_t rank, std::vector<IntVector> generators)
    : rank_(rank), generators_(std::move(generators)) {
  for (const auto& p : generators_) {
    if (p.size() != rank_) throw std::invalid_argument("cone generator has wrong dimension");
  }
  std::vector<std::size_t> nonzero;
  for (std::size_t j = 0; j < generators_.size(); ++j) {
    if (std::any_of(generators_[j].begin(), generators_[j].end(), [](const Int& c) { return c != 0; })) nonzero.push_back(j);
  }
  if (nonzero.empty()) {
    strategy_ = Strategy::trivial;
    return;
  }

  if (rank_ == 1) {
    bool any_pos = false;
    bool any_neg = false;
    for (std::size_t j : nonzero) (generators_[j][0] > 0 ? any_pos : any_neg) = true;
    if (any_pos && any_neg) {
      strategy_ = Strategy::lattice;
      return;
    }
    sign_ = any_pos ? 1 : -1;
    modulus_index_ = nonzero.front();
    for (std::size_t j : nonzero) {
      if (abs(generators_[j][0]) < abs(generators_[modulus_index_][0])) modulus_index_ = j;
    }
    const Int modulus = abs(generators_[modulus_index_][0]);
    if (modulus <= apery_limit) {
      // Dijkstra over residues: apery_[r] is the least monoid element == r.
      const auto s = modulus.convert_to<std::size_t>();
      apery_.assign(s, std::nullopt);
      apery_last_.assign(s, generators_.size());
      using Entry = std::pair<Int, std::size_t>;
      std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
      apery_[0] = Int(0);
      queue.emplace(Int(0), 0);
      while (!queue.empty()) {
        auto [dist, r] = queue.top();
        queue.pop();
        if (apery_[r] && *apery_[r] < dist) continue;
        for (std::size_t j : nonzero) {
          const Int step = abs(generators_[j][0]);
          const Int next_dist = dist + step;
          const auto next = ((r + step) % modulus).convert_to<std::size_t>();
          if (!apery_[next] || next_dist < *apery_[next]) {
            apery_[next] = next_dist;
            apery_last_[next] = j;
            queue.emplace(next_dist, next);
          }
        }
      }
      strategy_ = Strategy::apery;
      return;
    }
  }

  const RationalMatrix m = generator_matrix(rank_, generators_);
  if (regent::rank(m) == generators_.size()) {
    // Pick rows greedily until the square block is invertible.
    RationalMatrix picked;
    for (std::size_t i = 0; i < rank_ && pivot_rows_.size() < generators_.size(); ++i) {
      picked.push_back(m[i]);
      if (regent::rank(picked) == picked.size()) {
        pivot_rows_.push_back(i);
      } else {
        picked.pop_back();
      }
    }
    strategy_ = Strategy::independent;
    return;
  }

  // Pointed iff some functional takes value >= 1 on every generator:
  // lambda = u - w with u, w >= 0 and slack s >= 0, lambda(p_j) - s_j = 1.
  const std::size_t k = generators_.size();
  RationalMatrix lp(k, RationalRow(2 * rank_ + k, Rational(0)));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < rank_; ++i) {
      lp[j][i] = generators_[j][i];
      lp[j][rank_ + i] = -Rational(generators_[j][i]);
    }
    lp[j][2 * rank_ + j] = -1;
  }
  if (auto sol = find_nonnegative_solution(lp, RationalRow(k, Rational(1)))) {
    Int den = 1;
    for (std::size_t i = 0; i < 2 * rank_; ++i) den = lcm(den, denominator((*sol)[i]));
    functional_.resize(rank_);
    for (std::size_t i = 0; i < rank_; ++i) functional_[i] = numerator(((*sol)[i] - (*sol)[rank_ + i]) * Rational(den));
    for (const auto& p : generators_) functional_on_generators_.push_back(dot(functional_, p));
    strategy_ = Strategy::pointed;
    return;
  }
  strategy_ = Strategy::bounded;
}

std::optional<std::vector<Int>> ConeMonoid::decompose(const IntVector& v) const {
  if (v.size() != rank_) throw std::invalid_argument("cone membership: dimension mismatch");
  switch (strategy_) {
    case Strategy::trivial:
      if (std::all_of(v.begin(), v.end(), [](const Int& c) { return c == 0; })) return std::vector<Int>(generators_.size(), Int(0));
      return std::nullopt;
    case Strategy::apery:
      return decompose_apery(v[0]);
    case Strategy::lattice:
      return decompose_lattice(v[0]);
    case Strategy::independent:
      return decompose_independent(v);
    case Strategy::pointed:
    case Strategy::bounded:
      return enumerate(v);
  }
  return std::nullopt;
}

std::optional<std::vector<Int>> ConeMonoid::decompose_apery(const Int& v) const {
  const Int target = sign_ > 0 ? v : Int(-v);
  if (target < 0) return std::nullopt;
  const Int modulus = abs(generators_[modulus_index_][0]);
  auto r = (target % modulus).convert_to<std::size_t>();
  if (!apery_[r] || *apery_[r] > target) return std::nullopt;
  std::vector<Int> coeffs(generators_.size(), Int(0));
  coeffs[modulus_index_] = (target - *apery_[r]) / modulus;
  // Walk the shortest-path tree back to residue 0.
  Int remaining = *apery_[r];
  while (remaining != 0) {
    const std::size_t j = apery_last_[r];
    ++coeffs[j];
    remaining -= abs(generators_[j][0]);
    r = mod_floor(remaining, modulus).convert_to<std::size_t>();
  }
  return coeffs;
}

std::optional<std::vector<Int>> ConeMonoid::decompose_lattice(const Int& v) const {
  // Extended Euclid over the generators gives integer (signed) coefficients.
  const std::size_t k = generators_.size();
  Int g = 0;
  std::vector<Int> coeffs(k, Int(0));
  for (std::size_t j = 0; j < k; ++j) {
    const Int& p = generators_[j][0];
    if (p == 0) continue;
    // Bezout for (g, p): x*g + y*p = gcd.
    Int old_r = g, r = p, old_x = 1, x = 0, old_y = 0, y = 1;
    while (r != 0) {
      Int q = floor_div(old_r, r);
      Int t = old_r - q * r;
      old_r = r;
      r = t;
      t = old_x - q * x;
      old_x = x;
      x = t;
      t = old_y - q * y;
      old_y = y;
      y = t;
    }
    if (old_r < 0) {
      old_r = -old_r;
      old_x = -old_x;
      old_y = -old_y;
    }
    for (auto& c : coeffs) c *= old_x;
    coeffs[j] += old_y;
    g = old_r;
  }
  if (v % g != 0) return std::nullopt;
  const Int factor = v / g;
  for (auto& c : coeffs) c *= factor;

  // Lift negative coefficients with zero-sum relations |q| p + p q = 0.
  std::size_t pos = k, neg = k;
  for (std::size_t j = 0; j < k; ++j) {
    if (generators_[j][0] > 0 && pos == k) pos = j;
    if (generators_[j][0] < 0 && neg == k) neg = j;
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (coeffs[j] >= 0) continue;
    const Int& p = generators_[j][0];
    if (p == 0) {
      coeffs[j] = 0;
      continue;
    }
    const std::size_t partner = p > 0 ? neg : pos;
    const Int& q = generators_[partner][0];
    // adding t*(|q| e_j + |p| e_partner) keeps the sum
    const Int step_j = abs(q) / gcd(p, q);
    const Int step_partner = abs(p) / gcd(p, q);
    const Int t = floor_div(-coeffs[j] + step_j - 1, step_j);
    coeffs[j] += t * step_j;
    coeffs[partner] += t * step_partner;
  }
  return coeffs;
}

std::optional<std::vector<Int>> ConeMonoid::decompose_independent(const IntVector& v) const {
  const std::size_t k = generators_.size();
  RationalMatrix block(k, RationalRow(k));
  RationalRow rhs(k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t j = 0; j < k; ++j) block[r][j] = generators_[j][pivot_rows_[r]];
    rhs[r] = v[pivot_rows_[r]];
  }
  auto sol = solve_unique(block, rhs);
  if (!sol) return std::nullopt;
  std::vector<Int> coeffs(k);
  for (std::size_t j = 0; j < k; ++j) {
    if (!is_integer((*sol)[j]) || (*sol)[j] < 0) return std::nullopt;
    coeffs[j] = numerator((*sol)[j]);
  }
  for (std::size_t i = 0; i < rank_; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < k; ++j) s += coeffs[j] * generators_[j][i];
    if (s != v[i]) return std::nullopt;
  }
  return coeffs;
}

std::optional<std::vector<Int>> ConeMonoid::enumerate(const IntVector& v) const {
  const std::size_t k = generators_.size();
  std::vector<Int> coeffs(k, Int(0));
  IntVector residual = v;
  const bool pointed = strategy_ == Strategy::pointed;
  const Int budget = pointed ? dot(functional_, v) : Int(0);
  if (pointed && budget < 0) return std::nullopt;

  // Depth-first over coefficients 0..k-2; the last one is solved directly.
  auto last_fits = [&]() -> bool {
    const auto& p = generators_[k - 1];
    std::optional<Int> m;
    for (std::size_t i = 0; i < rank_; ++i) {
      if (p[i] == 0) {
        if (residual[i] != 0) return false;
        continue;
      }
      if (residual[i] % p[i] != 0) return false;
      Int q = residual[i] / p[i];
      if (q < 0 || (m && *m != q)) return false;
      m = q;
    }
    coeffs[k - 1] = m.value_or(Int(0));
    return true;
  };

  auto recurse = [&](auto&& self, std::size_t j, const Int& spent) -> bool {
    if (j + 1 == k) return last_fits();
    Int limit = pointed ? Int((budget - spent) / functional_on_generators_[j]) : Int(search_bound);
    for (Int m = 0; m <= limit; ++m) {
      coeffs[j] = m;
      const Int used = pointed ? Int(spent + m * functional_on_generators_[j]) : Int(0);
      if (self(self, j + 1, used)) return true;
      for (std::size_t i = 0; i < rank_; ++i) residual[i] -= generators_[j][i];
    }
    // restore the residual for the caller
    for (std::size_t i = 0; i < rank_; ++i) residual[i] += (limit + 1) * generators_[j][i];
    coeffs[j] = 0;
    return false;
  };
  if (recurse(recurse, 0, Int(0))) return coeffs;
  return std::nullopt;
}

std::optional<std::vector<Int>> cone_membership(std::span<const IntVector> generators, const IntVector& v) {
  if (generators.empty()) throw std::invalid_argument("cone_membership: empty generator list");
  for (const auto& p : generators) {
    if (p.size() != v.size()) throw std::invalid_argument("cone_membership: dimension mismatch");
  }
  return ConeMonoid(v.size(), std::vector<IntVector>(generators.begin(), generators.end())).decompose(v);
}

// ---------------------------------------------------------------------------
// GroupDescriptor

GroupDescriptor GroupDescriptor::cone(std::size_t rank, std::vector<IntVector> generators) {
  if (rank == 0) throw std::invalid_argument("cone group needs positive rank");
  if (generators.empty()) throw std::invalid_argument("cone group needs a nonempty generator list");
  GroupDescriptor g;
  g.kind_ = GroupKind::cone;
  g.rank_ = rank;
  g.monoid_ = std::make_shared<const ConeMonoid>(rank, std::move(generators));
  return g;
}

GroupDescriptor GroupDescriptor::discrete(std::size_t rank) {
  if (rank == 0) throw std::invalid_argument("discrete group needs positive rank");
  GroupDescriptor g;
  g.kind_ = GroupKind::discrete;
  g.rank_ = rank;
  g.monoid_ = std::make_shared<const ConeMonoid>(rank, std::vector<IntVector>{});
  return g;
}

GroupDescriptor GroupDescriptor::divisibility(const CubicField& field) {
  GroupDescriptor g;
  g.kind_ = GroupKind::divisibility;
  g.rank_ = 0;
  g.field_ = std::make_shared<const CubicField>(field);
  return g;
}

const std::vector<IntVector>& GroupDescriptor::generators() const { return monoid().generators(); }

const CubicField& GroupDescriptor::field() const {
  if (!field_) throw std::logic_error("not a divisibility group");
  return *field_;
}

const ConeMonoid& GroupDescriptor::monoid() const {
  if (!monoid_) throw std::logic_error("divisibility group has no cone monoid");
  return *monoid_;
}

bool GroupDescriptor::belongs(const GroupElement& a) const {
  if (kind_ == GroupKind::divisibility) return a.is_field() && !a.field_element().is_zero();
  return a.is_vector() && a.vector().size() == rank_;
}

void GroupDescriptor::check(const GroupElement& a) const {
  if (!belongs(a)) throw std::invalid_argument("element " + to_string(a) + " does not belong to " + describe());
}

GroupElement GroupDescriptor::zero() const {
  if (kind_ == GroupKind::divisibility) return GroupElement(field_->one());
  return GroupElement(IntVector(rank_, Int(0)));
}

GroupElement GroupDescriptor::add(const GroupElement& a, const GroupElement& b) const {
  check(a);
  check(b);
  if (kind_ == GroupKind::divisibility) return GroupElement(field_->mul(a.field_element(), b.field_element()));
  IntVector r = a.vector();
  for (std::size_t i = 0; i < rank_; ++i) r[i] += b.vector()[i];
  return GroupElement(std::move(r));
}

GroupElement GroupDescriptor::neg(const GroupElement& a) const {
  check(a);
  if (kind_ == GroupKind::divisibility) return GroupElement(field_->inv(a.field_element()));
  IntVector r = a.vector();
  for (auto& c : r) c = -c;
  return GroupElement(std::move(r));
}

GroupElement GroupDescriptor::sub(const GroupElement& a, const GroupElement& b) const {
  check(a);
  check(b);
  if (kind_ == GroupKind::divisibility)
    return GroupElement(field_->mul(a.field_element(), field_->inv(b.field_element())));
  IntVector r = a.vector();
  for (std::size_t i = 0; i < rank_; ++i) r[i] -= b.vector()[i];
  return GroupElement(std::move(r));
}

GroupElement GroupDescriptor::scale(const Int& n, const GroupElement& a) const {
  check(a);
  if (kind_ == GroupKind::divisibility) return GroupElement(field_->pow(a.field_element(), n.convert_to<long>()));
  IntVector r = a.vector();
  for (auto& c : r) c *= n;
  return GroupElement(std::move(r));
}

bool GroupDescriptor::leq(const GroupElement& a, const GroupElement& b) const {
  check(a);
  check(b);
  switch (kind_) {
    case GroupKind::discrete:
      return a == b;
    case GroupKind::cone: {
      IntVector diff = b.vector();
      for (std::size_t i = 0; i < rank_; ++i) diff[i] -= a.vector()[i];
      return monoid_->decompose(diff).has_value();
    }
    case GroupKind::divisibility:
      return field_->mul(b.field_element(), field_->inv(a.field_element())).is_integral();
  }
  return false;
}

std::string GroupDescriptor::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case GroupKind::discrete:
      os << "discrete Z^" << rank_;
      break;
    case GroupKind::cone:
      os << "cone Z^" << rank_ << " P={";
      for (std::size_t j = 0; j < generators().size(); ++j) os << (j ? "," : "") << GroupElement(generators()[j]);
      os << '}';
      break;
    case GroupKind::divisibility: {
      auto f = field_->polynomial();
      os << "divisibility Q[t]/(" << f[3] << "t^3 + " << f[2] << "t^2 + " << f[1] << "t + " << f[0] << ')';
      break;
    }
  }
  return os.str();
}

bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) {
  if (a.kind_ != b.kind_ || a.rank_ != b.rank_) return false;
  if (a.kind_ == GroupKind::divisibility) return *a.field_ == *b.field_;
  const auto& pa = a.generators();
  const auto& pb = b.generators();
  if (pa.size() != pb.size()) return false;
  for (std::size_t j = 0; j < pa.size(); ++j) {
    if (compare_vectors(pa[j], pb[j]) != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// FinSubset

FinSubset::FinSubset(std::vector<GroupElement> elems) : elems_(std::move(elems)) {
  if (elems_.empty()) throw std::invalid_argument("finite subsets must be nonempty");
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool FinSubset::contains(const GroupElement& e) const { return std::binary_search(elems_.begin(), elems_.end(), e); }

bool FinSubset::includes(const FinSubset& other) const {
  return std::includes(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end());
}

FinSubset FinSubset::with(const GroupElement& e) const {
  std::vector<GroupElement> v = elems_;
  v.push_back(e);
  return FinSubset(std::move(v));
}

FinSubset FinSubset::unite(const FinSubset& other) const {
  std::vector<GroupElement> v;
  v.reserve(elems_.size() + other.elems_.size());
  std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(), std::back_inserter(v));
  return FinSubset(std::move(v));
}

std::strong_ordering operator<=>(const FinSubset& a, const FinSubset& b) {
  return std::lexicographical_compare_three_way(a.elems_.begin(), a.elems_.end(), b.elems_.begin(), b.elems_.end());
}

std::ostream& operator<<(std::ostream& os, const FinSubset& s) {
  os << '{';
  bool first = true;
  for (const auto& e : s) {
    os << (first ? "" : ", ") << e;
    first = false;
  }
  return os << '}';
}

std::string to_string(const FinSubset& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

FinSubset translate(const GroupDescriptor& g, const FinSubset& a, const GroupElement& x) {
  std::vector<GroupElement> v;
  v.reserve(a.size());
  for (const auto& e : a) v.push_back(g.add(e, x));
  return FinSubset(std::move(v));
}

FinSubset minkowski_sum(const GroupDescriptor& g, const FinSubset& a, const FinSubset& b) {
  std::vector<GroupElement> v;
  v.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) v.push_back(g.add(x, y));
  return FinSubset(std::move(v));
}

FinSubset difference_set(const GroupDescriptor& g, const FinSubset& a, const FinSubset& b) {
  std::vector<GroupElement> v;
  v.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) v.push_back(g.sub(x, y));
  return FinSubset(std::move(v));
}

FinSubset negate(const GroupDescriptor& g, const FinSubset& a) {
  std::vector<GroupElement> v;
  v.reserve(a.size());
  for (const auto& e : a) v.push_back(g.neg(e));
  return FinSubset(std::move(v));
}

FinSubset integer_set(std::initializer_list<long> values) {
  std::vector<GroupElement> v;
  for (long x : values) v.push_back(integer_element(x));
  return FinSubset(std::move(v));
}

FinSubset integer_set(const std::vector<Int>& values) {
  std::vector<GroupElement> v;
  for (const auto& x : values) v.push_back(integer_element(x));
  return FinSubset(std::move(v));
}

}  // namespace regent
