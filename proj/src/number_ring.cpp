#include "regent/number_ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace regent {

bool FieldElement::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return is_integer(q); });
}

Int FieldElement::common_denominator() const {
  Int d = 1;
  for (const auto& q : c_) d = lcm(d, denominator(q));
  return d;
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (a[i] < b[i]) return std::strong_ordering::less;
    if (b[i] < a[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
  return os << '(' << to_string(a[0]) << ", " << to_string(a[1]) << ", " << to_string(a[2]) << ')';
}

// ---------------------------------------------------------------------------
// Hermite normal form

namespace {

void axpy_column(IntColumn& target, const Int& factor, const IntColumn& source) {
  for (std::size_t r = 0; r < target.size(); ++r) target[r] -= factor * source[r];
}

}  // namespace

IntMatrix hnf(const IntMatrix& columns, std::size_t rows) {
  for (const auto& c : columns) {
    if (c.size() != rows) throw std::invalid_argument("hnf: column of wrong length");
  }
  std::vector<IntColumn> work = columns;
  IntMatrix result(rows);

  // Pivots are chosen bottom-up, so the pivot of row i has zeros below row i.
  for (std::size_t step = 0; step < rows; ++step) {
    const std::size_t row = rows - 1 - step;
    while (true) {
      // Smallest nonzero entry in this row becomes the tentative pivot.
      std::ptrdiff_t best = -1;
      for (std::size_t j = 0; j < work.size(); ++j) {
        if (work[j][row] == 0) continue;
        if (best < 0 || abs(work[j][row]) < abs(work[best][row])) best = static_cast<std::ptrdiff_t>(j);
      }
      if (best < 0) throw std::domain_error("hnf: columns do not span a full-rank lattice");
      bool reduced = true;
      for (std::size_t j = 0; j < work.size(); ++j) {
        if (static_cast<std::ptrdiff_t>(j) == best || work[j][row] == 0) continue;
        axpy_column(work[j], floor_div(work[j][row], work[best][row]), work[best]);
        if (work[j][row] != 0) reduced = false;
      }
      if (reduced) {
        IntColumn pivot = std::move(work[best]);
        work.erase(work.begin() + best);
        if (pivot[row] < 0) {
          for (auto& v : pivot) v = -v;
        }
        result[row] = std::move(pivot);
        break;
      }
    }
  }

  for (std::size_t step = 1; step < rows; ++step) {
    const std::size_t i = rows - 1 - step;
    for (std::size_t j = i + 1; j < rows; ++j) {
      Int q = floor_div(result[j][i], result[i][i]);
      if (q != 0) axpy_column(result[j], q, result[i]);
    }
  }
  return result;
}

std::optional<std::vector<Int>> solve_triangular(const IntMatrix& basis, std::span<const Int> v) {
  const std::size_t n = basis.size();
  if (v.size() != n) throw std::invalid_argument("solve_triangular: dimension mismatch");
  std::vector<Int> residual(v.begin(), v.end());
  std::vector<Int> coords(n);
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t i = n - 1 - step;
    const Int& diag = basis[i][i];
    if (residual[i] % diag != 0) return std::nullopt;
    coords[i] = residual[i] / diag;
    for (std::size_t r = 0; r <= i; ++r) residual[r] -= coords[i] * basis[i][r];
  }
  return coords;
}

// ---------------------------------------------------------------------------
// Cubic field

CubicField::CubicField(Int a0, Int a1, Int a2) : a_{std::move(a0), std::move(a1), std::move(a2)} {}

const CubicField& CubicField::standard() {
  static const CubicField field(7, 1, -1);
  return field;
}

FieldElement CubicField::add(const FieldElement& a, const FieldElement& b) const {
  return FieldElement(a[0] + b[0], a[1] + b[1], a[2] + b[2]);
}

FieldElement CubicField::sub(const FieldElement& a, const FieldElement& b) const {
  return FieldElement(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
}

FieldElement CubicField::neg(const FieldElement& a) const { return FieldElement(-a[0], -a[1], -a[2]); }

FieldElement CubicField::scale(const Rational& s, const FieldElement& a) const {
  return FieldElement(s * a[0], s * a[1], s * a[2]);
}

FieldElement CubicField::mul(const FieldElement& a, const FieldElement& b) const {
  std::array<Rational, 5> p{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < 3; ++j) p[i + j] += a[i] * b[j];
  }
  // t^3 = -a2 t^2 - a1 t - a0, applied from the top degree down.
  for (std::size_t deg = 4; deg >= 3; --deg) {
    if (p[deg] == 0) continue;
    Rational lead = p[deg];
    p[deg] = 0;
    p[deg - 1] -= lead * Rational(a_[2]);
    p[deg - 2] -= lead * Rational(a_[1]);
    p[deg - 3] -= lead * Rational(a_[0]);
  }
  return FieldElement(p[0], p[1], p[2]);
}

namespace {

// Dense polynomials over Q, low to high, no trailing zeros (empty == 0).
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    Rational factor = r.back() / b.back();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= factor * b[i];
    trim(r);
  }
  trim(q);
}

}  // namespace

FieldElement CubicField::inv(const FieldElement& a) const {
  if (a.is_zero()) throw std::domain_error("field inverse of zero");
  // Invariant: old_s * a == old_r (mod f).
  Poly old_r{Rational(a_[0]), Rational(a_[1]), Rational(a_[2]), Rational(1)};
  Poly r{a[0], a[1], a[2]};
  trim(r);
  Poly old_s{};
  Poly s{Rational(1)};
  while (!r.empty()) {
    Poly q, rem;
    poly_divmod(old_r, r, q, rem);
    Poly next_s = poly_sub(old_s, poly_mul(q, s));
    old_r = std::move(r);
    r = std::move(rem);
    old_s = std::move(s);
    s = std::move(next_s);
  }
  if (old_r.size() != 1) throw std::domain_error("field inverse: polynomial is not irreducible");
  Rational g = old_r[0];
  old_s.resize(3);  // deg s < 3 since deg f == 3
  return FieldElement(old_s[0] / g, old_s[1] / g, old_s[2] / g);
}

FieldElement CubicField::pow(const FieldElement& a, long exponent) const {
  FieldElement base = exponent < 0 ? inv(a) : a;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  FieldElement result = one();
  while (e != 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Fractional ideals

namespace {

IntColumn integer_coordinates(const FieldElement& a, const Int& d) {
  IntColumn col(3);
  for (std::size_t i = 0; i < 3; ++i) {
    Rational scaled = a[i] * Rational(d);
    if (!is_integer(scaled)) throw std::logic_error("integer_coordinates: denominator not cleared");
    col[i] = numerator(scaled);
  }
  return col;
}

}  // namespace

FractionalIdeal::FractionalIdeal(const CubicField& field, Int denominator, IntMatrix basis)
    : field_(field), denominator_(std::move(denominator)), basis_(std::move(basis)) {
  if (denominator_ <= 0) throw std::invalid_argument("fractional ideal denominator must be positive");
  Int content = denominator_;
  for (const auto& col : basis_)
    for (const auto& v : col) content = gcd(content, v);
  if (content > 1) {
    denominator_ /= content;
    for (auto& col : basis_)
      for (auto& v : col) v /= content;
  }
}

std::optional<std::vector<Int>> FractionalIdeal::contains(const FieldElement& a) const {
  IntColumn v(3);
  for (std::size_t i = 0; i < 3; ++i) {
    Rational scaled = a[i] * Rational(denominator_);
    if (!is_integer(scaled)) return std::nullopt;
    v[i] = numerator(scaled);
  }
  return solve_triangular(basis_, v);
}

bool FractionalIdeal::is_t_stable() const {
  const FieldElement t = field_.generator();
  return std::all_of(basis_.begin(), basis_.end(), [&](const IntColumn& col) {
    return contains(field_.mul(element_from_column(col, denominator_), t)).has_value();
  });
}

FieldElement element_from_column(const IntColumn& column, const Int& d) {
  return FieldElement(Rational(column[0], d), Rational(column[1], d), Rational(column[2], d));
}

FractionalIdeal ideal_from_generators(const CubicField& field, std::span<const FieldElement> gens) {
  if (gens.empty()) throw std::invalid_argument("ideal_from_generators: empty generator list");
  Int d = 1;
  for (const auto& g : gens) {
    if (g.is_zero()) throw std::invalid_argument("ideal_from_generators: zero generator");
    d = lcm(d, g.common_denominator());
  }
  const FieldElement t = field.generator();
  IntMatrix columns;
  columns.reserve(3 * gens.size());
  for (const auto& g : gens) {
    FieldElement power = g;
    for (int j = 0; j < 3; ++j) {
      columns.push_back(integer_coordinates(power, d));
      power = field.mul(power, t);
    }
  }
  return FractionalIdeal(field, d, hnf(columns, 3));
}

}  // namespace regent
