#pragma once

// Arithmetic in a cubic field K = Q[t]/(f), its equation order O = Z[t]/(f),
// and finitely generated fractional O-ideals stored as integer lattices in
// column Hermite normal form.

#include "regent/numeric.hpp"

#include <array>
#include <compare>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace regent {

/// c0 + c1*t + c2*t^2 with rationals in lowest terms.
class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(Rational c0, Rational c1 = 0, Rational c2 = 0) : c_{std::move(c0), std::move(c1), std::move(c2)} {}

  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const std::array<Rational, 3>& coefficients() const { return c_; }

  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }
  /// True when all three coefficients are integers, i.e. the element lies in Z[t].
  bool is_integral() const;
  /// Least common multiple of the coefficient denominators.
  Int common_denominator() const;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

 private:
  std::array<Rational, 3> c_{};
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

/// Integer matrix stored as a list of columns, each of equal length.
using IntColumn = std::vector<Int>;
using IntMatrix = std::vector<IntColumn>;

/// Column Hermite normal form of a full-row-rank integer matrix with `rows`
/// rows. The result has exactly `rows` columns, is upper triangular with a
/// positive diagonal, and every entry to the right of a diagonal entry lies in
/// [0, diagonal). Throws std::domain_error when the columns do not span a
/// lattice of full rank.
IntMatrix hnf(const IntMatrix& columns, std::size_t rows);

/// Integer coordinates c with sum_j c_j * basis[j] == v for an upper
/// triangular basis as produced by hnf(), or nullopt if v is not in the lattice.
std::optional<std::vector<Int>> solve_triangular(const IntMatrix& basis, std::span<const Int> v);

/// The field Q[t]/(t^3 + a2 t^2 + a1 t + a0).
class CubicField {
 public:
  /// Coefficients low to high; the leading coefficient 1 is implicit.
  CubicField(Int a0, Int a1, Int a2);

  /// t^3 - t^2 + t + 7.
  static const CubicField& standard();

  /// Integer coefficient list low to high, including the leading 1.
  std::array<Int, 4> polynomial() const { return {a_[0], a_[1], a_[2], Int(1)}; }

  FieldElement one() const { return FieldElement(1); }
  FieldElement generator() const { return FieldElement(0, 1); }

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement scale(const Rational& s, const FieldElement& a) const;
  /// Extended Euclid of the lift of a against f over Q; throws on zero.
  FieldElement inv(const FieldElement& a) const;
  /// Integer powers; negative exponents go through inv.
  FieldElement pow(const FieldElement& a, long exponent) const;

  friend bool operator==(const CubicField&, const CubicField&) = default;

 private:
  std::array<Int, 3> a_;
};

/// A finitely generated fractional ideal I, stored as D and the HNF of D*I.
class FractionalIdeal {
 public:
  FractionalIdeal(const CubicField& field, Int denominator, IntMatrix basis);

  const Int& denominator() const { return denominator_; }
  /// Three HNF columns of D*I in coordinates (1, t, t^2).
  const IntMatrix& basis() const { return basis_; }

  /// Coordinates of D*a in the HNF basis, or nullopt when a is not in I.
  std::optional<std::vector<Int>> contains(const FieldElement& a) const;

  /// Every basis vector times t stays inside the lattice.
  bool is_t_stable() const;

  friend bool operator==(const FractionalIdeal& a, const FractionalIdeal& b) {
    return a.denominator_ == b.denominator_ && a.basis_ == b.basis_;
  }

 private:
  CubicField field_;
  Int denominator_;
  IntMatrix basis_;
};

/// The O-module generated by gens: the Z-span of g*t^j for j = 0, 1, 2.
FractionalIdeal ideal_from_generators(const CubicField& field, std::span<const FieldElement> gens);

/// Element of K with coordinates (column / d).
FieldElement element_from_column(const IntColumn& column, const Int& d);

}  // namespace regent
