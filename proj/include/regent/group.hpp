#pragma once

// Decidable preordered commutative groups and the canonical finite subsets
// every entailment is stated over.
//
// Three instance families are supported:
//   cone          Z^d preordered by  a <= b  iff  b - a lies in the monoid
//                 generated by a finite list P of vectors;
//   discrete      Z^d preordered by equality;
//   divisibility  the nonzero elements of a cubic field, written additively,
//                 with  a <= b  iff  b / a lies in the equation order Z[t].

#include "regent/number_ring.hpp"
#include "regent/numeric.hpp"

#include <boost/container/small_vector.hpp>

#include <compare>
#include <initializer_list>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace regent {

using IntVector = boost::container::small_vector<Int, 2>;

std::strong_ordering compare_vectors(const IntVector& a, const IntVector& b);

/// An immutable group element: an integer vector or a nonzero field element.
class GroupElement {
 public:
  explicit GroupElement(IntVector v) : value_(std::move(v)) {}
  explicit GroupElement(FieldElement f) : value_(std::move(f)) {}

  bool is_vector() const { return value_.index() == 0; }
  bool is_field() const { return value_.index() == 1; }
  const IntVector& vector() const { return std::get<IntVector>(value_); }
  const FieldElement& field_element() const { return std::get<FieldElement>(value_); }

  friend bool operator==(const GroupElement& a, const GroupElement& b);
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);

 private:
  std::variant<IntVector, FieldElement> value_;
};

std::ostream& operator<<(std::ostream& os, const GroupElement& e);
std::string to_string(const GroupElement& e);

/// Rank-one integer element.
GroupElement integer_element(const Int& v);
GroupElement vector_element(std::initializer_list<long> coords);

/// Exact membership in the submonoid of Z^d generated by a finite list of
/// vectors, with a coefficient certificate.
///
/// Strategy, fixed at construction:
///   rank one, one-signed      Apery set modulo the smallest generator;
///   rank one, mixed signs     the monoid is gcd * Z;
///   independent generators    unique rational solve;
///   pointed cone              enumeration bounded by a positive functional;
///   otherwise                 enumeration with coefficients up to search_bound
///                             (exact() reports false in this case only).
class ConeMonoid {
 public:
  static constexpr long search_bound = 64;

  ConeMonoid(std::size_t rank, std::vector<IntVector> generators);

  std::size_t rank() const { return rank_; }
  const std::vector<IntVector>& generators() const { return generators_; }
  bool exact() const { return strategy_ != Strategy::bounded; }

  /// Nonnegative coefficients m with sum m_j p_j == v, or nullopt.
  std::optional<std::vector<Int>> decompose(const IntVector& v) const;

 private:
  enum class Strategy { trivial, apery, lattice, independent, pointed, bounded };

  std::optional<std::vector<Int>> decompose_apery(const Int& v) const;
  std::optional<std::vector<Int>> decompose_lattice(const Int& v) const;
  std::optional<std::vector<Int>> decompose_independent(const IntVector& v) const;
  std::optional<std::vector<Int>> enumerate(const IntVector& v) const;

  std::size_t rank_;
  std::vector<IntVector> generators_;
  Strategy strategy_ = Strategy::trivial;

  // apery: sign of the generators, index of the smallest |p|, and per residue
  // the least monoid element and the generator used to reach it last.
  int sign_ = 1;
  std::size_t modulus_index_ = 0;
  std::vector<std::optional<Int>> apery_;
  std::vector<std::size_t> apery_last_;
  // independent: indices of rows forming an invertible square block.
  std::vector<std::size_t> pivot_rows_;
  // pointed: positive functional values lambda(p_j), scaled to integers.
  std::vector<Int> functional_;
  std::vector<Int> functional_on_generators_;
};

/// Free function form of ConeMonoid::decompose; throws std::invalid_argument
/// on empty P or mismatched dimensions.
std::optional<std::vector<Int>> cone_membership(std::span<const IntVector> generators, const IntVector& v);

enum class GroupKind { cone, discrete, divisibility };

/// A decidable preordered commutative group. Cheap to copy.
class GroupDescriptor {
 public:
  static GroupDescriptor cone(std::size_t rank, std::vector<IntVector> generators);
  static GroupDescriptor discrete(std::size_t rank = 1);
  static GroupDescriptor divisibility(const CubicField& field);

  GroupKind kind() const { return kind_; }
  /// Vector length for cone/discrete; 0 for divisibility.
  std::size_t rank() const { return rank_; }
  /// The generator list P (empty for discrete groups).
  const std::vector<IntVector>& generators() const;
  const CubicField& field() const;
  const ConeMonoid& monoid() const;

  bool belongs(const GroupElement& a) const;
  GroupElement zero() const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  /// n * a in additive notation (a^n for the divisibility group).
  GroupElement scale(const Int& n, const GroupElement& a) const;
  bool leq(const GroupElement& a, const GroupElement& b) const;

  /// Short human-readable description, e.g. "cone Z^1 P={60}".
  std::string describe() const;

  friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b);

 private:
  GroupDescriptor() = default;
  void check(const GroupElement& a) const;

  GroupKind kind_ = GroupKind::discrete;
  std::size_t rank_ = 1;
  std::shared_ptr<const ConeMonoid> monoid_;
  std::shared_ptr<const CubicField> field_;
};

/// A nonempty, sorted, duplicate-free finite set of group elements.
class FinSubset {
 public:
  /// Throws std::invalid_argument when elems is empty.
  explicit FinSubset(std::vector<GroupElement> elems);
  FinSubset(std::initializer_list<GroupElement> elems) : FinSubset(std::vector<GroupElement>(elems)) {}

  std::size_t size() const { return elems_.size(); }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }
  const std::vector<GroupElement>& elements() const { return elems_; }
  const GroupElement& front() const { return elems_.front(); }
  const GroupElement& back() const { return elems_.back(); }
  bool contains(const GroupElement& e) const;
  bool includes(const FinSubset& other) const;

  /// "A, x"
  FinSubset with(const GroupElement& e) const;
  /// "A, B"
  FinSubset unite(const FinSubset& other) const;

  friend bool operator==(const FinSubset&, const FinSubset&) = default;
  friend std::strong_ordering operator<=>(const FinSubset& a, const FinSubset& b);

 private:
  std::vector<GroupElement> elems_;
};

std::ostream& operator<<(std::ostream& os, const FinSubset& s);
std::string to_string(const FinSubset& s);

/// {a + x : a in A}
FinSubset translate(const GroupDescriptor& g, const FinSubset& a, const GroupElement& x);
/// {a + b : a in A, b in B}
FinSubset minkowski_sum(const GroupDescriptor& g, const FinSubset& a, const FinSubset& b);
/// {a - b : a in A, b in B}
FinSubset difference_set(const GroupDescriptor& g, const FinSubset& a, const FinSubset& b);
/// {-a : a in A}
FinSubset negate(const GroupDescriptor& g, const FinSubset& a);

/// Rank-one integer set, e.g. integer_set({10, 24}).
FinSubset integer_set(std::initializer_list<long> values);
FinSubset integer_set(const std::vector<Int>& values);

}  // namespace regent
