#pragma once

// Formal meets and the Grothendieck l-group of a regular entailment relation.
//
// A FinSubset A stands for the formal meet /\A; /\A + /\B = /\(A+B) and
// /\A ∧ /\B = /\(A ∪ B), preordered by /\A <= /\B iff A |- b for all b in B.
// An l-group element is a formal difference /\A - /\B, stored as (A, B).

#include "regent/entailment.hpp"

#include <utility>

namespace regent {

/// /\A <= /\B.
Status meet_monoid_leq(const RegularEntailment& e, const FinSubset& a, const FinSubset& b);

struct LGroupElement {
  FinSubset plus;   // A
  FinSubset minus;  // B

  friend bool operator==(const LGroupElement&, const LGroupElement&) = default;
};

std::string to_string(const LGroupElement& x);

/// ({a}, {0}).
LGroupElement phi(const GroupDescriptor& g, const GroupElement& a);
LGroupElement lg_zero(const GroupDescriptor& g);
LGroupElement lg_add(const GroupDescriptor& g, const LGroupElement& x, const LGroupElement& y);
LGroupElement lg_neg(const LGroupElement& x);
LGroupElement lg_sub(const GroupDescriptor& g, const LGroupElement& x, const LGroupElement& y);
/// ((A+D) ∪ (C+B), B+D).
LGroupElement lg_meet(const GroupDescriptor& g, const LGroupElement& x, const LGroupElement& y);
/// -(-x ∧ -y).
LGroupElement lg_join(const GroupDescriptor& g, const LGroupElement& x, const LGroupElement& y);

/// (A,B) <= (C,D) iff /\(A+D) <= /\(C+B).
Status lg_leq(const RegularEntailment& e, const LGroupElement& x, const LGroupElement& y);
/// Both directions of lg_leq.
Status lg_equiv(const RegularEntailment& e, const LGroupElement& x, const LGroupElement& y);

/// Normal form on discrete Z: (min A - min B, max A - max B), a point of
/// Z x Z° (second factor conversely ordered). Throws std::invalid_argument
/// for any other group.
std::pair<Int, Int> to_pair(const GroupDescriptor& g, const LGroupElement& x);

/// X + A <= X + B  implies  A <= B, on sampled X, A, B.
AxiomReport check_cancellative(const RegularEntailment& e, const Sampler& sampler, std::size_t n, std::uint64_t seed);

/// Group, lattice and compatibility laws on sampled elements, up to ≈.
AxiomReport check_lgroup_laws(const RegularEntailment& e, const Sampler& sampler, std::size_t n, std::uint64_t seed);

}  // namespace regent
