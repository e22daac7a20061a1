#pragma once

// The regularisation L(S) of an equivariant system of ideals.
//
// L(S) is the union of all U_{x1} ... U_{xn}(S). Expanding each U into its
// two T branches, L(S) relates A to b as soon as some finite list of forcing
// elements x1..xn has, for every sign vector e in {+1,-1}^n, depths k1..kn
// for which S relates  A + sum_i {0, -e_i x_i, ..., -k_i e_i x_i}  to b.
// l_holds() searches for such a list; it is a semi-decision.
//
// Two independent descriptions are provided alongside it: the Prufer form
// (A is regular-below 0 iff A + B <=_S B for some finite B) and, for S_M on
// cone-preordered Z^d, an exact decision by rational linear programming.

#include "regent/forcing.hpp"
#include "regent/systems.hpp"
#include "regent/verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace regent {

struct RegularisationBudget {
  unsigned k_max = 128;  // per forcing level
  unsigned n_max = 2;    // forcing elements per certificate
};

struct LorenzenBranch {
  std::vector<int> signs;  // +1 or -1 per forcing element
  std::vector<unsigned> ks;
};

/// Witness that L(S) relates A to b: one branch per sign vector, in
/// lexicographic order with +1 before -1.
struct LorenzenCertificate {
  FinSubset a;
  GroupElement b;
  std::vector<GroupElement> xs;
  std::vector<LorenzenBranch> branches;
};

/// Checks every one of the 2^n sign vectors is present exactly once and
/// replays each branch against the base system. On failure, `failure`
/// receives a description naming the offending branch.
bool replay(const SystemOfIdeals& s, const LorenzenCertificate& cert, std::string* failure = nullptr);

/// Nonzero differences u - v of elements of A ∪ {b}, one per pair {x, -x},
/// followed by `extras`.
std::vector<GroupElement> default_pool(const GroupDescriptor& g, const FinSubset& a, const GroupElement& b,
                                       const std::vector<GroupElement>& extras = {});

/// Searches subsets of `pool` of size 0..n_max in lexicographic index order
/// and returns the first whose 2^n branches all succeed within k_max.
Verdict<LorenzenCertificate> l_holds(const SystemOfIdeals& s, const FinSubset& a, const GroupElement& b,
                                     const std::vector<GroupElement>& pool, RegularisationBudget budget = {});

// ---------------------------------------------------------------------------
// Prufer

struct PruferCertificate {
  FinSubset a;
  FinSubset witness;  // B with A + B <=_S B
};

/// A + B <=_S B; pure replay.
bool prufer_check(const SystemOfIdeals& s, const FinSubset& a, const FinSubset& b);

/// Looks for B inside `universe`. The largest valid B contained in the
/// universe is computed by deleting failing elements until stable (valid for
/// any system satisfying weakening), so absence is exact relative to the
/// universe. Elements are then removed one at a time in ascending order
/// until no single removal leaves a witness; a result larger than `size_cap`
/// is discarded.
std::optional<PruferCertificate> prufer_search(const SystemOfIdeals& s, const FinSubset& a, const FinSubset& universe,
                                               std::size_t size_cap);

/// Integer range [lo, hi] as a rank-one universe.
FinSubset integer_range(long lo, long hi);

struct CycleCertificate {
  Int n;                              // cycle length
  std::vector<GroupElement> cycle;    // b_1, ..., b_n with a + b_{i+1} <= b_i
};

/// Given a + B <=_{S_M} B, follows b -> (first b' in B with a + b' <= b)
/// until it repeats; the cycle length n satisfies n*a <= 0, which is checked.
/// Throws std::invalid_argument if the precondition fails.
CycleCertificate cycle_extract(const GroupDescriptor& g, const GroupElement& a, const FinSubset& b);

// ---------------------------------------------------------------------------
// Exact decision for S_M on cone-preordered Z^d

/// Either nonnegative integers n (not all zero) and m with
///     -(n_1 a_1 + ... + n_k a_k) = m_1 p_1 + ... + m_q p_q,
/// i.e. sum n_i a_i <= 0, or an integer functional lambda with
/// lambda(p_j) >= 0 for all j and lambda(a_i) > 0 for all i.
struct ConeDecision {
  bool positive = false;
  std::vector<Int> n;
  std::vector<Int> m;
  std::vector<Int> functional;
};

/// Decides whether n_1 a_1 + ... + n_k a_k <= 0 for some n >= 0 with
/// sum n > 0. Throws std::invalid_argument for divisibility groups.
ConeDecision lcd_decide(const GroupDescriptor& g, const FinSubset& a);

/// Integer replay of either kind of answer.
bool check_cone_decision(const GroupDescriptor& g, const FinSubset& a, const ConeDecision& d,
                         std::string* failure = nullptr);

/// A |- B in L(S_M), decided as lcd_decide(A - B).
bool regular_entails_decidable(const GroupDescriptor& g, const FinSubset& a, const FinSubset& b);

}  // namespace regent
