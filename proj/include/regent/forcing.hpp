#pragma once

// Forcing operators on systems of ideals.
//
// T_x(S) is the least equivariant system containing S in which x <= 0. It
// relates A to b exactly when, for some k >= 0,
//     S relates  A ∪ (A - x) ∪ ... ∪ (A - kx)  to b,
// so T_x(S) is searched by growing k. U_x(S) = T_x(S) ∩ T_{-x}(S).
//
// Searches are bounded by a Budget; certificate checks are not.

#include "regent/systems.hpp"
#include "regent/verdict.hpp"

#include <optional>
#include <span>
#include <vector>

namespace regent {

struct Budget {
  unsigned k_max = 128;
};

/// A ∪ (A - x) ∪ ... ∪ (A - kx).
FinSubset chain_expand(const GroupDescriptor& g, const FinSubset& a, const GroupElement& x, unsigned k);
/// Nested expansion, one depth per forcing element (order independent).
FinSubset chain_expand(const GroupDescriptor& g, const FinSubset& a, std::span<const GroupElement> xs,
                       std::span<const unsigned> ks);

/// Witness that T_{x1} ... T_{xn}(S) relates A to every target: the base
/// system relates the expanded chain set to each target.
struct ChainCertificate {
  std::vector<GroupElement> xs;
  std::vector<unsigned> ks;
  FinSubset chain;
  FinSubset targets;
  bool base_holds = false;
};

/// Recomputes the chain from (a, xs, ks), compares it with the recorded one
/// and queries the base system once per target.
bool replay(const SystemOfIdeals& s, const FinSubset& a, const ChainCertificate& cert);

/// T_x(S) relates A to every element of `targets`. On success the
/// certificate carries the least k <= budget.k_max.
Verdict<ChainCertificate> t_force_holds(const SystemOfIdeals& s, const GroupElement& x, const FinSubset& a,
                                        const FinSubset& targets, Budget budget = {});
Verdict<ChainCertificate> t_force_holds(const SystemOfIdeals& s, const GroupElement& x, const FinSubset& a,
                                        const GroupElement& b, Budget budget = {});

/// T_{x1}(... T_{xn}(S) ...). Each level has its own depth bound k_max. The
/// certificate's depths are the smallest common radius r that succeeds,
/// then lexicographically least within [0, r]^n.
Verdict<ChainCertificate> t_compose_holds(const SystemOfIdeals& s, std::span<const GroupElement> xs,
                                          const FinSubset& a, const FinSubset& targets, Budget budget = {});

struct UCertificate {
  ChainCertificate positive;  // T_x branch
  ChainCertificate negative;  // T_{-x} branch
};

Verdict<UCertificate> u_force_holds(const SystemOfIdeals& s, const GroupElement& x, const FinSubset& a,
                                    const FinSubset& targets, Budget budget = {});
Verdict<UCertificate> u_force_holds(const SystemOfIdeals& s, const GroupElement& x, const FinSubset& a,
                                    const GroupElement& b, Budget budget = {});

struct ChainDepth {
  unsigned k = 0;
  /// Whether the two-point set A ∪ (A - kx) alone already succeeds.
  bool two_point_holds = false;
};

/// Least k <= k_max with a successful full chain, or nullopt.
std::optional<ChainDepth> min_chain_depth(const SystemOfIdeals& s, const GroupElement& x, const FinSubset& a,
                                          const FinSubset& targets, unsigned k_max);

/// T_x(S) truncated at a fixed budget, usable wherever a system is expected.
/// Budget exhaustion answers false.
class ForcedSystem final : public SystemOfIdeals {
 public:
  ForcedSystem(SystemPtr base, GroupElement x, Budget budget);
  std::string name() const override;
  bool holds(const FinSubset& a, const GroupElement& b) const override;

 private:
  SystemPtr base_;
  GroupElement x_;
  Budget budget_;
};

}  // namespace regent
