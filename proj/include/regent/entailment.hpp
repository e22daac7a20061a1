#pragma once

// Regular entailment relations presented by a predicate R on finite sets:
// A |- B is R(A - B), where A - B = {a - b}. R(D) reads "D |- 0".
//
// Backends:
//   ConeEntailment      L(S_M) on cone-preordered (or discrete) Z^d, decided
//                       exactly by lcd_decide
//   IntervalEntailment  L(S_M) on discrete Z, min D <= 0 <= max D
//   LorenzenEntailment  L(S) for any system, by budgeted l_holds
//   RawEntailment       S itself, unregularised (a negative control: it is an
//                       entailment relation but in general not regular)

#include "regent/regularisation.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <variant>

namespace regent {

using Evidence = std::variant<std::monostate, ConeDecision, LorenzenCertificate>;

class RegularEntailment {
 public:
  explicit RegularEntailment(GroupDescriptor group) : group_(std::move(group)) {}
  virtual ~RegularEntailment() = default;

  const GroupDescriptor& group() const { return group_; }
  virtual std::string name() const = 0;
  /// Whether every answer is holds/refuted (never unknown).
  virtual bool decidable() const = 0;
  /// R(D).
  virtual Verdict<Evidence> regular(const FinSubset& d) const = 0;

 private:
  GroupDescriptor group_;
};

using EntailmentPtr = std::shared_ptr<const RegularEntailment>;

class ConeEntailment final : public RegularEntailment {
 public:
  explicit ConeEntailment(GroupDescriptor group);
  std::string name() const override { return "cone"; }
  bool decidable() const override { return true; }
  Verdict<Evidence> regular(const FinSubset& d) const override;
};

class IntervalEntailment final : public RegularEntailment {
 public:
  IntervalEntailment();
  std::string name() const override { return "interval"; }
  bool decidable() const override { return true; }
  Verdict<Evidence> regular(const FinSubset& d) const override;
};

class LorenzenEntailment final : public RegularEntailment {
 public:
  LorenzenEntailment(SystemPtr system, RegularisationBudget budget, std::vector<GroupElement> pool_extras = {});
  std::string name() const override { return "lorenzen:" + system_->name(); }
  bool decidable() const override { return false; }
  Verdict<Evidence> regular(const FinSubset& d) const override;

  const SystemOfIdeals& system() const { return *system_; }
  RegularisationBudget budget() const { return budget_; }
  std::size_t cache_size() const;

 private:
  SystemPtr system_;
  RegularisationBudget budget_;
  std::vector<GroupElement> extras_;
  mutable std::mutex mutex_;
  mutable std::map<FinSubset, Verdict<Evidence>> cache_;
};

class RawEntailment final : public RegularEntailment {
 public:
  explicit RawEntailment(SystemPtr system);
  std::string name() const override { return "raw:" + system_->name(); }
  bool decidable() const override { return true; }
  Verdict<Evidence> regular(const FinSubset& d) const override;

 private:
  SystemPtr system_;
};

/// Backend by name: "cone", "interval", "lorenzen" (over `system`), "raw".
EntailmentPtr make_entailment(const std::string& backend, const GroupDescriptor& group, const std::string& system,
                              RegularisationBudget budget = {}, std::vector<GroupElement> pool_extras = {});

/// A |- B, i.e. R(A - B).
Verdict<Evidence> entails(const RegularEntailment& e, const FinSubset& a, const FinSubset& b);
Status entails_status(const RegularEntailment& e, const FinSubset& a, const FinSubset& b);

/// Closed form of the discrete-Z relation: min A <= max B and max A >= min B.
bool interval_oracle(const FinSubset& a, const FinSubset& b);

/// R1-R5 and P1, P2, P3, P5 on sampled instances. Unknown verdicts are
/// tallied under `unresolved` and never reported as violations.
AxiomReport check_regular_axioms(const RegularEntailment& e, const Sampler& sampler, std::size_t n, std::uint64_t seed);

/// Consequences of regularity, each as an implication or equivalence
/// between verdicts:
///   main1     a,b |- a+x,b-x  and  a+x,b-x |- a,b
///   R1-cor    A,A+x |- B and A,A-x |- B  imply  A |- B
///   R2        A,A+x |- B  iff  A |- B,B-x
///   conv      a,a+qx |- a+px  for 0 <= p <= q
///   main3     A |-_x B and A |-_{-x} B  imply  A |- B, with |-_x found by
///             forcing 0 <= x on the relation A |> b := A |- b
///   key       A |- B  iff  A-B |- 0  iff  0 |- B-A
///   cancel    A+B |- b for all b in B  implies  A |- 0
///   zero-sum  a1+...+an = 0  implies  a1,...,an |- 0, and the two-sided form
AxiomReport check_derived_lemmas(const RegularEntailment& e, const Sampler& sampler, std::size_t n, std::uint64_t seed,
                                 unsigned force_depth = 16);

/// The system A |> b := A |- {b}; unknown answers count as false.
SystemPtr as_system(EntailmentPtr e);

}  // namespace regent
