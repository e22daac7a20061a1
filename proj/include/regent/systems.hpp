#pragma once

// Equivariant systems of ideals: decidable relations  A |> b  between
// nonempty finite subsets and elements satisfying weakening (S1), cut (S2),
// A |> x whenever a <= x for some a in A (S3), and translation (S4).

#include "regent/group.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <string>
#include <vector>

namespace regent {

class SystemOfIdeals {
 public:
  explicit SystemOfIdeals(GroupDescriptor group) : group_(std::move(group)) {}
  virtual ~SystemOfIdeals() = default;

  const GroupDescriptor& group() const { return group_; }
  virtual std::string name() const = 0;
  virtual bool holds(const FinSubset& a, const GroupElement& b) const = 0;

  /// The predicate form S(A) := A |> 0.
  bool holds_zero(const FinSubset& a) const { return holds(a, group_.zero()); }

 private:
  GroupDescriptor group_;
};

using SystemPtr = std::shared_ptr<const SystemOfIdeals>;

/// The least equivariant system S_M: A |> b iff some a in A has a <= b.
class MinimalSystem final : public SystemOfIdeals {
 public:
  using SystemOfIdeals::SystemOfIdeals;
  std::string name() const override { return "sm"; }
  bool holds(const FinSubset& a, const GroupElement& b) const override;
};

/// The Dedekind system on a divisibility group: b lies in the fractional
/// ideal generated by A. Ideals are cached per generator set.
class DedekindSystem final : public SystemOfIdeals {
 public:
  /// Throws std::invalid_argument unless the group is a divisibility group.
  explicit DedekindSystem(GroupDescriptor group);
  std::string name() const override { return "dedekind"; }
  bool holds(const FinSubset& a, const GroupElement& b) const override;

  FractionalIdeal ideal(const FinSubset& a) const;

 private:
  mutable std::shared_mutex mutex_;
  mutable std::map<FinSubset, FractionalIdeal> ideals_;
};

/// Caches another system's answers keyed by the canonical (A, b).
class MemoizedSystem final : public SystemOfIdeals {
 public:
  explicit MemoizedSystem(SystemPtr inner);
  std::string name() const override { return inner_->name(); }
  bool holds(const FinSubset& a, const GroupElement& b) const override;
  std::size_t cache_size() const;

 private:
  SystemPtr inner_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::pair<FinSubset, GroupElement>, bool> cache_;
};

/// S ∩ S'.
class IntersectionSystem final : public SystemOfIdeals {
 public:
  IntersectionSystem(SystemPtr first, SystemPtr second);
  std::string name() const override { return first_->name() + "&" + second_->name(); }
  bool holds(const FinSubset& a, const GroupElement& b) const override;

 private:
  SystemPtr first_;
  SystemPtr second_;
};

/// Plain predicate wrapper, mainly for tests and negative controls.
class PredicateSystem final : public SystemOfIdeals {
 public:
  using Predicate = std::function<bool(const FinSubset&, const GroupElement&)>;
  PredicateSystem(GroupDescriptor group, std::string name, Predicate predicate)
      : SystemOfIdeals(std::move(group)), name_(std::move(name)), predicate_(std::move(predicate)) {}
  std::string name() const override { return name_; }
  bool holds(const FinSubset& a, const GroupElement& b) const override { return predicate_(a, b); }

 private:
  std::string name_;
  Predicate predicate_;
};

/// Builds a shipped system by CLI name ("sm" | "dedekind").
SystemPtr make_system(const std::string& name, const GroupDescriptor& group);

bool sm_holds(const GroupDescriptor& g, const FinSubset& a, const GroupElement& b);
bool dedekind_holds(const GroupDescriptor& g, const FinSubset& a, const GroupElement& b);

/// A <=_S B: A |> b for every b in B.
bool meet_leq(const SystemOfIdeals& s, const FinSubset& a, const FinSubset& b);

/// Random elements and subsets of one group instance. Generators are supplied
/// by the caller so that sampled instances hit nontrivial premises.
struct Sampler {
  std::function<GroupElement(std::mt19937_64&)> element;
  /// Optional: elements >= 0, used to build pairs a <= b.
  std::function<GroupElement(std::mt19937_64&)> nonnegative;
  std::size_t max_subset_size = 3;

  FinSubset subset(std::mt19937_64& rng) const;
  FinSubset subset(std::mt19937_64& rng, std::size_t min_size, std::size_t max_size) const;
};

/// One failed instance of an axiom.
struct Counterexample {
  std::string axiom;
  std::string detail;
};

/// Per-axiom tallies: how many sampled instances had all premises true, and
/// the counterexamples found.
struct AxiomReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::map<std::string, std::size_t> nontrivial;
  std::map<std::string, std::size_t> unresolved;
  std::vector<Counterexample> counterexamples;

  bool passed() const { return counterexamples.empty(); }
  std::size_t count(const std::string& axiom) const;
};

/// Samples S1-S4 and the predicate forms P1, P'2, P3 (with S(A) := A |> 0).
AxiomReport check_system_axioms(const SystemOfIdeals& s, const Sampler& sampler, std::size_t n, std::uint64_t seed);

}  // namespace regent
