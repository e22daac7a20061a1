#include "regent/systems.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace regent {

bool MinimalSystem::holds(const FinSubset& a, const GroupElement& b) const {
  return std::any_of(a.begin(), a.end(), [&](const GroupElement& x) { return group().leq(x, b); });
}

DedekindSystem::DedekindSystem(GroupDescriptor group) : SystemOfIdeals(std::move(group)) {
  if (this->group().kind() != GroupKind::divisibility)
    throw std::invalid_argument("the Dedekind system needs a divisibility group");
}

FractionalIdeal DedekindSystem::ideal(const FinSubset& a) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = ideals_.find(a); it != ideals_.end()) return it->second;
  }
  std::vector<FieldElement> gens;
  gens.reserve(a.size());
  for (const auto& e : a) {
    if (!group().belongs(e)) throw std::invalid_argument("element " + to_string(e) + " is not in the divisibility group");
    gens.push_back(e.field_element());
  }
  FractionalIdeal ideal = ideal_from_generators(group().field(), gens);
  std::unique_lock lock(mutex_);
  return ideals_.emplace(a, std::move(ideal)).first->second;
}

bool DedekindSystem::holds(const FinSubset& a, const GroupElement& b) const {
  if (!group().belongs(b)) throw std::invalid_argument("element " + to_string(b) + " is not in the divisibility group");
  return ideal(a).contains(b.field_element()).has_value();
}

MemoizedSystem::MemoizedSystem(SystemPtr inner) : SystemOfIdeals(inner->group()), inner_(std::move(inner)) {}

bool MemoizedSystem::holds(const FinSubset& a, const GroupElement& b) const {
  auto key = std::make_pair(a, b);
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  const bool result = inner_->holds(a, b);
  std::unique_lock lock(mutex_);
  cache_.emplace(std::move(key), result);
  return result;
}

std::size_t MemoizedSystem::cache_size() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

IntersectionSystem::IntersectionSystem(SystemPtr first, SystemPtr second)
    : SystemOfIdeals(first->group()), first_(std::move(first)), second_(std::move(second)) {
  if (!(first_->group() == second_->group())) throw std::invalid_argument("intersection of systems over different groups");
}

bool IntersectionSystem::holds(const FinSubset& a, const GroupElement& b) const {
  return first_->holds(a, b) && second_->holds(a, b);
}

SystemPtr make_system(const std::string& name, const GroupDescriptor& group) {
  if (name == "sm") return std::make_shared<MinimalSystem>(group);
  if (name == "dedekind") return std::make_shared<DedekindSystem>(group);
  throw std::invalid_argument("unknown system '" + name + "' (expected sm or dedekind)");
}

bool sm_holds(const GroupDescriptor& g, const FinSubset& a, const GroupElement& b) {
  return MinimalSystem(g).holds(a, b);
}

bool dedekind_holds(const GroupDescriptor& g, const FinSubset& a, const GroupElement& b) {
  return DedekindSystem(g).holds(a, b);
}

bool meet_leq(const SystemOfIdeals& s, const FinSubset& a, const FinSubset& b) {
  return std::all_of(b.begin(), b.end(), [&](const GroupElement& x) { return s.holds(a, x); });
}

FinSubset Sampler::subset(std::mt19937_64& rng) const { return subset(rng, 1, max_subset_size); }

FinSubset Sampler::subset(std::mt19937_64& rng, std::size_t min_size, std::size_t max_size) const {
  std::uniform_int_distribution<std::size_t> size(min_size, std::max(min_size, max_size));
  const std::size_t n = size(rng);
  std::vector<GroupElement> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(element(rng));
  return FinSubset(std::move(v));
}

std::size_t AxiomReport::count(const std::string& axiom) const {
  auto it = nontrivial.find(axiom);
  return it == nontrivial.end() ? 0 : it->second;
}

namespace {

std::string show(const FinSubset& a, const GroupElement& x) { return to_string(a) + " |> " + to_string(x); }

}  // namespace

AxiomReport check_system_axioms(const SystemOfIdeals& s, const Sampler& sampler, std::size_t n, std::uint64_t seed) {
  const GroupDescriptor& g = s.group();
  std::mt19937_64 rng(seed);
  AxiomReport report;
  report.seed = seed;
  report.samples = n;
  auto fail = [&](const char* axiom, std::string detail) { report.counterexamples.push_back({axiom, std::move(detail)}); };

  for (std::size_t i = 0; i < n; ++i) {
    const FinSubset a = sampler.subset(rng);
    const FinSubset extra = sampler.subset(rng);
    const GroupElement x = sampler.element(rng);
    const GroupElement y = sampler.element(rng);

    // S1
    if (s.holds(a, x)) {
      ++report.nontrivial["S1"];
      if (!s.holds(a.unite(extra), x)) fail("S1", show(a, x) + " but not " + show(a.unite(extra), x));
    }
    // S2
    if (s.holds(a.with(y), x) && s.holds(a, y)) {
      ++report.nontrivial["S2"];
      if (!s.holds(a, x)) fail("S2", show(a.with(y), x) + " and " + show(a, y) + " but not " + show(a, x));
    }
    // S3: use both a sampled pair and the reflexive pair
    for (const auto& target : {x, a.front()}) {
      if (g.leq(a.front(), target)) {
        ++report.nontrivial["S3"];
        if (!s.holds(FinSubset{a.front()}, target)) fail("S3", to_string(a.front()) + " <= " + to_string(target) + " but not related");
      }
    }
    // S4 as an equivalence
    {
      const bool base = s.holds(a, x);
      const bool moved = s.holds(translate(g, a, y), g.add(x, y));
      if (base || moved) ++report.nontrivial["S4"];
      if (base != moved)
        fail("S4", show(a, x) + (base ? " holds" : " fails") + " but translate by " + to_string(y) + (moved ? " holds" : " fails"));
    }
    // P1
    if (s.holds_zero(a)) {
      ++report.nontrivial["P1"];
      if (!s.holds_zero(a.unite(extra))) fail("P1", "S(" + to_string(a) + ") but not S(" + to_string(a.unite(extra)) + ")");
    }
    // P'2: S(A, u) and S(A - u) imply S(A)
    if (s.holds_zero(a.with(y)) && s.holds_zero(translate(g, a, g.neg(y)))) {
      ++report.nontrivial["P'2"];
      if (!s.holds_zero(a)) fail("P'2", "S(A,u) and S(A-u) but not S(A) for A=" + to_string(a) + ", u=" + to_string(y));
    }
    // P3
    if (g.leq(x, g.zero())) {
      ++report.nontrivial["P3"];
      if (!s.holds_zero(FinSubset{x})) fail("P3", to_string(x) + " <= 0 but not S(" + to_string(x) + ")");
    }
  }
  return report;
}

}  // namespace regent
