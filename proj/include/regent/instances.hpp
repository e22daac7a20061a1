#pragma once

// The three shipped instances and samplers over them.
//   exa1  Z preordered by x <= y iff y - x in 60N
//   exa2  divisibility group of Z[t]/(t^3 - t^2 + t + 7)
//   exa3  Z preordered by equality

#include "regent/json_io.hpp"

namespace regent {

GroupDescriptor exa1_group();
GroupDescriptor exa2_group();
GroupDescriptor exa3_group();

/// exa1 | exa2 | exa3; throws std::invalid_argument otherwise.
GroupDescriptor named_instance(const std::string& name);

/// y = (t^2 + 1)/2 and z = 1/y in the standard cubic field.
FieldElement exa2_y();
FieldElement exa2_z();

/// Uniform integers step*i, |i| <= radius; nonnegative part is multiples of
/// `unit` (the cone generator) up to 3 units.
Sampler integer_sampler(long radius, long step, long unit);

/// Products of small powers of t, y and z (and signs) in the divisibility group.
Sampler field_sampler();

/// Sampler suited to a named instance.
Sampler default_sampler(const std::string& instance);

struct Claim {
  std::string id;
  std::string statement;
  bool passed = false;
  Json detail;
};

struct SuiteReport {
  std::string name;
  std::vector<Claim> claims;
  double seconds = 0;

  bool passed() const;
  Json to_json() const;
};

/// Scripted checks for a shipped example. Throws std::invalid_argument for
/// an unknown name.
SuiteReport run_example(const std::string& name);

}  // namespace regent
