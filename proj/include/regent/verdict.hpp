#pragma once

#include <optional>
#include <string_view>

namespace regent {

/// Outcome of a query against a (semi-)decidable relation. `unknown` means
/// a search budget ran out and is never a claim of falsity.
enum class Status { holds, refuted, unknown };

constexpr std::string_view to_string(Status s) {
  switch (s) {
    case Status::holds:
      return "holds";
    case Status::refuted:
      return "refuted";
    case Status::unknown:
      return "unknown";
  }
  return "unknown";
}

template <class Certificate>
struct Verdict {
  Status status = Status::unknown;
  std::optional<Certificate> certificate;

  static Verdict proved(Certificate c) { return {Status::holds, std::move(c)}; }
  static Verdict disproved() { return {Status::refuted, std::nullopt}; }
  static Verdict disproved(Certificate c) { return {Status::refuted, std::move(c)}; }
  static Verdict undecided() { return {Status::unknown, std::nullopt}; }

  bool holds() const { return status == Status::holds; }
  bool refuted() const { return status == Status::refuted; }
  bool unknown() const { return status == Status::unknown; }
};

}  // namespace regent
