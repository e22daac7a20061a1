#pragma once

// Exact rational linear algebra: rank, unique solves, and a phase-one simplex
// that decides feasibility of {x >= 0 : A x = b}.

#include "regent/numeric.hpp"

#include <optional>
#include <vector>

namespace regent {

using RationalRow = std::vector<Rational>;
using RationalMatrix = std::vector<RationalRow>;  // row-major

std::size_t rank(RationalMatrix rows);

/// The unique x with A x = b when A has full column rank and the system is
/// consistent; nullopt when inconsistent. Throws std::domain_error when the
/// columns of A are dependent.
std::optional<RationalRow> solve_unique(const RationalMatrix& a, const RationalRow& b);

/// A point x >= 0 with A x = b, or nullopt when none exists. Uses Bland's rule,
/// so it always terminates; the returned point is a basic feasible solution.
std::optional<RationalRow> find_nonnegative_solution(const RationalMatrix& a, const RationalRow& b);

}  // namespace regent
