#include "regent/linear.hpp"

#include <stdexcept>

namespace regent {

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t found = row;
    while (found < m.size() && m[found][col] == 0) ++found;
    if (found == m.size()) continue;
    std::swap(m[row], m[found]);
    Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RationalMatrix rows) {
  if (rows.empty()) return 0;
  return row_reduce(rows, rows.front().size()).size();
}

std::optional<RationalRow> solve_unique(const RationalMatrix& a, const RationalRow& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_unique: dimension mismatch");
  const std::size_t n = a.empty() ? 0 : a.front().size();
  RationalMatrix aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  auto pivots = row_reduce(aug, n + 1);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  if (pivots.size() != n) throw std::domain_error("solve_unique: columns are linearly dependent");
  RationalRow x(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][n];
  return x;
}

std::optional<RationalRow> find_nonnegative_solution(const RationalMatrix& a, const RationalRow& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw std::invalid_argument("find_nonnegative_solution: dimension mismatch");
  const std::size_t n = m == 0 ? 0 : a.front().size();
  if (m == 0) return RationalRow(n, Rational(0));

  // Tableau columns: n structural, m artificial, then the right-hand side.
  const std::size_t width = n + m + 1;
  RationalMatrix t(m, RationalRow(width, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = b[r] < 0;
    for (std::size_t c = 0; c < n; ++c) t[r][c] = flip ? Rational(-a[r][c]) : a[r][c];
    t[r][n + r] = 1;
    t[r][width - 1] = flip ? Rational(-b[r]) : b[r];
    basis[r] = n + r;
  }
  // Phase-one objective: minimise the sum of artificials.
  RationalRow cost(width, Rational(0));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) cost[c] -= t[r][c];
    cost[width - 1] -= t[r][width - 1];
  }

  while (true) {
    std::size_t entering = width;
    for (std::size_t c = 0; c + 1 < width; ++c) {
      if (cost[c] < 0) {
        entering = c;
        break;
      }
    }
    if (entering == width) break;

    std::size_t leaving = m;
    Rational best_ratio;
    for (std::size_t r = 0; r < m; ++r) {
      if (t[r][entering] <= 0) continue;
      Rational ratio = t[r][width - 1] / t[r][entering];
      if (leaving == m || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leaving])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    if (leaving == m) break;  // unbounded direction; cannot happen in phase one

    Rational inv = 1 / t[leaving][entering];
    for (auto& v : t[leaving]) v *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leaving || t[r][entering] == 0) continue;
      Rational f = t[r][entering];
      for (std::size_t c = 0; c < width; ++c) t[r][c] -= f * t[leaving][c];
    }
    if (cost[entering] != 0) {
      Rational f = cost[entering];
      for (std::size_t c = 0; c < width; ++c) cost[c] -= f * t[leaving][c];
    }
    basis[leaving] = entering;
  }

  if (cost[width - 1] != 0) return std::nullopt;
  RationalRow x(n, Rational(0));
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < n) x[basis[r]] = t[r][width - 1];
  }
  return x;
}

}  // namespace regent
