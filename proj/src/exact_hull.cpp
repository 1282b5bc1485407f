#include "toricode/exact_hull.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>

namespace toricode {

bool in_convex_hull(std::span<const LatticePoint> points, const LatticePoint& x) {
  if (points.empty()) return false;
  const std::size_t n = x.size();
  for (const auto& v : points) {
    if (v.size() != n) throw std::invalid_argument("in_convex_hull: dimension mismatch");
    if (v == x) return true;
  }
  // Outside the bounding box means outside the hull.
  for (std::size_t i = 0; i < n; ++i) {
    auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                        [i](const auto& a, const auto& b) { return a[i] < b[i]; });
    if (x[i] < (*lo)[i] || x[i] > (*hi)[i]) return false;
  }

  // Tableau: rows = n coordinate equations + the affine equation;
  // columns = point weights, one artificial per row, then the right-hand side.
  const std::size_t rows = n + 1;
  const std::size_t vars = points.size();
  const std::size_t cols = vars + rows + 1;
  const std::size_t rhs = cols - 1;
  std::vector<std::vector<mpq_class>> t(rows, std::vector<mpq_class>(cols, 0));
  std::vector<std::size_t> basis(rows);

  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < vars; ++j) t[r][j] = r < n ? points[j][r] : 1;
    t[r][rhs] = r < n ? x[r] : 1;
    if (t[r][rhs] < 0) {
      for (std::size_t j = 0; j < vars; ++j) t[r][j] = -t[r][j];
      t[r][rhs] = -t[r][rhs];
    }
    t[r][vars + r] = 1;
    basis[r] = vars + r;
  }

  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<mpq_class> cost(cols, 0);
  for (std::size_t j = 0; j < cols; ++j) {
    if (j >= vars && j < vars + rows) continue;
    for (std::size_t r = 0; r < rows; ++r) cost[j] -= t[r][j];
  }

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < rhs; ++j) {
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = rows;
    mpq_class best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (sgn(t[r][enter]) <= 0) continue;
      mpq_class ratio = t[r][rhs] / t[r][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded; cannot happen for a phase-one problem

    const mpq_class pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || sgn(t[r][enter]) == 0) continue;
      const mpq_class f = t[r][enter];
      for (std::size_t j = 0; j < cols; ++j) t[r][j] -= f * t[leave][j];
    }
    if (sgn(cost[enter]) != 0) {
      const mpq_class f = cost[enter];
      for (std::size_t j = 0; j < cols; ++j) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  // cost[rhs] holds minus the optimal sum of artificials.
  return sgn(cost[rhs]) == 0;
}

}  // namespace toricode
