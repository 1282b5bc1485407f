#ifndef TORICODE_EXACT_HULL_HPP
#define TORICODE_EXACT_HULL_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace toricode {

using LatticePoint = std::vector<std::int64_t>;

/// Exact test whether x is a convex combination of the given points.
///
/// Solves the feasibility problem  sum_i l_i v_i = x, sum_i l_i = 1, l >= 0
/// with a phase-one simplex over the rationals (Bland's rule, so it always
/// terminates). No floating point is involved.
bool in_convex_hull(std::span<const LatticePoint> points, const LatticePoint& x);

}  // namespace toricode

#endif  // TORICODE_EXACT_HULL_HPP
