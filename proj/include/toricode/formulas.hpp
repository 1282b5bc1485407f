#ifndef TORICODE_FORMULAS_HPP
#define TORICODE_FORMULAS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "toricode/min_distance.hpp"
#include "toricode/polytope.hpp"

namespace toricode {

class FormulaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Fraction = boost::rational<std::int64_t>;

std::uint64_t d_product(std::uint64_t d_p, std::uint64_t d_q);

/// d of k P(Q) from d of kQ: (q-1) d_kQ.
std::uint64_t d_pyramid_dilate(std::uint64_t d_kq, std::uint64_t q);

/// One factor q-1-a_i * prod_{j in J, j > i} k_j of the recipe formula.
struct MixFactor {
  std::size_t step = 0;          // 0-based recipe index i
  std::int64_t a = 0;            // segment length a_i
  std::int64_t suffix = 0;       // product of pyramid scales after step i
  std::int64_t value = 0;        // q-1-a*suffix
};

/// Segment factors of the recipe formula, in step order. Factors may be
/// nonpositive; d_recipe rejects those.
std::vector<MixFactor> mix_factors(const ConstructionRecipe& recipe, std::uint64_t q);

/// (q-1)^{|J|} * prod over segment steps of their factor. Throws when a
/// factor is nonpositive or the realized polytope leaves [0, q-2]^n.
std::uint64_t d_recipe(const ConstructionRecipe& recipe, std::uint64_t q);

/// Closed forms for k * standard simplex, a box, the k-dilate of the l-fold
/// pyramid over the unit m-cube, and k (cross polytope + 1). Throw when the
/// parameters are out of range or the result is not positive.
std::uint64_t d_simplex(int n, std::int64_t k, std::uint64_t q);
std::uint64_t d_box(std::span<const std::int64_t> sides, std::uint64_t q);
std::uint64_t d_pyr_cube(int l, int m, std::int64_t k, std::uint64_t q);
std::uint64_t d_cross(int n, std::int64_t k, std::uint64_t q);

/// (q-1) d_kQ for the double pyramid. Valid only when Q contains a lattice
/// segment of lattice length 2; the caller vouches for that.
std::uint64_t d_double_pyramid(std::uint64_t d_kq, std::uint64_t q, bool q_has_length2_segment);

/// (q-k) d_Q, an upper bound for d of k P(Q).
std::uint64_t d_pyramid_upper_bound(std::uint64_t d_q, std::int64_t k, std::uint64_t q);

struct DecreaseViolation {
  std::size_t k = 0;
  std::size_t l = 0;
};

struct DecreaseReport {
  bool holds = true;
  std::optional<DecreaseViolation> first_violation;
};

/// Checks d_k (q-1) <= d_{k-l} (q-1-lambda*l) for every 0 <= l <= k, where
/// d_values[k] is d of the k-th dilate. Pairs are scanned by k, then l.
DecreaseReport check_decrease(std::span<const std::uint64_t> d_values, std::uint64_t q, std::int64_t lambda = 1);

std::uint64_t dim_product(std::uint64_t dim_p, std::uint64_t dim_q);

/// dim of k P(Q) from dims[l] = dim of lQ, l = 0..k.
std::uint64_t dim_pyramid_dilate(std::span<const std::uint64_t> dims);

/// Lattice points of the realized recipe, from the step structure alone.
std::uint64_t dim_recipe(const ConstructionRecipe& recipe);

struct CodeParams {
  std::uint64_t N = 0;
  std::uint64_t k = 0;
  std::uint64_t d = 0;
  Fraction relative_distance;
  Fraction rate;
  bool exact = false;
};

/// Parameters of a recipe code from the formulas, with the bound
/// d/N <= prod_{i in I} (1 - a_i/(q-1)) <= (1 - 1/(q-1))^{|I|}.
struct RecipeParams {
  CodeParams params;
  Fraction segment_bound;
  Fraction uniform_bound;
  bool bound_holds = false;
};

/// N, k, d by construction and search. exact is false when the search was cut
/// short by its budget.
CodeParams params_report(const LatticePolytope& p, const GaloisField& field,
                         std::optional<SearchMethod> method = std::nullopt, const SearchOptions& options = {});

RecipeParams params_report(const ConstructionRecipe& recipe, std::uint64_t q);

}  // namespace toricode

#endif  // TORICODE_FORMULAS_HPP
