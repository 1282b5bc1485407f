#ifndef TORICODE_POLYTOPE_HPP
#define TORICODE_POLYTOPE_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "toricode/exact_hull.hpp"

namespace toricode {

class PolytopeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Convex hull of finitely many points of Z^n, stored as its extreme points
/// in lexicographic order. Degenerate hulls (points, segments in a larger
/// ambient space) are ordinary values. Ambient dimension 0 is allowed and
/// holds only the empty point.
class LatticePolytope {
 public:
  /// Deduplicates and prunes points lying in the hull of the others.
  static LatticePolytope from_vertices(int n, std::vector<LatticePoint> points);

  int ambient_dim() const { return dim_; }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }

  bool contains(const LatticePoint& x) const;

  /// Integer points of the hull, lexicographic (first coordinate most
  /// significant). This order labels generator-matrix rows.
  std::vector<LatticePoint> lattice_points() const;
  std::size_t lattice_point_count() const { return lattice_points().size(); }

  /// True iff every vertex coordinate lies in [0, q - 2].
  bool fits_in_cube(std::uint64_t q) const;

  std::string to_string() const;

  friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;

 private:
  LatticePolytope(int n, std::vector<LatticePoint> v) : dim_(n), vertices_(std::move(v)) {}

  int dim_ = 0;
  std::vector<LatticePoint> vertices_;
};

inline LatticePolytope from_vertices(int n, std::vector<LatticePoint> points) {
  return LatticePolytope::from_vertices(n, std::move(points));
}

inline bool contains_point(const LatticePolytope& p, const LatticePoint& x) { return p.contains(x); }

LatticePolytope product(const LatticePolytope& p, const LatticePolytope& q);

/// Unit pyramid: hull of Q x {0} and the apex e_{n+1}.
LatticePolytope pyramid(const LatticePolytope& q);

/// Double pyramid over Q shifted up by one: hull of Q x {1}, 0 and 2 e_{n+1}.
LatticePolytope double_pyramid(const LatticePolytope& q);

LatticePolytope dilate(const LatticePolytope& p, std::int64_t k);
LatticePolytope translate(const LatticePolytope& p, const LatticePoint& t);

/// k (cross polytope + (1, ..., 1)); all coordinates nonnegative.
LatticePolytope cross_polytope(int n, std::int64_t k);

/// Hull of 0, e_1, ..., e_n.
LatticePolytope standard_simplex(int n);

/// [0, a_1] x ... x [0, a_n].
LatticePolytope box(std::span<const std::int64_t> sides);
inline LatticePolytope box(std::initializer_list<std::int64_t> sides) {
  return box(std::span<const std::int64_t>(sides.begin(), sides.size()));
}

/// The segment [0, a] in Z^1.
LatticePolytope segment(std::int64_t a);

/// The single point 0 in Z^n.
LatticePolytope origin(int n);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// v -> U v + t for a unimodular integer matrix U.
LatticePolytope unimodular_transform(const LatticePolytope& p, const IntMatrix& u, const LatticePoint& t);

/// Exact integer determinant (fraction-free elimination).
std::int64_t determinant(const IntMatrix& u);

/// x -> A x + b with A unimodular.
struct AffineMap {
  IntMatrix linear;
  LatticePoint shift;
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// Every lattice-affine bijection mapping P onto itself, identity first.
/// Only the identity is returned for lower-dimensional polytopes or when
/// the vertex set is too large to search.
std::vector<AffineMap> lattice_automorphisms(const LatticePolytope& p);

// ---------------------------------------------------------------------------
// Construction recipes: start from {0} in Z^0 and apply one step per
// dimension. A segment step multiplies by [0, a]; a pyramid step takes the
// unit pyramid over the current polytope and dilates it by k.

struct Segment {
  std::int64_t length = 1;
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct PyramidScale {
  std::int64_t factor = 1;
  friend bool operator==(const PyramidScale&, const PyramidScale&) = default;
};

using RecipeStep = std::variant<Segment, PyramidScale>;

class ConstructionRecipe {
 public:
  /// Validates: non-empty, first step a segment, all parameters >= 1.
  static ConstructionRecipe make(std::vector<RecipeStep> steps);

  const std::vector<RecipeStep>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool is_segment(std::size_t i) const { return std::holds_alternative<Segment>(steps_[i]); }
  /// a_i for segment steps, k_i for pyramid steps.
  std::int64_t parameter(std::size_t i) const;

  std::string to_string() const;

  friend bool operator==(const ConstructionRecipe&, const ConstructionRecipe&) = default;

 private:
  explicit ConstructionRecipe(std::vector<RecipeStep> s) : steps_(std::move(s)) {}
  std::vector<RecipeStep> steps_;
};

LatticePolytope realize_recipe(const ConstructionRecipe& recipe);

}  // namespace toricode

#endif  // TORICODE_POLYTOPE_HPP
