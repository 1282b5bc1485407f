#include <algorithm>

#include <gtest/gtest.h>

#include "toricode/exact_hull.hpp"
#include "toricode/polytope.hpp"

using namespace toricode;

namespace {

LatticePolytope triangle() { return from_vertices(2, {{1, 0}, {0, 3}, {3, 1}}); }

// Lattice points by checking every point of a bounding box against the
// vertices with the exact hull test.
std::vector<LatticePoint> box_scan(const LatticePolytope& p, std::int64_t hi) {
  std::vector<LatticePoint> out;
  const int n = p.ambient_dim();
  LatticePoint x(n, 0);
  for (;;) {
    if (in_convex_hull(p.vertices(), x)) out.push_back(x);
    int i = n - 1;
    for (; i >= 0; --i) {
      if (++x[i] <= hi) break;
      x[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

}  // namespace

TEST(Hull, ExactMembership) {
  const std::vector<LatticePoint> tri = {{0, 0}, {3, 0}, {0, 3}};
  EXPECT_TRUE(in_convex_hull(tri, {1, 1}));
  EXPECT_TRUE(in_convex_hull(tri, {3, 0}));
  EXPECT_TRUE(in_convex_hull(tri, {1, 2}));
  EXPECT_FALSE(in_convex_hull(tri, {2, 2}));
  EXPECT_FALSE(in_convex_hull(tri, {-1, 0}));
  const std::vector<LatticePoint> seg = {{0, 0, 0}, {2, 2, 2}};
  EXPECT_TRUE(in_convex_hull(seg, {1, 1, 1}));
  EXPECT_FALSE(in_convex_hull(seg, {1, 1, 0}));
}

TEST(Polytope, TriangleLatticePoints) {
  const auto t = triangle();
  EXPECT_EQ(t.vertices().size(), 3u);
  const std::vector<LatticePoint> expected = {{0, 3}, {1, 0}, {1, 1}, {1, 2}, {2, 1}, {3, 1}};
  EXPECT_EQ(t.lattice_points(), expected);
  EXPECT_TRUE(t.fits_in_cube(5));
  EXPECT_FALSE(t.fits_in_cube(4));
}

TEST(Polytope, PruningAndDedup) {
  const auto p = from_vertices(2, {{0, 0}, {2, 0}, {1, 0}, {0, 2}, {0, 0}, {1, 1}});
  EXPECT_EQ(p.vertices(), (std::vector<LatticePoint>{{0, 0}, {0, 2}, {2, 0}}));
  EXPECT_THROW(from_vertices(2, {}), PolytopeError);
  EXPECT_THROW(from_vertices(2, {{1, 2, 3}}), PolytopeError);
}

TEST(Polytope, LatticePointsMatchBoxScan) {
  const std::vector<LatticePolytope> cases = {
      triangle(),
      from_vertices(3, {{0, 3, 0}, {1, 0, 0}, {3, 1, 0}, {1, 1, 2}, {2, 3, 3}}),
      pyramid(triangle()),
      product(triangle(), segment(1)),
      dilate(standard_simplex(3), 2),
      cross_polytope(2, 2),
      from_vertices(3, {{0, 0, 0}, {4, 4, 4}}),
  };
  for (const auto& p : cases) EXPECT_EQ(p.lattice_points(), box_scan(p, 4)) << p.to_string();
}

TEST(Polytope, Operations) {
  EXPECT_EQ(product(segment(2), segment(1)), box({2, 1}));
  EXPECT_EQ(pyramid(segment(1)), standard_simplex(2));
  EXPECT_EQ(dilate(standard_simplex(2), 3), from_vertices(2, {{0, 0}, {3, 0}, {0, 3}}));
  EXPECT_EQ(translate(segment(2), {3}), from_vertices(1, {{3}, {5}}));
  EXPECT_EQ(cross_polytope(2, 1), from_vertices(2, {{0, 1}, {1, 0}, {2, 1}, {1, 2}}));
  // the double pyramid over the centered segment is the shifted diamond
  EXPECT_EQ(translate(double_pyramid(translate(segment(2), {-1})), {1, 0}), cross_polytope(2, 1));
  EXPECT_EQ(origin(2).lattice_point_count(), 1u);
  EXPECT_EQ(dilate(triangle(), 0), from_vertices(2, {{0, 0}}));
}

TEST(Polytope, UnimodularTransform) {
  const IntMatrix shear = {{1, 1}, {0, 1}};
  const auto t = unimodular_transform(triangle(), shear, {0, 0});
  EXPECT_EQ(t.lattice_point_count(), 6u);
  EXPECT_EQ(determinant(shear), 1);
  EXPECT_EQ(determinant({{2, 0}, {0, 3}}), 6);
  EXPECT_THROW(unimodular_transform(triangle(), {{2, 0}, {0, 1}}, {0, 0}), PolytopeError);
}

TEST(Polytope, Automorphisms) {
  auto count = [](const LatticePolytope& p) { return lattice_automorphisms(p).size(); };
  EXPECT_EQ(count(standard_simplex(2)), 6u);
  EXPECT_EQ(count(box({1, 1})), 8u);
  EXPECT_EQ(count(box({1, 1, 1})), 48u);
  EXPECT_EQ(count(box({2, 1})), 4u);
  EXPECT_EQ(count(cross_polytope(2, 1)), 8u);
  EXPECT_EQ(count(dilate(standard_simplex(3), 2)), 24u);
  EXPECT_EQ(count(from_vertices(2, {{0, 0}, {2, 0}, {0, 1}})), 2u);
  // lower dimensional: identity only
  EXPECT_EQ(count(from_vertices(2, {{0, 0}, {1, 1}})), 1u);

  for (const auto& p : {triangle(), box({1, 1, 1}), pyramid(triangle())}) {
    const auto maps = lattice_automorphisms(p);
    const int n = p.ambient_dim();
    ASSERT_EQ(maps.front().shift, LatticePoint(n, 0));
    const auto points = p.lattice_points();
    for (const auto& a : maps) {
      EXPECT_EQ(std::abs(determinant(a.linear)), 1);
      std::vector<LatticePoint> image;
      for (const auto& x : points) {
        LatticePoint y(a.shift);
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) y[i] += a.linear[i][j] * x[j];
        }
        image.push_back(y);
      }
      std::sort(image.begin(), image.end());
      EXPECT_EQ(image, points);
    }
  }
}

TEST(Recipe, RealizeAndValidate) {
  const auto r = ConstructionRecipe::make({Segment{1}, PyramidScale{2}});
  EXPECT_EQ(realize_recipe(r), dilate(pyramid(segment(1)), 2));
  EXPECT_EQ(r.to_string(), "S1,P2");
  EXPECT_THROW(ConstructionRecipe::make({}), PolytopeError);
  EXPECT_THROW(ConstructionRecipe::make({PyramidScale{1}}), PolytopeError);
  EXPECT_THROW(ConstructionRecipe::make({Segment{0}}), PolytopeError);
  const auto prism = ConstructionRecipe::make({Segment{2}, Segment{1}});
  EXPECT_EQ(realize_recipe(prism), box({2, 1}));
}
