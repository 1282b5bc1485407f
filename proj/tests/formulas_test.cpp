#include <gtest/gtest.h>

#include "toricode/formulas.hpp"

using namespace toricode;

namespace {

ConstructionRecipe recipe(std::initializer_list<RecipeStep> steps) { return ConstructionRecipe::make(steps); }

}  // namespace

TEST(Formulas, FrozenValues) {
  EXPECT_EQ(d_product(4, 6), 24u);
  EXPECT_EQ(d_pyramid_dilate(8, 5), 32u);
  EXPECT_EQ(d_simplex(2, 1, 5), 12u);
  EXPECT_EQ(d_simplex(1, 3, 7), 3u);
  const std::int64_t sides[] = {1, 2};
  EXPECT_EQ(d_box(sides, 7), 20u);
  EXPECT_EQ(d_pyr_cube(1, 1, 1, 5), 12u);
  EXPECT_EQ(d_pyr_cube(0, 2, 2, 7), 16u);
  EXPECT_EQ(d_cross(2, 1, 7), 24u);
  EXPECT_EQ(d_double_pyramid(4, 7, true), 24u);
  EXPECT_EQ(d_pyramid_upper_bound(8, 1, 5), 32u);
  EXPECT_EQ(d_recipe(recipe({Segment{1}, PyramidScale{1}}), 5), 12u);
  EXPECT_EQ(d_recipe(recipe({Segment{2}, Segment{2}, Segment{2}}), 7), 64u);
  EXPECT_EQ(d_recipe(recipe({Segment{1}, PyramidScale{2}, PyramidScale{2}}), 7), 72u);
}

TEST(Formulas, Errors) {
  EXPECT_THROW(d_simplex(2, 4, 5), FormulaError);
  EXPECT_THROW(d_cross(2, 2, 5), FormulaError);
  EXPECT_THROW(d_double_pyramid(4, 7, false), FormulaError);
  EXPECT_THROW(d_product(0, 3), FormulaError);
  EXPECT_THROW(d_pyramid_upper_bound(8, 6, 5), FormulaError);
  // leaves the cube
  EXPECT_THROW(d_recipe(recipe({Segment{2}, PyramidScale{2}}), 5), FormulaError);
  EXPECT_THROW(d_simplex(3, 1, std::uint64_t{1} << 31), FormulaError);
  EXPECT_THROW(d_box(std::vector<std::int64_t>(8, 1), std::uint64_t{1} << 32), FormulaError);
}

TEST(Formulas, MixFactors) {
  const auto r = recipe({Segment{1}, PyramidScale{2}, Segment{2}, PyramidScale{1}});
  const auto f = mix_factors(r, 11);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].step, 0u);
  EXPECT_EQ(f[0].suffix, 2);
  EXPECT_EQ(f[0].value, 8);
  EXPECT_EQ(f[1].step, 2u);
  EXPECT_EQ(f[1].suffix, 1);
  EXPECT_EQ(f[1].value, 8);
}

TEST(Formulas, Decrease) {
  const std::uint64_t good[] = {36, 30, 24, 18};
  EXPECT_TRUE(check_decrease(good, 7).holds);
  const std::uint64_t bad[] = {36, 30, 29};
  const auto r = check_decrease(bad, 7);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.first_violation);
  EXPECT_EQ(r.first_violation->k, 2u);
  EXPECT_EQ(r.first_violation->l, 1u);
  const std::uint64_t cross[] = {36, 24, 12};
  EXPECT_TRUE(check_decrease(cross, 7, 2).holds);
  EXPECT_FALSE(check_decrease(good, 7, 2).holds);
}

TEST(Formulas, DimensionsMatchLatticePoints) {
  for (std::int64_t a : {1, 2}) {
    for (std::int64_t b : {1, 2}) {
      for (bool pyr2 : {false, true}) {
        for (bool pyr3 : {false, true}) {
          std::vector<RecipeStep> steps{Segment{a}};
          steps.push_back(pyr2 ? RecipeStep{PyramidScale{b}} : RecipeStep{Segment{b}});
          steps.push_back(pyr3 ? RecipeStep{PyramidScale{a}} : RecipeStep{Segment{b}});
          const auto r = ConstructionRecipe::make(steps);
          EXPECT_EQ(dim_recipe(r), realize_recipe(r).lattice_point_count()) << r.to_string();
        }
      }
    }
  }
  EXPECT_EQ(dim_product(6, 2), 12u);
  const std::uint64_t dims[] = {1, 3, 6};
  EXPECT_EQ(dim_pyramid_dilate(dims), 10u);
}

TEST(Formulas, RecipeReport) {
  const auto r = params_report(recipe({Segment{1}, Segment{1}}), 5);
  EXPECT_EQ(r.params.N, 16u);
  EXPECT_EQ(r.params.k, 4u);
  EXPECT_EQ(r.params.d, 9u);
  EXPECT_EQ(r.params.relative_distance, Fraction(9, 16));
  EXPECT_EQ(r.params.rate, Fraction(1, 4));
  EXPECT_EQ(r.segment_bound, Fraction(9, 16));
  EXPECT_TRUE(r.bound_holds);
}

TEST(Formulas, PolytopeReport) {
  const auto p = params_report(from_vertices(2, {{1, 0}, {0, 3}, {3, 1}}), make_field(5, 1));
  EXPECT_EQ(p.N, 16u);
  EXPECT_EQ(p.k, 6u);
  EXPECT_EQ(p.d, 8u);
  EXPECT_TRUE(p.exact);
  EXPECT_EQ(p.relative_distance, Fraction(1, 2));
}
