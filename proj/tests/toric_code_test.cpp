#include <sstream>

#include <gtest/gtest.h>

#include "toricode/toric_code.hpp"

using namespace toricode;

namespace {

LatticePolytope triangle() { return from_vertices(2, {{1, 0}, {0, 3}, {3, 1}}); }

}  // namespace

TEST(ToricCode, GeneratorIsMonomialEvaluation) {
  for (std::uint32_t q : {5u, 8u, 9u}) {
    std::uint32_t p = 0, m = 0;
    ASSERT_TRUE(prime_power(q, p, m));
    const auto f = make_field(p, m);
    const auto code = ToricCode::build(triangle(), f);
    const auto torus = torus_points(f, 2);
    ASSERT_EQ(code.length(), torus.size());
    for (std::size_t i = 0; i < code.rows(); ++i) {
      const auto& mono = code.monomials()[i];
      for (std::size_t j = 0; j < code.length(); ++j) {
        auto v = f.one();
        for (int c = 0; c < 2; ++c) v = f.mul(v, f.pow(torus[j][c], mono[c]));
        ASSERT_EQ(code.row(i)[j], v.value) << "q=" << q << " row " << i << " col " << j;
      }
    }
  }
}

TEST(ToricCode, Shape) {
  const auto code = ToricCode::build(triangle(), make_field(5, 1));
  EXPECT_EQ(code.length(), 16u);
  EXPECT_EQ(code.rows(), 6u);
  EXPECT_EQ(code.dimension(), 6u);
  EXPECT_EQ(rank_check(code), 6u);
  EXPECT_EQ(code.column_exponents(7), (std::vector<std::uint32_t>{1, 3}));
}

TEST(ToricCode, RankEqualsLatticePointsInsideCube) {
  const std::vector<std::pair<LatticePolytope, std::uint32_t>> cases = {
      {triangle(), 5}, {triangle(), 7}, {pyramid(triangle()), 5}, {product(triangle(), segment(1)), 5},
      {box({3, 3}), 5}, {dilate(standard_simplex(2), 5), 7}, {cross_polytope(3, 1), 5}, {segment(1), 3},
  };
  for (const auto& [p, q] : cases) {
    const auto code = ToricCode::build(p, make_field(q, 1));
    EXPECT_EQ(rank_check(code), p.lattice_point_count()) << p.to_string() << " q=" << q;
  }
}

TEST(ToricCode, OutsideCube) {
  EXPECT_THROW(ToricCode::build(triangle(), make_field(3, 1)), CodeError);
  ToricCode::Options opts;
  opts.allow_outside_cube = true;
  // [0,4] over GF(5): x^4 and 1 agree on the torus
  const auto code = ToricCode::build(segment(4), make_field(5, 1), opts);
  EXPECT_EQ(code.rows(), 5u);
  EXPECT_EQ(code.dimension(), 4u);
}

TEST(ToricCode, EvaluateAndWeight) {
  const auto f = make_field(5, 1);
  const auto code = ToricCode::build(segment(1), f);
  // 1 + x vanishes only at x = -1 = g^2
  const auto c = evaluate(code, std::vector<FieldElement>{f.one(), f.one()});
  EXPECT_EQ(weight(c), 3u);
  EXPECT_EQ(zero_count(c), 1u);
  EXPECT_TRUE(c.values[2].is_zero());
  EXPECT_THROW(evaluate(code, std::vector<FieldElement>{f.one()}), CodeError);
}

TEST(ToricCode, WriteGenerator) {
  const auto code = ToricCode::build(segment(1), make_field(3, 1));
  std::ostringstream os;
  write_generator(os, code);
  EXPECT_EQ(os.str(), "3 1 2 2\n1 1\n1 2\n");
}

TEST(ToricCode, MatrixRank) {
  const auto f = make_field(3, 1);
  EXPECT_EQ(matrix_rank(f, {1, 2, 2, 1}, 2, 2), 1u);
  EXPECT_EQ(matrix_rank(f, {1, 0, 0, 1, 1, 1}, 3, 2), 2u);
}
