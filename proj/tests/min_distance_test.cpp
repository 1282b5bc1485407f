#include <gtest/gtest.h>

#include "oracle.hpp"
#include "toricode/min_distance.hpp"

using namespace toricode;

namespace {

LatticePolytope triangle() { return from_vertices(2, {{1, 0}, {0, 3}, {3, 1}}); }

struct Case {
  LatticePolytope p;
  std::uint32_t q;
};

// Small enough for the message-by-message oracle.
std::vector<Case> small_cases() {
  return {
      {segment(1), 3},
      {segment(2), 5},
      {box({1, 1}), 3},
      {box({1, 1}), 4},
      {standard_simplex(2), 5},
      {from_vertices(2, {{0, 0}, {2, 0}, {0, 1}}), 4},
      {triangle(), 5},
      {cross_polytope(2, 1), 4},
      {pyramid(standard_simplex(2)), 4},
      {box({2, 1}), 5},
      {dilate(standard_simplex(2), 2), 4},
  };
}

GaloisField field_of(std::uint32_t q) {
  std::uint32_t p = 0, m = 0;
  prime_power(q, p, m);
  return make_field(p, m);
}

void check_witness(const ToricCode& code, const MinDistResult& r) {
  ASSERT_EQ(r.witness.size(), code.rows());
  EXPECT_EQ(weight(evaluate(code, r.witness)), r.d);
  std::size_t i = 0;
  while (r.witness[i].is_zero()) ++i;
  EXPECT_EQ(r.witness[i], code.field().one());
}

}  // namespace

TEST(MinDistance, ExhaustiveAndIsdMatchOracle) {
  for (const auto& c : small_cases()) {
    const auto code = ToricCode::build(c.p, field_of(c.q));
    const auto expected = oracle::brute_force_distance(code);
    for (auto method : {SearchMethod::exhaustive, SearchMethod::isd}) {
      for (unsigned threads : {1u, 3u}) {
        const auto r = min_distance(code, method, {threads, kDefaultBudget});
        EXPECT_TRUE(r.exact);
        EXPECT_EQ(r.d, expected) << c.p.to_string() << " q=" << c.q << " " << method_name(method);
        EXPECT_EQ(r.lower_bound, r.d);
        EXPECT_EQ(r.max_zeroes, code.length() - r.d);
        check_witness(code, r);
      }
    }
  }
}

TEST(MinDistance, LargerCodesAgreeAcrossMethods) {
  const std::vector<Case> cases = {
      {triangle(), 8},
      {pyramid(triangle()), 5},
      {product(triangle(), segment(1)), 5},
      {dilate(standard_simplex(2), 3), 7},
      {box({1, 1, 1}), 5},
      {cross_polytope(2, 1), 7},
      {from_vertices(3, {{0, 3, 0}, {1, 0, 0}, {3, 1, 0}, {1, 1, 2}, {2, 3, 3}}), 5},
  };
  for (const auto& c : cases) {
    const auto code = ToricCode::build(c.p, field_of(c.q));
    const auto a = min_distance(code, SearchMethod::exhaustive, {2, std::uint64_t{1} << 40});
    const auto b = min_distance(code, SearchMethod::isd, {2, kDefaultBudget});
    ASSERT_TRUE(a.exact && b.exact);
    EXPECT_EQ(a.d, b.d) << c.p.to_string() << " q=" << c.q;
    check_witness(code, a);
    check_witness(code, b);
  }
}

TEST(MinDistance, DeterministicAcrossThreads) {
  const auto code = ToricCode::build(triangle(), make_field(2, 3));
  for (auto method : {SearchMethod::exhaustive, SearchMethod::isd}) {
    const auto one = min_distance(code, method, {1, kDefaultBudget});
    for (unsigned t : {2u, 4u, 7u}) {
      const auto r = min_distance(code, method, {t, kDefaultBudget});
      EXPECT_EQ(r.d, one.d);
      EXPECT_EQ(r.witness, one.witness);
      EXPECT_EQ(r.work_count, one.work_count);
    }
  }
}

TEST(MinDistance, ExhaustiveWalkCountsProjectiveClasses) {
  const auto code = ToricCode::build(triangle(), make_field(5, 1));
  EXPECT_EQ(exhaustive_codewords(code), (15625u - 1) / 4);
  const auto r = min_distance_exhaustive(code);
  EXPECT_EQ(r.work_count, exhaustive_codewords(code));
}

TEST(MinDistance, BudgetTruncation) {
  const auto code = ToricCode::build(triangle(), make_field(2, 3));
  const auto r = min_distance_exhaustive(code, {1, 100 * code.length()});
  EXPECT_FALSE(r.exact);
  EXPECT_LE(r.work_count, 100u);
  EXPECT_GE(r.d, 28u);
  EXPECT_EQ(weight(evaluate(code, r.witness)), r.d);
  EXPECT_THROW(max_zeroes(code, {1, 100 * code.length()}), CodeError);

  const auto i = min_distance_isd(code, {1, 10 * code.length()});
  EXPECT_FALSE(i.exact);
  EXPECT_LE(i.lower_bound, 28u);
}

TEST(MinDistance, MaxZeroes) {
  EXPECT_EQ(max_zeroes(ToricCode::build(triangle(), make_field(2, 3))), 21u);
  EXPECT_EQ(max_zeroes(ToricCode::build(triangle(), make_field(5, 1))), 8u);
}

TEST(MinDistance, MethodNames) {
  EXPECT_EQ(parse_method("isd"), SearchMethod::isd);
  EXPECT_EQ(parse_method("exhaustive"), SearchMethod::exhaustive);
  EXPECT_FALSE(parse_method("magic"));
  EXPECT_EQ(method_name(SearchMethod::isd), "isd");
}
