#include <gtest/gtest.h>

#include "oracle.hpp"
#include "toricode/field.hpp"

using namespace toricode;

namespace {

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kFields = {
    {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}, {17, 1}, {5, 2}, {3, 3}, {2, 5}};

}  // namespace

TEST(Field, ModulusIsSmallestIrreducible) {
  for (auto [p, m] : kFields) {
    const auto f = make_field(p, m);
    const auto& mod = f.modulus();
    ASSERT_EQ(mod.size(), m + 1);
    ASSERT_EQ(mod.back(), 1u);
    if (m == 1) continue;
    EXPECT_TRUE(oracle::irreducible(mod, p)) << f.describe();
    const auto enc = oracle::encode(oracle::Poly(mod.begin(), mod.end() - 1), p);
    for (std::uint32_t v = 0; v < enc; ++v) {
      auto g = oracle::decode(v, p, m);
      g.push_back(1);
      EXPECT_FALSE(oracle::irreducible(g, p)) << "smaller irreducible " << v << " for " << f.describe();
    }
  }
}

TEST(Field, FrozenModuli) {
  EXPECT_EQ(make_field(2, 2).modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(make_field(2, 3).modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));
  EXPECT_EQ(make_field(3, 2).modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
  EXPECT_EQ(make_field(2, 4).modulus(), (std::vector<std::uint32_t>{1, 1, 0, 0, 1}));
  EXPECT_EQ(make_field(5, 1).modulus(), (std::vector<std::uint32_t>{0, 1}));
}

TEST(Field, ArithmeticMatchesPolynomialOracle) {
  for (auto [p, m] : kFields) {
    const auto f = make_field(p, m);
    const auto q = f.order();
    oracle::Poly mod = f.modulus();
    if (m == 1) mod = {0, 1};
    for (std::uint32_t a = 0; a < q; ++a) {
      const auto pa = oracle::decode(a, p, m);
      for (std::uint32_t b = 0; b < q; ++b) {
        const auto pb = oracle::decode(b, p, m);
        oracle::Poly sum(m);
        for (std::uint32_t i = 0; i < m; ++i) sum[i] = (pa[i] + pb[i]) % p;
        const auto ea = f.element(a), eb = f.element(b);
        ASSERT_EQ(f.add(ea, eb).value, oracle::encode(sum, p));
        ASSERT_EQ(f.mul(ea, eb).value, oracle::encode(oracle::mul_mod(pa, pb, mod, p), p)) << a << "*" << b;
        ASSERT_EQ(f.add(f.sub(ea, eb), eb), ea);
      }
      if (a != 0) ASSERT_EQ(f.mul(f.element(a), f.inv(f.element(a))), f.one());
      ASSERT_TRUE(f.add(f.element(a), f.neg(f.element(a))).is_zero());
    }
  }
}

TEST(Field, PrimitiveElementIsSmallestGenerator) {
  for (auto [p, m] : kFields) {
    const auto f = make_field(p, m);
    const auto q = f.order();
    auto order_of = [&](std::uint32_t v) {
      auto x = f.element(v);
      std::uint32_t n = 1;
      for (auto y = x; y != f.one(); y = f.mul(y, x)) ++n;
      return n;
    };
    std::uint32_t expected = 1;
    while (order_of(expected) != q - 1 && expected < q) ++expected;
    if (q == 2) expected = 1;
    EXPECT_EQ(f.primitive_element().value, expected) << f.describe();
    for (std::uint32_t e = 0; e < q - 1; ++e) {
      EXPECT_EQ(f.exp(e), f.pow(f.primitive_element(), e));
      EXPECT_EQ(f.log(f.exp(e)), e);
    }
  }
}

TEST(Field, Parse) {
  EXPECT_EQ(parse_field("8").order(), 8u);
  EXPECT_EQ(parse_field("2^3").degree(), 3u);
  EXPECT_EQ(parse_field("7").characteristic(), 7u);
  EXPECT_THROW(parse_field("6"), FieldError);
  EXPECT_THROW(parse_field("4^2"), FieldError);
  EXPECT_THROW(parse_field("x"), FieldError);
  EXPECT_THROW(make_field(4, 1), FieldError);
  EXPECT_THROW(make_field(2, 0), FieldError);
  std::uint32_t p = 0, m = 0;
  EXPECT_TRUE(prime_power(243, p, m));
  EXPECT_EQ(p, 3u);
  EXPECT_EQ(m, 5u);
  EXPECT_FALSE(prime_power(12, p, m));
}

TEST(Field, MixedFieldsRejected) {
  const auto f5 = make_field(5, 1);
  const auto f7 = make_field(7, 1);
  EXPECT_THROW(f5.add(f5.one(), f7.one()), FieldError);
  EXPECT_THROW(f5.element(5), FieldError);
  EXPECT_THROW(f5.inv(f5.zero()), FieldError);
  EXPECT_THROW(f5.log(f5.zero()), FieldError);
}

TEST(Field, TorusPointsLexicographic) {
  const auto f = make_field(5, 1);
  const auto pts = torus_points(f, 2);
  ASSERT_EQ(pts.size(), 16u);
  const auto g = f.primitive_element();
  EXPECT_EQ(g.value, 2u);
  for (std::uint32_t a = 0; a < 4; ++a) {
    for (std::uint32_t b = 0; b < 4; ++b) {
      EXPECT_EQ(pts[a * 4 + b][0], f.pow(g, a));
      EXPECT_EQ(pts[a * 4 + b][1], f.pow(g, b));
    }
  }
}
