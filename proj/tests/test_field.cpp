#include <gtest/gtest.h>

#include <random>

#include "duval/field.hpp"
#include "oracles/oracles.hpp"

using namespace duval;

namespace {

GR random_gr(std::mt19937_64& rnd, long h = 6) {
  std::uniform_int_distribution<long> num(-h, h), den(1, h);
  return GR(make_rational(num(rnd), den(rnd)), make_rational(num(rnd), den(rnd)));
}

}  // namespace

TEST(Field, RationalsAreCanonical) {
  EXPECT_EQ(make_rational(6, -4), make_rational(-3, 2));
  EXPECT_EQ(GR(make_rational(2, 4)).to_string(), "1/2");
  EXPECT_THROW(make_rational(1, 0), ArithmeticError);
}

TEST(Field, ImaginaryUnit) {
  EXPECT_EQ(GR::i() * GR::i(), GR(-1));
  EXPECT_EQ(GR::i().pow(4), GR(1));
  EXPECT_EQ(GR::i().to_string(), "i");
}

TEST(Field, FieldAxiomsOnRandomElements) {
  std::mt19937_64 rnd(11);
  for (int k = 0; k < 200; ++k) {
    GR a = random_gr(rnd), b = random_gr(rnd), c = random_gr(rnd);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a.norm(), (a * a.conj()).re());
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), GR(1));
      EXPECT_EQ(b / a * a, b);
    }
  }
}

TEST(Field, DivisionByZeroThrows) { EXPECT_THROW(GR(0).inverse(), ArithmeticError); }

TEST(Field, SqrtOfTwoIsAbsent) {
  EXPECT_FALSE(sqrt_if_exists(GR(2)).has_value());
  EXPECT_FALSE(oracle::brute_sqrt(GR(2)).has_value());
}

TEST(Field, SqrtOfMinusOneAndI) {
  auto r = sqrt_if_exists(GR(-1));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r * *r, GR(-1));
  // i has no square root over Q(i): (1+i)^2 / 2 = i needs sqrt(2)
  EXPECT_FALSE(sqrt_if_exists(GR::i()).has_value());
  EXPECT_FALSE(oracle::brute_sqrt(GR::i()).has_value());
  auto s = sqrt_if_exists(GR(0, 2));
  ASSERT_TRUE(s);
  EXPECT_EQ(*s, GR(1, 1));
}

TEST(Field, SqrtAgreesWithBruteForce) {
  std::mt19937_64 rnd(5);
  for (int k = 0; k < 150; ++k) {
    GR a = random_gr(rnd, 3);
    auto fast = sqrt_if_exists(a);
    auto slow = oracle::brute_sqrt(a, 6);
    // every element in the search box has height small enough for the box to find its root
    EXPECT_EQ(fast.has_value(), slow.has_value()) << a;
    if (fast) EXPECT_EQ(*fast * *fast, a);
    GR sq = a * a;
    auto r = sqrt_if_exists(sq);
    ASSERT_TRUE(r) << sq;
    EXPECT_TRUE(*r == a || *r == -a);
  }
}

TEST(Field, NormIsSquareWhenRootExists) {
  std::mt19937_64 rnd(8);
  for (int k = 0; k < 100; ++k) {
    GR a = random_gr(rnd);
    auto n = rational_sqrt((a * a).norm());
    EXPECT_TRUE(n.has_value());
  }
}

TEST(Field, ConstructorsCanonicalize) {
  EXPECT_EQ(GR(mpq_class(300, 3)), GR(100));
  EXPECT_EQ(GR(mpq_class(2, 4), mpq_class(-3, 6)), GR(make_rational(1, 2), make_rational(-1, 2)));
}
