#include <gtest/gtest.h>

#include "duval/quartic.hpp"

using namespace duval;

namespace {

Polynomial sample() { return parse("x0^2*(x1 + x2)*(x2 - x3) + x0*(x1^3 - x2^3) + x1^4 + x3^4 + x2*x3^3"); }

void expect_change_consistent(const Polynomial& F, const NormalizedQuartic& q) {
  EXPECT_EQ(q.scale * apply_linear(F, q.change), q.F());
}

}  // namespace

TEST(Quartic, SplitAtOrigin) {
  NormalizedQuartic q = split_at_origin(sample());
  EXPECT_EQ(q.A, parse("(x1 + x2)*(x2 - x3)"));
  EXPECT_EQ(quadric_rank(q.A), 2);
  EXPECT_EQ(q.B, parse("x1^3 - x2^3"));
  EXPECT_EQ(q.C, parse("x1^4 + x3^4 + x2*x3^3"));
  EXPECT_EQ(q.F(), sample());
}

TEST(Quartic, GeometryErrors) {
  EXPECT_THROW(normalize_at_point(parse("x0^4 + x1^4")), GeometryError);
  EXPECT_THROW(normalize_at_point(parse("x0^3*x1 + x2^4")), GeometryError);
  EXPECT_THROW(normalize_at_point(parse("x0*x1^3 + x2^4")), GeometryError);
  EXPECT_THROW(normalize_at_point(parse("x0^2*x1")), GeometryError);
  EXPECT_THROW(normalize_at_point(sample(), {GR(0), GR(0), GR(0), GR(0)}), GeometryError);
}

TEST(Quartic, MovesPointToOrigin) {
  // the singular point (0:0:0:1) of x3^2*x1*x2 + x0^4 + x1^4 + x2^4
  Polynomial F = parse("x3^2*x1*x2 + x0^4 + x1^4 + x2^4");
  NormalizedQuartic q = normalize_at_point(F, {GR(0), GR(0), GR(0), GR(1)});
  EXPECT_EQ(quadric_rank(q.A), 2);
  expect_change_consistent(F, q);
}

TEST(Quartic, AffineInputIsHomogenized) {
  Polynomial f = parse("x2*x3 + x1^3 + x3^4");
  EXPECT_EQ(as_projective_quartic(f), parse("x0^2*x2*x3 + x0*x1^3 + x3^4"));
  Polynomial F = parse("x1^4 + x2^4");
  EXPECT_EQ(as_projective_quartic(F), F);
}

TEST(Quartic, Ranks) {
  EXPECT_EQ(quadric_rank(parse("x1^2 + x2^2 + x3^2")), 3);
  EXPECT_EQ(quadric_rank(parse("x1^2 + 2*x1*x2 + x2^2 + x3^2")), 2);
  EXPECT_EQ(quadric_rank(parse("(x1 + 2*x2 - x3)^2")), 1);
  EXPECT_EQ(quadric_rank(parse("x1^2 + x2^2")), 2);
}

TEST(Quartic, NormalFormRankTwo) {
  Polynomial F = sample();
  NormalizedQuartic q = normalize_at_point(F);
  auto [nq, form] = normal_form(q);
  EXPECT_EQ(nq.A, x(2) * x(3));
  expect_change_consistent(F, nq);
}

TEST(Quartic, NormalFormRankTwoOverGaussianRationals) {
  // x1^2 + x2^2 splits only over Q(i)
  Polynomial F = parse("x0^2*(x1^2 + x2^2) + x0*x3^3 + x1^4 + x2^4");
  NormalizedQuartic nq = normal_form(normalize_at_point(F)).first;
  EXPECT_EQ(nq.A, x(2) * x(3));
  expect_change_consistent(F, nq);
}

TEST(Quartic, NormalFormRankOne) {
  Polynomial F = parse("x0^2*(x1 + x2 + x3)^2 + x0*x1^3 + x2^4 + x3^4");
  NormalizedQuartic nq = normal_form(normalize_at_point(F)).first;
  EXPECT_EQ(nq.A, x(3) * x(3));
  expect_change_consistent(F, nq);
}

TEST(Quartic, CoefficientTableRoundTrip) {
  NormalizedQuartic nq = normal_form(normalize_at_point(sample())).first;
  CoefficientTable t = coefficients(nq);
  NormalizedQuartic back = quartic_from_table(nq.A, t);
  EXPECT_EQ(back.B, nq.B);
  EXPECT_EQ(back.C, nq.C);
  EXPECT_EQ(coef_index("beta2"), static_cast<int>(beta2));
  EXPECT_EQ(kCoefNames[lambda4], "lambda4");
}

TEST(Quartic, ReducibilityDetected) {
  NormalizedQuartic q = split_at_origin(parse("x3*(x0^2*x2 + x0*x1^2 + x1^3)"));
  EXPECT_THROW(check_reducibility(q), ReducibleInput);
  EXPECT_NO_THROW(check_reducibility(split_at_origin(sample())));
}
