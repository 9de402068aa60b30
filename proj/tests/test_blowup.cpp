#include <gtest/gtest.h>

#include "duval/blowup.hpp"
#include "duval/generator.hpp"
#include "oracles/oracles.hpp"

using namespace duval;

TEST(Blowup, RaySequenceShape) {
  auto seq = ray_sequence(2, 5);
  ASSERT_EQ(seq.size(), 5u);
  EXPECT_EQ(seq[0].ray, (std::array<long, 3>{1, 1, 1}));
  EXPECT_EQ(seq[1].ray, (std::array<long, 3>{1, 2, 2}));
  EXPECT_EQ(seq[1].kind, StepKind::Point);
  EXPECT_EQ(seq[2].ray, (std::array<long, 3>{1, 2, 3}));
  EXPECT_EQ(seq[2].kind, StepKind::Curve);
  EXPECT_EQ(seq[4].ray, (std::array<long, 3>{1, 2, 5}));
  EXPECT_THROW(ray_sequence(2, 4), ArithmeticError);
  EXPECT_THROW(ray_sequence(3, 2), ArithmeticError);
}

TEST(Blowup, PointStepTransform) {
  // x2*x3 + x1^3 under x2 -> x1*x2, x3 -> x1*x3 is x1^2*(x2*x3 + x1)
  Polynomial g = step_transform(parse("x2*x3 + x1^3"), StepKind::Point);
  EXPECT_EQ(g, parse("x2*x3 + x1"));
  StepVerdict v = step_vp(parse("x2*x3 + x1^3"), StepKind::Point);
  EXPECT_EQ(v.order, 2u);
  EXPECT_EQ(v.discrepancy, 0);
  EXPECT_TRUE(v.vp);
}

TEST(Blowup, CurveStepVerdict) {
  StepVerdict v = step_vp(parse("x2*x3 + x1^2"), StepKind::Curve);
  EXPECT_EQ(v.order, 1u);
  EXPECT_TRUE(v.vp);
  StepVerdict w = step_vp(parse("x2^2 + x1^2"), StepKind::Curve);
  EXPECT_EQ(w.order, 0u);
  EXPECT_EQ(w.discrepancy, 1);
  EXPECT_FALSE(w.vp);
}

TEST(Blowup, TraceAgreesWithDirectOrderOnCorpusSample) {
  for (int n = 2; n <= 6; ++n) {
    NormalizedQuartic q = classify_full(generate({TypeTag::A(n), false, {1, 1, 1}, 3})).normal;
    oracle::Dense d = oracle::dense(q.affine());
    for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 5}, {3, 4}}) {
      for (const std::array<long, 3>& w : {std::array<long, 3>{1, a, b}, {a, b, 1}, {b, 1, a}}) {
        VpTrace t = run_toric_description(q, WeightVector(w[0], w[1], w[2]));
        long disc = (w[0] + w[1] + w[2] - 1) - oracle::weighted_order(d, w);
        EXPECT_EQ(t.overall_vp, disc == 0) << "A" << n << " weights " << w[0] << w[1] << w[2];
        EXPECT_EQ(t.steps.size(), static_cast<std::size_t>(std::max(a, b)));
      }
    }
  }
}

TEST(Blowup, TraceRecordsRelabeling) {
  NormalizedQuartic q = classify_full(generate({TypeTag::A(3), false, {1, 1, 1}, 0})).normal;
  VpTrace t = run_toric_description(q, WeightVector(2, 1, 1));
  EXPECT_EQ(t.a, 1);
  EXPECT_EQ(t.b, 2);
  EXPECT_EQ(t.relabel[0], 3);
  EXPECT_EQ(t.strict_transforms.size(), t.steps.size() + 1);
}
