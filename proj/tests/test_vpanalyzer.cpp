#include <gtest/gtest.h>

#include "duval/generator.hpp"
#include "duval/vpanalyzer.hpp"
#include "oracles/oracles.hpp"

using namespace duval;

TEST(VpAnalyzer, Assignments) {
  EXPECT_EQ(assignments(1, 1).size(), 1u);
  EXPECT_EQ(assignments(1, 2).size(), 3u);
  EXPECT_EQ(assignments(2, 3).size(), 6u);
  EXPECT_THROW(analyze_weight(NormalizedQuartic{}, 2, 4), ArithmeticError);
}

TEST(VpAnalyzer, WeightPairsRespectBounds) {
  for (auto [a, b] : weight_pairs({0, 12})) {
    EXPECT_LE(a, b);
    EXPECT_LE(a + b, 12);
    EXPECT_EQ(std::gcd(a, b), 1);
  }
  for (auto [a, b] : weight_pairs({2, 12})) EXPECT_LE(a, 2);
  EXPECT_EQ(weight_pairs({0, 3}).size(), 2u);
}

TEST(VpAnalyzer, LinkWeights) {
  EXPECT_TRUE(is_link_weight(2, 5));
  EXPECT_FALSE(is_link_weight(1, 3));
  WeightSet s{{1, 1, 1}, {1, 1, 3}, {1, 2, 3}, {1, 3, 4}};
  EXPECT_EQ(format_weight_set(link_filter(s)), "{(1,1,1), (1,2,3)}");
}

TEST(VpAnalyzer, ResolutionCounts) {
  EXPECT_EQ(resolution_count(TypeTag::A(7)), 4);
  EXPECT_EQ(resolution_count(TypeTag::D(7)), 6);
  EXPECT_EQ(resolution_count(TypeTag::D(4)), 2);
  EXPECT_EQ(resolution_count(TypeTag::E(7)), 7);
}

TEST(VpAnalyzer, A19Fixture) {
  A19Fixture f = load_a19(DUVAL_FIXTURE_DIR);
  EXPECT_EQ(format_weight_set(vp_set(enumerate_vp(f.quartic, {4, 12}))), "{(1,1,1), (1,1,2)}");
}

TEST(VpAnalyzer, A1HasOnlyOrdinaryBlowup) {
  NormalizedQuartic q = generate({TypeTag::A(1), false, {1, 1, 1}, 0});
  EXPECT_EQ(format_weight_set(vp_set(enumerate_vp(q, {}))), "{(1,1,1)}");
}

TEST(VpAnalyzer, SpecializedA4HasLinkWeight) {
  NormalizedQuartic q = generate({TypeTag::A(4), true, {1, 2, 3}, 0});
  auto links = sarkisov_filter(enumerate_vp(q, {}));
  EXPECT_EQ(format_weight_set(vp_set(links)), "{(1,1,1), (1,1,2), (1,2,3)}");
}

TEST(VpAnalyzer, DirectDiscrepancyMatchesOracle) {
  for (const TypeTag& t : {TypeTag::A(5), TypeTag::D(6), TypeTag::E(7)}) {
    NormalizedQuartic q = generate({t, false, {1, 1, 1}, 1});
    oracle::Dense d = oracle::dense(dehomogenize(q.F(), 0));
    for (auto [a, b] : weight_pairs({0, 8}))
      for (const WeightVector& w : assignments(a, b))
        EXPECT_EQ(direct_vp(q, w), (w.sum() - 1) - oracle::weighted_order(d, w.w));
  }
}

TEST(VpAnalyzer, KeyLemmaHoldsOnSample) {
  for (const TypeTag& t : {TypeTag::A(7), TypeTag::D(5), TypeTag::D(9), TypeTag::E(6), TypeTag::E(8)})
    EXPECT_NO_THROW(enumerate_vp(generate({t, false, {1, 1, 1}, 2}), {})) << t.to_string();
}
