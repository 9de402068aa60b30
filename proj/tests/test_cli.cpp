#include <gtest/gtest.h>

#include "commands.hpp"

using namespace duval;
using namespace duval::cli;

namespace {

Input text(const std::string& s) { return {s, std::nullopt}; }
const std::filesystem::path kFixtures = DUVAL_FIXTURE_DIR;

}  // namespace

TEST(Cli, ClassifyFixture) {
  Result r = cmd_classify(text(read_text(kFixtures / "a19_affine.txt")), false);
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("type: A>=8"), std::string::npos);
  EXPECT_NE(r.out.find("(*5) theta"), std::string::npos);
}

TEST(Cli, ExitCodesPerErrorClass) {
  EXPECT_EQ(cmd_classify(text("x1 + * x2"), false).code, kParse);
  Result ns = cmd_classify(text("x0^3*x1 + x2^4 + x3^4"), false);
  EXPECT_EQ(ns.code, kGeometry);
  EXPECT_NE(ns.err.find("point is nonsingular"), std::string::npos);
  EXPECT_EQ(cmd_classify(text("x0^2*(x1^2 - 2*x2^2) + x0*x3^3 + x1^4 + x2^4"), false).code, kField);
  EXPECT_EQ(cmd_classify(text("x3*(x0^2*x2 + x0*x1^2 + x1^3)"), false).code, kGeometry);
}

TEST(Cli, ClassifyRankThree) {
  Result r = cmd_classify(text("x0^2*(x1^2 + x2^2 + x3^2) + x1^4 + x2^4 + x3^4"), false);
  EXPECT_NE(r.out.find("type: A1"), std::string::npos);
}

TEST(Cli, MarkedPoint) {
  Input in{"x3^2*x1*x2 + x0^4 + x1^4 + x2^4", std::string("0:0:0:1")};
  EXPECT_NE(cmd_classify(in, false).out.find("type: A"), std::string::npos);
  in.point = "0:0:1";
  EXPECT_EQ(cmd_classify(in, false).code, kParse);
}

TEST(Cli, JsonIsDeterministic) {
  Input in = text(read_text(kFixtures / "a19_affine.txt"));
  Result a = cmd_classify(in, true), b = cmd_classify(in, true);
  EXPECT_EQ(a.out, b.out);
  auto j = report::Json::parse(a.out);
  EXPECT_EQ(j["type"], "A>=8");
  EXPECT_EQ(j["steps"], 4);
  VpOptions opt;
  opt.json = true;
  opt.bounds = {4, 12};
  auto v = report::Json::parse(cmd_vp(in, opt).out);
  EXPECT_EQ(v["vp_weights"].dump(), "[[1,1,1],[1,1,2]]");
}

TEST(Cli, VpLinksOnlyOnSpecializedA4) {
  GenerateOptions g;
  g.target = "A4";
  g.weight = std::array<long, 2>{2, 3};
  Result gen = cmd_generate(g);
  ASSERT_EQ(gen.code, kOk);
  VpOptions opt;
  opt.links_only = true;
  Result r = cmd_vp(text(gen.out), opt);
  EXPECT_NE(r.out.find("{(1,1,1), (1,1,2), (1,2,3)}"), std::string::npos) << r.out;
}

TEST(Cli, VpGenericD4) {
  GenerateOptions g;
  g.target = "D4";
  Result r = cmd_vp(text(cmd_generate(g).out), {});
  EXPECT_NE(r.out.find("vp weights: {(1,1,1), (1,1,2)}"), std::string::npos) << r.out;
}

TEST(Cli, CheckReportsAssignments) {
  GenerateOptions g;
  g.target = "A3";
  Result r = cmd_check(text(cmd_generate(g).out), 1, 2, false);
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("assignment (1,1,2)"), std::string::npos);
  EXPECT_EQ(cmd_check(text(cmd_generate(g).out), 2, 4, false).code, kParse);
}

TEST(Cli, GenerateFailureIsReported) {
  GenerateOptions g;
  g.target = "E8";
  g.weight = std::array<long, 2>{2, 3};
  Result r = cmd_generate(g);
  EXPECT_EQ(r.code, kFailure);
  EXPECT_FALSE(r.err.empty());
}

TEST(Reproduce, ConditionTablesMatch) {
  for (bool de : {false, true}) {
    TableText want = expected_conditions(de), got = reproduce_conditions(de, 0);
    EXPECT_EQ(got.lines, want.lines) << got.name;
  }
}

TEST(Reproduce, ConditionRowsFromExamples) {
  auto a = expected_conditions(false).lines;
  EXPECT_NE(std::find(a.begin(), a.end(), "(1,3,4) | delta2 = 0"), a.end());
  auto d = expected_conditions(true).lines;
  EXPECT_NE(std::find(d.begin(), d.end(), "(1,3,5) | rho2 = 0 and delta3 != 0"), d.end());
}

TEST(Reproduce, ExpectedFilesMatchTranscription) {
  for (const auto& t : expected_all()) {
    std::string file = read_text(kFixtures / "expected" / (t.name + ".txt"));
    EXPECT_EQ(file, table_file_text(t)) << t.name;
  }
}

TEST(Reproduce, LinkRowForAAtLeastSix) {
  auto lines = expected_table2().lines;
  EXPECT_NE(std::find(lines.begin(), lines.end(), "A>=6 | {(1,1,1), (1,1,2), (1,2,3), (1,2,5)}"), lines.end());
}

TEST(Reproduce, ToggleTrialSample) {
  SmallRationals rnd(3);
  for (const auto& row : table_conditions_a()) {
    ToggleOutcome o = toggle_trial(table_conditions_a(), row, false, rnd);
    EXPECT_TRUE(o.ok) << ray_label(row.ray) << ": " << o.detail;
  }
}
