#include <gtest/gtest.h>

#include "support.hpp"

using namespace econres;
using econres::testing::load_golden;
using econres::testing::mono;

TEST(Json, IntegersRoundTripBeyond64Bits) {
  BigInt big = BigInt(1) << 80;
  EXPECT_TRUE(int_json(big).is_string());
  EXPECT_EQ(json_int(int_json(big)), big);
  EXPECT_EQ(json_int(int_json(-5)), -5);
  EXPECT_THROW(json_int(Json(1.5)), ParseError);
}

TEST(Json, MonomialsAndCones) {
  Monomial m = mono(1, -2, 3);
  EXPECT_EQ(monomial_json(m).dump(), "[1,-2,3]");
  EXPECT_EQ(json_monomial(monomial_json(m)), m);
  EXPECT_THROW(json_monomial(Json::array({1, 2})), ParseError);
  const auto g = make_group(7, 3);
  EXPECT_EQ(cone_json(central_cone(g)).dump(), R"({"scale":7,"rays":[[0,0,7],[0,7,0],[1,3,4]]})");
  auto f = fan_json(econ_fan(g));
  EXPECT_EQ(f["maximal_cones"].size(), 13u);
  EXPECT_EQ(f["r"], 7);
}

TEST(Json, ThetaUsesFractionStrings) {
  Theta t = zero_theta(2);
  t[0] = make_rational(-1, 2);
  t[1] = make_rational(1, 2);
  EXPECT_EQ(theta_json(t).dump(), R"({"values":["-1/2","1/2"]})");
  EXPECT_EQ(json_theta(theta_json(t)), t);
  EXPECT_EQ(json_theta(Json::array({-1, "1"})), make_theta({-1, 1}));
  EXPECT_THROW(json_theta(Json::array({0.5})), ParseError);
  EXPECT_THROW(json_theta(Json("x")), ParseError);
}

TEST(Text, ThetaListsAndNames) {
  EXPECT_EQ(parse_theta_list("-1,1/2,1/2"), (Theta{{-1, make_rational(1, 2), make_rational(1, 2)}}));
  EXPECT_THROW(parse_theta_list("1,a"), ParseError);
  const auto g = make_group(7, 3);
  EXPECT_EQ(ray_name(g, {7, 0, 0}), "e1");
  EXPECT_EQ(ray_name(g, {0, 0, 7}), "e3");
  EXPECT_EQ(ray_name(g, {3, 2, 5}), "v3");
  EXPECT_EQ(cone_name(central_cone(g)), "e3,e2,v1");
  EXPECT_EQ(format_theta(make_theta({-1, 1})), "(-1,1)");
  EXPECT_EQ(format_row({-1, 0, 1}), "-1 0 1");
  EXPECT_EQ(join_monomials({mono(0, 1, 0), mono(0, -1, 1)}), "y,z/y");
}

TEST(Golden, FilesParse) {
  for (const char* name : {"golden_3_2.json", "golden_7_3.json", "golden_12_7.json"}) {
    Golden gd = load_golden(name);
    EXPECT_TRUE(gd.simple_roots.has_value()) << name;
    EXPECT_FALSE(gd.bricks.empty()) << name;
  }
  EXPECT_THROW(read_json_file(econres::testing::data_path("missing.json")), ParseError);
}

TEST(Golden, TableChartsCarryTheCorrection) {
  // The chart monomial in this row must be G-invariant; the corrected value is, the uncorrected one is not.
  const auto g = make_group(12, 7);
  EXPECT_NE(weight_int(g, mono(-1, -1, 3)), 0);
  EXPECT_EQ(weight_int(g, mono(-1, -2, 3)), 0);
  Golden gd = load_golden("golden_12_7.json");
  auto cone = make_cone(g, {4, 4, 8}, {6, 6, 6}, {1, 7, 5});
  bool found = false;
  for (const auto& gb : gd.bricks)
    if (gb.cone == cone) {
      found = true;
      ASSERT_TRUE(gb.chart.has_value());
      auto chart = chart_coordinates(g, cone);
      EXPECT_EQ(std::set<Monomial>(gb.chart->begin(), gb.chart->end()), std::set<Monomial>(chart.begin(), chart.end()));
      EXPECT_TRUE(std::find(chart.begin(), chart.end(), mono(-1, -2, 3)) != chart.end());
    }
  EXPECT_TRUE(found);
}

TEST(Verify, GoldensPass) {
  for (const char* name : {"golden_3_2.json", "golden_7_3.json", "golden_12_7.json"}) {
    Golden gd = load_golden(name);
    auto report = run_verify(gd.group, gd);
    for (const auto& c : report.checks) EXPECT_TRUE(c.pass) << name << ": " << c.name << " " << c.detail;
    EXPECT_TRUE(report.ok());
  }
}

TEST(Verify, PropertyChecksPassWithoutGoldens) {
  for (const auto& g : {make_group(15, 4), make_group(2, 1), make_group(11, 5)}) EXPECT_TRUE(run_verify(g).ok()) << g;
}

TEST(Verify, DetectsCorruptedGolden) {
  Golden gd = load_golden("golden_7_3.json");
  gd.bricks.front().monomials.back() = mono(0, -3, 3);
  (*gd.chamber_rays)[0][0] = 1;
  auto report = run_verify(gd.group, gd);
  EXPECT_FALSE(report.ok());
  EXPECT_GE(report.failed(), 2u);
}

TEST(Verify, RejectsGoldenForAnotherType) {
  Golden gd = load_golden("golden_7_3.json");
  EXPECT_FALSE(run_verify(make_group(12, 7), gd).ok());
}
