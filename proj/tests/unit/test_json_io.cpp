//  Copyright 2026 The convlat Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "convlat/errors.hpp"
#include "convlat/json_io.hpp"
#include "random_functions.hpp"

using namespace convlat;

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
  const auto p = std::filesystem::temp_directory_path() / ("convlat_json_" + name);
  std::ofstream(p) << body;
  return p.string();
}

}  // namespace

TEST(MembershipJson, PiecewiseRoundTripIsExact) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 30; ++t) {
    const auto f = testgen::random_mixed(rng).base();
    const auto back = membership_from_json(Json::parse(membership_to_json(f).dump()));
    EXPECT_EQ(back.xs(), f.xs());
    EXPECT_EQ(back.vs(), f.vs());
    EXPECT_EQ(sup_distance(back, f), 0.0);
  }
}

TEST(MembershipJson, SegmentKindsAndExplicitLimits) {
  const auto f = MembershipFunction::from_segments({0.0, 0.5, 1.0}, {0.0, 1.0, 0.0}, {{0.0, 0.0}, {0.4, 0.2}});
  const Json j = membership_to_json(f);
  EXPECT_EQ(j["segments"][0], "constant-left");
  EXPECT_EQ(j["segments"][1]["kind"], "linear");
  EXPECT_DOUBLE_EQ(j["segments"][1]["from"].get<double>(), 0.4);
  const auto g = membership_from_json(Json::parse(
      R"({"repr":"piecewise","points":[[0,0.2],[0.5,0.8],[1,0.4]],"segments":["constant-right","linear"]})"));
  EXPECT_DOUBLE_EQ(g(0.25), 0.8);
  EXPECT_DOUBLE_EQ(g(0.75), 0.6);
}

TEST(MembershipJson, Grid) {
  const auto g = membership_from_json(Json::parse(R"({"repr":"grid","n":3,"values":[0,1,0.5]})"));
  EXPECT_TRUE(g.is_grid());
  EXPECT_DOUBLE_EQ(g(0.75), 0.75);
  const Json j = membership_to_json(g);
  EXPECT_EQ(j["repr"], "grid");
  EXPECT_EQ(j["n"], 3);
}

TEST(MembershipJson, Errors) {
  const char* bad[] = {
      R"({"points":[[0,0],[1,1]],"segments":["linear"]})",
      R"({"repr":"spline"})",
      R"({"repr":"grid","n":4,"values":[0,1,0.5]})",
      R"({"repr":"piecewise","points":[[0,0],[1,1]],"segments":[]})",
      R"({"repr":"piecewise","points":[[0,0],[1]],"segments":["linear"]})",
      R"({"repr":"piecewise","points":[[0,0],[1,1]],"segments":["curvy"]})",
      R"({"repr":"piecewise","points":[[0,0],[1,1]],"segments":[{"kind":"linear"}]})",
      R"({"repr":"piecewise","points":[[0,0],[1,1]],"segments":[7]})",
      R"({"repr":"piecewise","points":[[0.1,0],[1,1]],"segments":["linear"]})",
  };
  for (const char* s : bad) EXPECT_THROW(membership_from_json(Json::parse(s)), InputError) << s;
  EXPECT_THROW(read_json_file("/nonexistent/convlat.json"), InputError);
  EXPECT_THROW(load_membership(write_temp("broken.json", "{\"repr\":")), InputError);
}

TEST(SetJson, GradesNumbersAndGaussianShorthand) {
  const auto s = set_from_json(Json::parse(R"({"universe":{"lo":0,"hi":2,"n":3},"grades":[0.5,1,
      {"repr":"piecewise","points":[[0,0],[0.5,1],[1,0]],"segments":["linear","linear"]}]})"));
  EXPECT_EQ(s.domain, (Universe{0.0, 2.0, 3}));
  EXPECT_DOUBLE_EQ(s.grades[0](0.5), 1.0);
  EXPECT_DOUBLE_EQ(s.grades[0](0.4), 0.0);
  EXPECT_DOUBLE_EQ(s.grades[2](0.25), 0.5);
  const auto g = set_from_json(Json::parse(R"({"universe":{"n":5},"gaussian":{"center":0.5,"spread":0.2,"width":0}})"));
  EXPECT_EQ(g.grades.size(), 5u);
  EXPECT_DOUBLE_EQ(g.grades[2](1.0), 1.0);

  const auto back = set_from_json(Json::parse(set_to_json(s).dump()));
  EXPECT_EQ(back.domain, s.domain);
  for (std::size_t i = 0; i < s.grades.size(); ++i) EXPECT_EQ(sup_distance(back.grades[i].base(), s.grades[i].base()), 0.0);

  EXPECT_THROW(set_from_json(Json::parse(R"({"grades":[0.5]})")), InputError);
  EXPECT_THROW(set_from_json(Json::parse(R"({"universe":{"n":3},"grades":[0.5]})")), InputError);
  EXPECT_THROW(set_from_json(Json::parse(R"({"universe":{"n":1},"grades":[0.5]})")), InputError);
  EXPECT_THROW(set_from_json(Json::parse(R"({"universe":{"n":2},"grades":[0.5, 1.5]})")), InputError);
  // non-convex grade
  EXPECT_THROW(set_from_json(Json::parse(R"({"universe":{"n":2},"grades":[0.5,
      {"repr":"piecewise","points":[[0,1],[0.5,0],[1,1]],"segments":["linear","linear"]}]})")),
               ShapeError);
}

TEST(RuleBaseJson, LoadsWithUniverseFallback) {
  const auto path = write_temp("rules.json", R"({
    "star": "minimum", "tri": "product",
    "input_universe": {"lo": 0, "hi": 1, "n": 3},
    "output_universe": {"lo": 0, "hi": 1, "n": 2},
    "rules": [{"antecedent": {"grades": [1, 0.5, 0]}, "consequent": {"grades": [0, 1]}}]
  })");
  const auto rb = rulebase_from_json(read_json_file(path));
  EXPECT_EQ(rb.rules().size(), 1u);
  EXPECT_EQ(rb.input(), (Universe{0.0, 1.0, 3}));
  EXPECT_EQ(to_string(rb.tri()), "product");
  EXPECT_THROW(rulebase_from_json(Json::parse(R"({"star":"minimum","rules":[]})")), InputError);
  EXPECT_THROW(rulebase_from_json(Json::parse(R"({"star":"product","tri":"drastic","rules":[]})")),
               ClassificationError);
}

TEST(ReportJson, Fields) {
  const Json c = to_json(classify(ScalarOp::minimum(), ScalarOp::drastic()));
  EXPECT_EQ(c["is_tnorm_on_L"], false);
  EXPECT_EQ(c["tri_class"]["border_continuous"], false);
  EXPECT_TRUE(c["reason"].is_string());
  OrderVerdict v;
  v.holds = false;
  v.method = OrderMethod::cuts;
  v.witness = 0.25;
  const Json o = to_json(v);
  EXPECT_EQ(o["method"], "cuts");
  EXPECT_EQ(o["witness"], 0.25);
  AxiomReport r;
  EXPECT_TRUE(to_json(r)["witness"].is_null());
}
