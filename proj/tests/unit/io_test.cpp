// Copyright 2026 The JSS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "jss/jss.hpp"

namespace jss {
namespace {

Rational R(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

const std::string kData = JSS_DATA_DIR;

TEST(Parse, ExampleFile) {
  const auto inst = load_instance(kData + "/example1.json");
  ASSERT_EQ(inst.size(), 2u);
  EXPECT_EQ(inst.journal(0).name, "J1");
  EXPECT_EQ(inst.journal(0).a, R(1, 5));
  EXPECT_EQ(inst.journal(1).q, R(2, 5));
  EXPECT_EQ(inst.prior().high(), R(7, 10));
  EXPECT_EQ(inst.outside_option(), 0);
}

TEST(Parse, EveryShippedInstanceLoads) {
  for (const char* f : {"example1", "table1", "table2", "table3", "no_feedback",
                        "order_independent"}) {
    EXPECT_NO_THROW(load_instance(kData + "/" + f + ".json")) << f;
  }
}

TEST(Parse, NumberForms) {
  const auto inst = parse_instance(R"({
    "journals": [{"u": 3, "a": 0.1, "q": "1/3", "c": "2e-2"}],
    "prior_h": "17/29", "outside_option": -1})");
  const auto& j = inst.journal(0);
  EXPECT_EQ(j.name, "J1");
  EXPECT_EQ(j.u, 3);
  EXPECT_EQ(j.a, R(1, 10));  // shortest decimal, not the binary double
  EXPECT_EQ(j.q, R(1, 3));
  EXPECT_EQ(j.c, R(1, 50));
  EXPECT_EQ(inst.prior().high(), R(17, 29));
  EXPECT_EQ(inst.outside_option(), -1);
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_instance("{"), InvalidInstanceError);
  EXPECT_THROW(parse_instance("[]"), InvalidInstanceError);
  EXPECT_THROW(parse_instance(R"({"prior_h": 0.5})"), InvalidInstanceError);
  EXPECT_THROW(parse_instance(R"({"journals": [], "prior_h": 0.5})"), InvalidInstanceError);
  EXPECT_THROW(parse_instance(R"({"journals": [{"u": 1, "a": 0.5}], "prior_h": 0.5})"),
               InvalidInstanceError);
  EXPECT_THROW(parse_instance(R"({"journals": [{"u": 1, "a": 0, "q": 0}], "prior_h": 0.5})"),
               InvalidInstanceError);
  EXPECT_THROW(parse_instance(R"({"journals": [{"u": 1, "a": 0.5, "q": 1}], "prior_h": 0.5})"),
               InvalidInstanceError);
  EXPECT_THROW(parse_instance(R"({"journals": [{"u": 1, "a": 0.5, "q": 0}], "prior_h": 1.5})"),
               InvalidInstanceError);
  EXPECT_THROW(parse_instance(R"({"journals": [{"u": "x", "a": 0.5, "q": 0}], "prior_h": 0.5})"),
               InvalidInstanceError);
  EXPECT_THROW(parse_instance(R"({"journals": [{"u": true, "a": 0.5, "q": 0}], "prior_h": 0.5})"),
               InvalidInstanceError);
  EXPECT_THROW(load_instance(kData + "/missing.json"), InvalidInstanceError);
}

TEST(RoundTrip, ExactInstancesSurviveSerialization) {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = gen_random_instance(GeneratorFamily::kUnconstrained, 1 + trial % 5, rng);
    const auto back = parse_instance(instance_to_json(inst).dump());
    EXPECT_EQ(back, inst);
  }
}

TEST(RoundTrip, InputOrderIsPreserved) {
  const auto inst = parse_instance(R"({
    "journals": [{"name": "low", "u": 1, "a": 0.5, "q": 0},
                 {"name": "high", "u": 2, "a": 0.5, "q": 0}],
    "prior_h": 0.5})");
  EXPECT_EQ(inst.journal(0).name, "high");
  const Json doc = instance_to_json(inst);
  EXPECT_EQ(doc["journals"][0]["name"], "low");
  EXPECT_EQ(doc["journals"][1]["u"], "2");
}

TEST(Output, SolveResult) {
  const auto inst = load_instance(kData + "/example1.json");
  const Json doc = to_json(inst, brute_force_optimal(inst));
  EXPECT_EQ(doc["best_order"], SearchOrder::identity(2).to_string());
  EXPECT_EQ(doc["best_order_names"], Json({"J1", "J2"}));
  EXPECT_EQ(doc["monotone_in_argmax"], true);
  EXPECT_EQ(doc["certified"], true);
  EXPECT_EQ(doc["best_value"], to_fraction_string(expected_payoff(inst, SearchOrder::identity(2))));
}

TEST(Output, ConditionReportUsesOneBasedJournals) {
  const auto inst = load_instance(kData + "/example1.json");
  const Json doc = to_json(check_regularity(inst));
  EXPECT_EQ(doc["pass"], false);
  EXPECT_EQ(doc["witnesses"][0]["journals"], Json({1, 2}));
  EXPECT_EQ(doc["flags"]["regular"], false);
}

TEST(Output, Threshold) {
  const Json doc = to_json(prior_threshold_2box(load_instance(kData + "/example1.json")));
  EXPECT_EQ(doc["kind"], "threshold");
  EXPECT_EQ(doc["mu_star"], "17/29");
  const Json none = to_json(prior_threshold_2box(load_instance(kData + "/table3.json")));
  EXPECT_EQ(none["kind"], "threshold");
  EXPECT_EQ(none["mu_star"], "1/16");
}

}  // namespace
}  // namespace jss
