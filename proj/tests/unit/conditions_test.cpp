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

#include <algorithm>
#include <numeric>

#include "jss/jss.hpp"

namespace jss {
namespace {

Rational R(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Journal<Rational> J(const char* name, Rational u, Rational a, Rational q, Rational c = 0) {
  return {name, u, a, q, c, 0};
}

Instance<Rational> Example(Rational prior) {
  return Instance<Rational>::create({J("J1", 5, R(1, 5), R(1, 5)), J("J2", 1, R(3, 10), R(2, 5))},
                                    Belief<Rational>(prior));
}

Instance<Rational> TableThree(Rational prior) {
  return Instance<Rational>::create({J("J1", 2, R(1, 2), R(3, 10)), J("J2", 1, R(3, 5), R(1, 5))},
                                    Belief<Rational>(prior));
}

// Lowest belief over every ordered set of strict-prefix rejections, by direct
// recursion on the update map.
Rational LowestReachable(const Instance<Rational>& inst) {
  const std::size_t n = inst.size();
  Rational lowest = inst.prior().high();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Belief<Rational> b = inst.prior();
    for (std::size_t t = 0; t + 1 < n; ++t) {
      b = update_belief(inst.journal(perm[t]), b);
      lowest = std::min(lowest, b.high());
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return lowest;
}

TEST(Regularity, TableThreeIsExponentiallyRegular) {
  const auto r = check_regularity(TableThree(R(1, 2)));
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.flag("regular"));
  EXPECT_TRUE(r.flag("strict"));
  EXPECT_TRUE(r.flag("exponential"));
  ASSERT_TRUE(r.margin.has_value());
  EXPECT_EQ(*r.margin, R(1, 10));
}

TEST(Regularity, ExampleFailsOnFeedback) {
  const auto r = check_regularity(Example(R(1, 2)));
  EXPECT_FALSE(r.pass);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_NE(r.witnesses[0].description.find("q increases"), std::string::npos);
  EXPECT_EQ(r.witnesses[0].journals, (std::vector<int>{0, 1}));
  EXPECT_EQ(r.witnesses[0].values, (std::vector<Rational>{R(1, 5), R(2, 5)}));
}

TEST(Regularity, SingleJournalIsTriviallyRegular) {
  const auto inst = Instance<Rational>::create({J("J", 1, R(1, 2), R(1, 2))},
                                               Belief<Rational>(R(1, 2)));
  const auto r = check_regularity(inst);
  EXPECT_TRUE(r.pass);
  EXPECT_FALSE(r.margin.has_value());
}

TEST(Regularity, RegularButNotExponential) {
  const auto inst = Instance<Rational>::create(
      {J("A", 3, R(1, 5), R(1, 2)), J("B", 2, R(1, 2), R(1, 5))}, Belief<Rational>(R(1, 2)));
  const auto r = check_regularity(inst);
  EXPECT_TRUE(r.flag("regular"));
  EXPECT_FALSE(r.flag("exponential"));
}

TEST(Regularity, EqualPayoffsAreNotStrict) {
  const auto inst = Instance<Rational>::create(
      {J("A", 2, R(1, 5), R(1, 2)), J("B", 2, R(1, 2), R(1, 5))}, Belief<Rational>(R(1, 2)));
  const auto r = check_regularity(inst);
  EXPECT_TRUE(r.flag("regular"));
  EXPECT_FALSE(r.flag("strict"));
}

TEST(OrderIndependence, NoFeedbackPasses) {
  const auto inst = Instance<Rational>::create(
      {J("A", 3, R(1, 5), 0), J("B", 2, R(1, 2), 0), J("C", 1, R(9, 10), 0)},
      Belief<Rational>(R(1, 2)));
  const auto r = check_order_independence(inst);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.flag("order_independent"));
  EXPECT_EQ(*r.margin, 0);
}

TEST(OrderIndependence, ExampleFailsWithBothProducts) {
  const auto r = check_order_independence(Example(R(1, 2)));
  EXPECT_FALSE(r.pass);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_EQ(r.witnesses[0].values, (std::vector<Rational>{R(2, 25), R(3, 50)}));
  EXPECT_EQ(r.antisymmetric[0][1], R(1, 50));
  EXPECT_EQ(r.antisymmetric[1][0], R(-1, 50));
}

TEST(OrderIndependence, ProportionalFeedbackPasses) {
  const auto inst = Instance<Rational>::create(
      {J("A", 3, R(1, 5), R(1, 10)), J("B", 2, R(2, 5), R(1, 5))}, Belief<Rational>(R(1, 2)));
  const auto r = check_order_independence(inst);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.flag("small_costs"));
}

TEST(OrderIndependence, LargeCostsAreFlagged) {
  const auto inst = Instance<Rational>::create(
      {J("A", 10, R(1, 2), 0, 1), J("B", 9, R(9, 10), 0, R(9, 100))}, Belief<Rational>(1));
  const auto r = check_order_independence(inst);
  EXPECT_TRUE(r.pass);
  EXPECT_FALSE(r.flag("small_costs"));
}

TEST(OrderIndependence, MatchesBeliefCommutation) {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = gen_random_instance(GeneratorFamily::kUnconstrained, 2, rng);
    const bool oi = check_order_independence(inst).pass;
    const auto b = inst.prior();
    const auto& x = inst.journal(0);
    const auto& y = inst.journal(1);
    const bool commute = update_belief(y, update_belief(x, b)) == update_belief(x, update_belief(y, b));
    if (oi) {
      EXPECT_TRUE(commute);
    }
  }
}

TEST(WeakFeedback, TableThreeFailsAtLowPrior) {
  const auto r = check_globally_bounded_weak_feedback(TableThree(R(1, 20)));
  EXPECT_FALSE(r.pass);
  EXPECT_LT(*r.margin, 0);
}

TEST(WeakFeedback, TableThreePassesAtHighPrior) {
  const auto inst = TableThree(R(9, 10));
  const auto r = check_globally_bounded_weak_feedback(inst);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.min_belief.high(), R(19, 23));
  EXPECT_EQ(r.min_path, (std::vector<int>{1}));
  EXPECT_EQ(r.min_belief.high(), LowestReachable(inst));
  EXPECT_EQ(*r.margin, R(19, 23) - R(3, 8));
  EXPECT_EQ(r.paths_checked, 3u);
}

TEST(WeakFeedback, NoFeedbackHasZeroBound) {
  const auto inst = Instance<Rational>::create(
      {J("A", 3, R(1, 5), 0), J("B", 2, R(1, 2), 0), J("C", 1, R(9, 10), 0)},
      Belief<Rational>(R(1, 100)));
  EXPECT_TRUE(check_globally_bounded_weak_feedback(inst).pass);
}

TEST(WeakFeedback, MinimumMatchesDirectEnumeration) {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = gen_random_instance(GeneratorFamily::kUnconstrained, 2 + trial % 4, rng);
    const auto r = check_globally_bounded_weak_feedback(inst);
    ASSERT_EQ(r.min_belief.high(), LowestReachable(inst));
    Rational global = 0;
    for (const auto& j : inst.journals()) global = std::max(global, weak_feedback_bound(j));
    ASSERT_EQ(r.pass, LowestReachable(inst) >= global);
  }
}

TEST(WeakFeedback, PoliciesNest) {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = gen_random_instance(GeneratorFamily::kUnconstrained, 4, rng);
    const bool strictest =
        check_globally_bounded_weak_feedback(inst, FeedbackThresholdPolicy::kMaxOverJournals).pass;
    const bool remaining =
        check_globally_bounded_weak_feedback(inst, FeedbackThresholdPolicy::kPerRemaining).pass;
    if (strictest) {
      EXPECT_TRUE(remaining);
    }
  }
}

TEST(WeakFeedback, PolicyNamesRoundTrip) {
  for (auto p : {FeedbackThresholdPolicy::kFirstJournal, FeedbackThresholdPolicy::kMaxOverJournals,
                 FeedbackThresholdPolicy::kPerRemaining}) {
    EXPECT_EQ(parse_threshold_policy(to_string(p)), p);
  }
  EXPECT_THROW(parse_threshold_policy("median"), Error);
}

TEST(WeakFeedback, CapIsEnforced) {
  std::vector<Journal<Rational>> js;
  for (int i = 0; i < 9; ++i) js.push_back(J("x", i + 1, R(1, 2), 0));
  const auto inst = Instance<Rational>::create(js, Belief<Rational>(R(1, 2)));
  EXPECT_THROW(check_globally_bounded_weak_feedback(inst), SizeLimitError);
}

TEST(StrongFeedback, Regions) {
  const auto j2 = J("J2", 1, R(3, 10), R(2, 5));
  const auto r = check_strong_feedback_region(j2, Belief<Rational>(R(1, 2)));
  EXPECT_TRUE(r.strong);
  EXPECT_GT(r.posterior.high(), R(1, 2));
  EXPECT_EQ(r.fixed_point, 1);
  EXPECT_EQ(r.weak_bound, R(4, 7));

  const auto plain = J("P", 1, R(1, 2), 0);
  EXPECT_FALSE(check_strong_feedback_region(plain, Belief<Rational>(R(1, 2))).strong);
  EXPECT_TRUE(check_strong_feedback_region(plain, Belief<Rational>(1)).strong);

  const auto mid = J("M", 1, R(1, 2), R(1, 4));
  EXPECT_EQ(check_strong_feedback_region(mid, Belief<Rational>(R(1, 2))).fixed_point, R(1, 2));
  EXPECT_TRUE(check_strong_feedback_region(mid, Belief<Rational>(R(1, 2))).strong);
  EXPECT_FALSE(check_strong_feedback_region(mid, Belief<Rational>(R(3, 5))).strong);
}

TEST(FloatMode, AgreesWithExact) {
  const auto exact = check_globally_bounded_weak_feedback(TableThree(R(9, 10)));
  const auto fl = check_globally_bounded_weak_feedback(to_float(TableThree(R(9, 10))));
  EXPECT_EQ(exact.pass, fl.pass);
  EXPECT_NEAR(fl.min_belief.high(), 19.0 / 23.0, 1e-12);
}

}  // namespace
}  // namespace jss
