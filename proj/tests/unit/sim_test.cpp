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

#include <cmath>

#include "jss/jss.hpp"
#include "oracle.hpp"

namespace jss {
namespace {

Journal<double> J(const char* name, double u, double a, double q, double c = 0) {
  return {name, u, a, q, c, 0};
}

Instance<double> Example(double prior) {
  return Instance<double>::create({J("J1", 5, 0.2, 0.2), J("J2", 1, 0.3, 0.4)},
                                  Belief<double>(prior));
}

TEST(Episode, CertainAcceptance) {
  const auto inst = Instance<double>::create({J("A", 4, 1, 0, 0.5), J("B", 1, 1, 0)},
                                             Belief<double>(1));
  SplitMix64 rng(1);
  const auto e = simulate_episode(inst, SearchOrder::identity(2), rng);
  ASSERT_TRUE(e.accepted_at.has_value());
  EXPECT_EQ(*e.accepted_at, 0u);
  EXPECT_EQ(*e.paying_journal, 0u);
  EXPECT_DOUBLE_EQ(e.realized_payoff, 3.5);
  EXPECT_EQ(e.quality_path, (std::vector<Quality>{Quality::kHigh}));
}

TEST(Episode, LowQualityWithoutFeedbackIsAlwaysRejected) {
  const auto inst = Instance<double>::create({J("A", 4, 1, 0, 0.5), J("B", 1, 1, 0, 0.25)},
                                             Belief<double>(0), 2.0);
  SplitMix64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const auto e = simulate_episode(inst, SearchOrder::identity(2), rng);
    EXPECT_FALSE(e.accepted_at.has_value());
    EXPECT_DOUBLE_EQ(e.realized_payoff, 1.25);
    EXPECT_EQ(e.quality_path, (std::vector<Quality>{Quality::kLow, Quality::kLow}));
  }
}

TEST(Episode, CertainFeedbackUpgradesAfterRejection) {
  const auto inst = Instance<double>::create({J("A", 4, 1, 0.999999999), J("B", 1, 1, 0)},
                                             Belief<double>(0));
  SplitMix64 rng(3);
  const auto e = simulate_episode(inst, SearchOrder::identity(2), rng);
  ASSERT_TRUE(e.accepted_at.has_value());
  EXPECT_EQ(*e.accepted_at, 1u);
  EXPECT_EQ(e.quality_path, (std::vector<Quality>{Quality::kLow, Quality::kHigh}));
  EXPECT_DOUBLE_EQ(e.realized_payoff, 1.0);
}

TEST(Estimate, SingleEpisodeHasNoStandardError) {
  const auto est = estimate_value(Example(0.5), SearchOrder::identity(2), 1, 9);
  EXPECT_FALSE(est.stderr_.has_value());
  EXPECT_EQ(est.episodes, 1u);
}

TEST(Estimate, ZeroEpisodesIsAnError) {
  EXPECT_THROW(estimate_value(Example(0.5), SearchOrder::identity(2), 0, 9), Error);
}

TEST(Estimate, DeterministicAcrossThreadCounts) {
  const auto inst = Example(0.6);
  const auto order = SearchOrder::identity(2);
  const auto a = estimate_value(inst, order, 100000, 77, 1);
  const auto b = estimate_value(inst, order, 100000, 77, 3);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(*a.stderr_, *b.stderr_);
  const auto c = estimate_value(inst, order, 100000, 78, 1);
  EXPECT_NE(a.mean, c.mean);
}

TEST(Estimate, WithinThreeSigmaOfExactValue) {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 8; ++trial) {
    const auto exact = gen_random_instance(GeneratorFamily::kUnconstrained, 3, rng);
    const SearchOrder order({2, 0, 1});
    const double truth = to_double(oracle::value(oracle::boxes(exact), order.perm(),
                                                 exact.prior().high(), exact.outside_option()));
    const auto est = estimate_value(to_float(exact), order, 200000, 1000 + trial);
    EXPECT_LE(std::abs(est.mean - truth), 4 * *est.stderr_) << "trial " << trial;
  }
}

TEST(Survival, MatchesExactReach) {
  const Instance<double> inst = Example(0.7);
  const SearchOrder order = SearchOrder::identity(2);
  const std::size_t n = 200000;
  const auto s = empirical_survival(inst, order, n, 5);
  ASSERT_EQ(s.reach.size(), 3u);
  ASSERT_EQ(s.accept_given_reach.size(), 2u);
  EXPECT_DOUBLE_EQ(s.reach[0], 1.0);
  const auto exact = survival_schedule(inst, order);
  const auto path = belief_path(inst, order);
  for (std::size_t t = 0; t < 3; ++t) {
    const double sd = std::sqrt(exact[t] * (1 - exact[t]) / n);
    EXPECT_NEAR(s.reach[t], exact[t], 4 * sd + 1e-12);
  }
  for (std::size_t t = 0; t < 2; ++t) {
    const double p = inst.journal(order[t]).a * path[t].high();
    const double sd = std::sqrt(p * (1 - p) / static_cast<double>(s.arrivals[t]));
    EXPECT_NEAR(s.accept_given_reach[t], p, 4 * sd);
  }
}

TEST(Survival, UnreachedPeriodsAreNan) {
  const auto inst = Instance<double>::create({J("A", 4, 1, 0), J("B", 1, 1, 0)},
                                             Belief<double>(1));
  const auto s = empirical_survival(inst, SearchOrder::identity(2), 1000, 5);
  EXPECT_EQ(s.arrivals[1], 0u);
  EXPECT_TRUE(std::isnan(s.accept_given_reach[1]));
  EXPECT_DOUBLE_EQ(s.reach[2], 0.0);
}

TEST(Survival, DeterministicAcrossThreadCounts) {
  const auto inst = Example(0.4);
  const auto a = empirical_survival(inst, SearchOrder::identity(2), 50000, 8, 1);
  const auto b = empirical_survival(inst, SearchOrder::identity(2), 50000, 8, 4);
  EXPECT_EQ(a.arrivals, b.arrivals);
}

}  // namespace
}  // namespace jss
