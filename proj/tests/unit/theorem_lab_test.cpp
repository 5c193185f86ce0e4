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
#include "oracle.hpp"

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

VerifyOptions Small(std::size_t trials, std::uint64_t seed = 42) {
  VerifyOptions o;
  o.trials = trials;
  o.seed = seed;
  return o;
}

class Families : public ::testing::TestWithParam<GeneratorFamily> {};

TEST_P(Families, GeneratedInstancesSatisfyTheirFamily) {
  const GeneratorFamily family = GetParam();
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GeneratorSpec spec;
    spec.family = family;
    spec.seed = seed;
    spec.min_journals = 1;
    spec.max_journals = 5;
    const auto inst = gen_random_instance(spec);
    ASSERT_TRUE(detail::satisfies_family(inst, family)) << "seed " << seed;
    ASSERT_GE(inst.size(), 1u);
    ASSERT_LE(inst.size(), 5u);
  }
}

TEST_P(Families, SameSeedSameInstance) {
  GeneratorSpec spec;
  spec.family = GetParam();
  spec.seed = 99;
  EXPECT_EQ(gen_random_instance(spec), gen_random_instance(spec));
}

INSTANTIATE_TEST_SUITE_P(All, Families,
                         ::testing::Values(GeneratorFamily::kNoFeedback,
                                           GeneratorFamily::kOrderIndependent,
                                           GeneratorFamily::kRegular2Box,
                                           GeneratorFamily::kExpRegularGbwf,
                                           GeneratorFamily::kRegular,
                                           GeneratorFamily::kUnconstrained));

TEST(Generators, FamilyNamesRoundTrip) {
  EXPECT_EQ(parse_family("exp_regular_gbwf"), GeneratorFamily::kExpRegularGbwf);
  EXPECT_THROW(parse_family("nope"), Error);
}

TEST(Generators, RejectsBadSizes) {
  SplitMix64 rng(1);
  EXPECT_THROW(gen_random_instance(GeneratorFamily::kRegular2Box, 3, rng), GenerationError);
  EXPECT_THROW(gen_random_instance(GeneratorFamily::kExpRegularGbwf, 9, rng), GenerationError);
  EXPECT_THROW(gen_random_instance(GeneratorFamily::kUnconstrained, 0, rng), GenerationError);
  GeneratorSpec bad;
  bad.min_journals = 4;
  bad.max_journals = 2;
  EXPECT_THROW(gen_random_instance(bad), GenerationError);
}

TEST(Generators, RegularTwoBoxPriorAboveBound) {
  SplitMix64 rng(4);
  for (int i = 0; i < 50; ++i) {
    const auto inst = gen_random_instance(GeneratorFamily::kRegular2Box, 2, rng);
    const auto& j2 = inst.journal(1);
    EXPECT_GE(inst.prior().high(), j2.q / (j2.q + j2.a));
  }
}

// Claims that hold: small trial counts keep this fast; the acceptance binary
// runs the large versions.
TEST(Claims, HoldingClaimsVerify) {
  EXPECT_EQ(verify_theorem_no_feedback(Small(100)).status, VerificationStatus::kVerified);
  EXPECT_EQ(verify_order_independence_bounded_prior(Small(100)).status,
            VerificationStatus::kVerified);
  EXPECT_EQ(verify_base_case(Small(100)).status, VerificationStatus::kVerified);
  EXPECT_EQ(verify_theorem_weak_feedback(Small(50)).status, VerificationStatus::kVerified);
  EXPECT_EQ(verify_lemma_commutation_reversed(Small(200)).status, VerificationStatus::kVerified);
  EXPECT_EQ(verify_lemma_ratio(Small(50)).status, VerificationStatus::kVerified);
  EXPECT_EQ(verify_single_crossing(Small(50)).status, VerificationStatus::kVerified);
  EXPECT_EQ(verify_normalization(Small(50)).status, VerificationStatus::kVerified);
  EXPECT_EQ(reproduce_counterexamples().status, VerificationStatus::kVerified);
}

TEST(Claims, CommutationAsStatedIsFalsified) {
  const auto r = verify_lemma_commutation(Small(200));
  EXPECT_EQ(r.status, VerificationStatus::kFalsified);
  EXPECT_GT(r.failure_count, 100u);
  ASSERT_FALSE(r.failures.empty());
  EXPECT_FALSE(r.failures[0].detail.empty());
}

// Frozen witness: with a_1 q_2 > a_2 q_1, applying journal 1's update last
// gives the lower belief.
TEST(Claims, CommutationWitness) {
  const auto j1 = J("J1", 5, R(1, 5), R(1, 5));
  const auto j2 = J("J2", 1, R(3, 10), R(2, 5));
  EXPECT_GT(j1.a * j2.q, j2.a * j1.q);
  for (long k = 1; k < 10; ++k) {
    const Belief<Rational> b(R(k, 10));
    const Rational one_last = update_belief(j1, update_belief(j2, b)).high();
    const Rational two_last = update_belief(j2, update_belief(j1, b)).high();
    EXPECT_LT(one_last, two_last) << "mu = " << k << "/10";
  }
}

TEST(Claims, OrderIndependenceAsStatedIsFalsified) {
  const auto r = verify_prop_order_independence(Small(200));
  EXPECT_EQ(r.status, VerificationStatus::kFalsified);
  EXPECT_FALSE(r.notes.empty());
}

// Frozen witness: identical (a, q) for both journals, no costs, low prior.
TEST(Claims, OrderIndependenceWitness) {
  const auto inst = Instance<Rational>::create(
      {J("A", 2, R(1, 2), R(2, 5)), J("B", 1, R(1, 2), R(2, 5))}, Belief<Rational>(R(1, 10)));
  EXPECT_TRUE(check_order_independence(inst).pass);
  const auto mono = SearchOrder::identity(2);
  const auto bx = oracle::boxes(inst);
  EXPECT_EQ(oracle::value(bx, {0, 1}, R(1, 10)), R(61, 200));
  EXPECT_EQ(oracle::value(bx, {1, 0}, R(1, 10)), R(23, 50));
  EXPECT_EQ(expected_payoff(inst, mono), R(61, 200));
  EXPECT_EQ(brute_force_optimal(inst).best_order, mono.swapped(0));
  // Above kappa / (1 + kappa) = 4/9 the monotone order is back.
  EXPECT_EQ(brute_force_optimal(inst.with_prior(Belief<Rational>(R(1, 2)))).best_order, mono);
  EXPECT_EQ(expected_payoff(inst.with_prior(Belief<Rational>(R(4, 9))), mono),
            expected_payoff(inst.with_prior(Belief<Rational>(R(4, 9))), mono.swapped(0)));
}

TEST(Claims, ReplayIsDeterministic) {
  const auto a = verify_prop_order_independence(Small(60, 7));
  const auto b = verify_prop_order_independence(Small(60, 7));
  EXPECT_EQ(a.failure_count, b.failure_count);
  ASSERT_EQ(a.failures.size(), b.failures.size());
  for (std::size_t i = 0; i < a.failures.size(); ++i) {
    EXPECT_EQ(a.failures[i].seed, b.failures[i].seed);
    EXPECT_EQ(a.failures[i].instance, b.failures[i].instance);
  }
}

TEST(Claims, RecordedFailuresReparse) {
  const auto r = verify_lemma_commutation(Small(50));
  for (const auto& f : r.failures) {
    if (f.instance.is_null()) continue;
    EXPECT_NO_THROW(instance_from_json(f.instance));
  }
  EXPECT_LE(r.failures.size(), kRecordedFailures);
}

TEST(Counterexamples, ExampleInstances) {
  EXPECT_EQ(prior_threshold_2box(example_instance(R(1, 2))).mu_star, R(17, 29));
  const auto t3 = counterexample_table(3, R(1, 20));
  EXPECT_EQ(brute_force_optimal(t3).best_order, SearchOrder::identity(2).swapped(0));
  EXPECT_THROW(counterexample_table(4, R(1, 2)), Error);
}

TEST(Counterexamples, NotesRecordDiscrepancies) {
  const auto r = reproduce_counterexamples();
  int discrepancies = 0;
  for (const auto& n : r.notes) {
    if (n.find("DISCREPANCY") != std::string::npos) ++discrepancies;
  }
  EXPECT_EQ(discrepancies, 2);
}

TEST(MonteCarlo, SmallRunVerifies) {
  MonteCarloOptions o;
  o.episodes = 20000;
  o.random_pairs = 4;
  const auto r = verify_monte_carlo(o);
  EXPECT_EQ(r.trials, 10u);
  EXPECT_EQ(r.status, VerificationStatus::kVerified) << to_text(r);
}

TEST(Suites, RegistryRunsAndRejectsUnknown) {
  SuiteOptions o;
  o.trials = 20;
  o.episodes = 5000;
  EXPECT_EQ(run_suite("commutation", o).size(), 2u);
  EXPECT_EQ(run_suite("all", o).size(), suite_names().size() + 2);
  EXPECT_THROW(run_suite("bogus", o), Error);
}

TEST(Reports, JsonAndText) {
  const auto r = verify_base_case(Small(10));
  const Json doc = to_json(r);
  EXPECT_EQ(doc["claim"], "two-box-base-case");
  EXPECT_EQ(doc["status"], "verified");
  EXPECT_NE(to_text(r).find("two-box-base-case"), std::string::npos);
}

}  // namespace
}  // namespace jss
