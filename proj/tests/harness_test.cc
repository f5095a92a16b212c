// Copyright 2026 The unibid Authors.
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

#include "unibid/harness.h"

#include <gtest/gtest.h>

#include <cmath>

#include "unibid/error.h"
#include "unibid/oracle.h"
#include "unibid/report.h"

namespace unibid {
namespace {

RunConfig BaseConfig() {
  RunConfig config;
  config.units = 2;
  config.horizon = 200;
  config.values = {1.0, 0.5};
  config.adversary = ParseAdversarySpec("iid:0,1");
  config.seed = 7;
  return config;
}

// Replays the adversary stream of a replication independently.
std::vector<BidProfile> History(const RunConfig& config, int replication,
                                const Grid& grid) {
  CounterRng rng(config.seed, replication * 4 + 1);
  std::vector<BidProfile> history;
  for (int t = 1; t <= config.horizon; ++t) {
    history.push_back(NextBids(config.adversary, config.units, t, rng, grid));
  }
  return history;
}

TEST(HarnessTest, SingleRoundRegretAgainstUniformPrior) {
  RunConfig config = BaseConfig();
  config.horizon = 1;
  config.epsilon = 0.25;
  config.eta = 0.1;
  config.adversary = ParseAdversarySpec("fixed:0.8,0.3");
  const RegretTrace trace = RunReplication(config, 0);
  ASSERT_EQ(trace.rounds.size(), 1u);
  const PseudoGraph graph(2, Grid(4));
  const Valuation values(config.values);
  const std::vector<BidProfile> history = {BidProfile({0.8, 0.3})};
  const double comparator =
      BestFixedActionExhaustive(history, graph, values).total;
  const double uniform =
      ExactHedgeExpectedUtilities(history, graph, values, 0.1)[0];
  EXPECT_NEAR(trace.final_regret, comparator - uniform, 1e-12);
  EXPECT_DOUBLE_EQ(trace.rounds[0].discretization_bound, 0.5);
}

TEST(HarnessTest, FullInformationMatchesExactHedge) {
  RunConfig config = BaseConfig();
  config.horizon = 500;
  config.feedback = FeedbackMode::kFullInformation;
  config.adversary = ParseAdversarySpec("fixed:0.83,0.31");
  config.epsilon = 1.0 / 6.0;
  const LearningParameters params = ResolveParameters(config);
  const RegretTrace trace = RunReplication(config, 0);
  const PseudoGraph graph(2, Grid(params.levels));
  const Valuation values(config.values);
  const auto history = History(config, 0, graph.grid());
  const auto hedge =
      ExactHedgeExpectedUtilities(history, graph, values, params.eta);
  double cumulative = 0.0;
  for (int t = 0; t < config.horizon; ++t) {
    ASSERT_NEAR(trace.rounds[t].expected_utility, hedge[t], 1e-9) << t;
    cumulative += hedge[t];
  }
  const double comparator =
      BestFixedActionExhaustive(history, graph, values).total;
  EXPECT_NEAR(trace.final_regret, comparator - cumulative, 1e-9);
  EXPECT_LE(trace.final_regret, comparator);
  // Against a fixed adversary Hedge settles: the second half adds far less
  // regret than the first.
  const double half = trace.rounds[249].cum_expected_regret;
  EXPECT_LT(trace.final_regret - half, half / 2);
}

TEST(HarnessTest, RegretMatchesEnumerationForEveryFeedback) {
  for (FeedbackMode mode : {FeedbackMode::kFullInformation,
                            FeedbackMode::kBandit, FeedbackMode::kAllWinner}) {
    RunConfig config = BaseConfig();
    config.feedback = mode;
    config.horizon = 60;
    config.epsilon = 0.25;
    const RegretTrace trace = RunReplication(config, 1);
    const PseudoGraph graph(2, Grid(4));
    const auto history = History(config, 1, graph.grid());
    double cumulative = 0.0;
    for (int t = 0; t < config.horizon; ++t) {
      cumulative += trace.rounds[t].expected_utility;
      const std::vector<BidProfile> prefix(history.begin(),
                                           history.begin() + t + 1);
      const double comparator =
          BestFixedActionExhaustive(prefix, graph, Valuation(config.values))
              .total;
      ASSERT_NEAR(trace.rounds[t].cum_expected_regret, comparator - cumulative,
                  1e-9);
    }
  }
}

TEST(HarnessTest, IdenticalSeedsGiveIdenticalCsv) {
  RunConfig config = BaseConfig();
  config.replications = 4;
  config.feedback = FeedbackMode::kAllWinner;
  const std::string a = FormatCsv(RunExperiment(config));
  EXPECT_EQ(FormatCsv(RunExperiment(config)), a);
  config.workers = 3;
  EXPECT_EQ(FormatCsv(RunExperiment(config)), a);
  config.seed = 8;
  EXPECT_NE(FormatCsv(RunExperiment(config)), a);
}

TEST(HarnessTest, PerturbModeToleratesOnGridAdversary) {
  RunConfig config = BaseConfig();
  config.epsilon = 0.25;
  config.adversary = ParseAdversarySpec("fixed:0.75,0.5");
  EXPECT_THROW(RunReplication(config, 0), Error);
  config.tie_mode = TieMode::kPerturb;
  const RegretTrace trace = RunReplication(config, 0);
  EXPECT_GT(trace.tie_offset, 0.0);
  EXPECT_LE(trace.tie_offset, 0.25 / 100.0);
  EXPECT_EQ(trace.rounds.size(), 200u);
  EXPECT_NE(RunReplication(config, 1).tie_offset, trace.tie_offset);
}

TEST(HarnessTest, FrbRequiresFrozenRun) {
  RunConfig config = BaseConfig();
  config.pricing = PricingRule::kFrb;
  EXPECT_THROW(ValidateConfig(config), Error);
  config.frozen = true;
  config.horizon = 50;
  config.epsilon = 0.25;
  const RegretTrace trace = RunReplication(config, 0);
  const PseudoGraph graph(2, Grid(4));
  const auto history = History(config, 0, graph.grid());
  double comparator = -1e9;
  double expected = 0.0;
  const Valuation values(config.values);
  for (const PseudoPath& p : EnumeratePaths(graph)) {
    double total = 0.0;
    for (const BidProfile& beta : history) {
      const double u =
          ClearAuction(Decode(p, graph), beta, PricingRule::kFrb, values)
              .utility;
      total += u;
      expected += u / 15.0;
    }
    comparator = std::max(comparator, total);
  }
  EXPECT_NEAR(trace.final_regret, comparator - expected, 1e-9);
}

TEST(HarnessTest, FrozenLabRunKeepsUniformPlay) {
  RunConfig config = BaseConfig();
  config.frozen = true;
  config.epsilon = 0.5;
  config.adversary = ParseAdversarySpec("fixed:0.8,0.3");
  const RegretTrace trace = RunReplication(config, 0);
  for (const RoundRecord& r : trace.rounds) {
    EXPECT_EQ(r.expected_utility, trace.rounds[0].expected_utility);
  }
}

TEST(HarnessTest, ConfigValidation) {
  RunConfig config = BaseConfig();
  config.horizon = 0;
  EXPECT_THROW(ValidateConfig(config), Error);
  config = BaseConfig();
  config.values = {1.0};
  EXPECT_THROW(ValidateConfig(config), Error);
  config = BaseConfig();
  config.eta = -1.0;
  EXPECT_THROW(ValidateConfig(config), Error);
  config = BaseConfig();
  config.horizon = 2;
  try {
    ValidateConfig(config);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kHorizonTooShort);
  }
  config.epsilon = 0.5;
  config.eta = 0.1;
  EXPECT_NO_THROW(ValidateConfig(config));
}

}  // namespace
}  // namespace unibid
