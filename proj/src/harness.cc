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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <thread>

#include "unibid/error.h"
#include "unibid/oracle.h"
#include "unibid/rng.h"

namespace unibid {
namespace {

// Independent random streams of one replication.
enum Stream : std::uint64_t { kLearnerStream = 0, kAdversaryStream = 1,
                              kOffsetStream = 2, kStreamsPerRun = 4 };

CounterRng MakeRng(const RunConfig& config, int replication, Stream stream) {
  return CounterRng(config.seed,
                    static_cast<std::uint64_t>(replication) * kStreamsPerRun +
                        stream);
}

Grid MakeGrid(const RunConfig& config, int levels, int replication) {
  if (config.tie_mode == TieMode::kValidate) return Grid(levels);
  CounterRng rng = MakeRng(config, replication, kOffsetStream);
  return Grid(levels, rng.Uniform(0.0, Grid(levels).epsilon() / 100.0));
}

RoundRecord MakeRecord(const AuctionOutcome& outcome, double expected,
                       double comparator, double cum_expected, int units,
                       int t, double epsilon) {
  RoundRecord r;
  r.realized_utility = outcome.utility;
  r.expected_utility = expected;
  r.cum_expected_regret = comparator - cum_expected;
  r.discretization_bound = units * t * epsilon;
  r.price = outcome.price;
  r.allocation = outcome.allocation;
  return r;
}

// Learning run under LAB: sample, clear, feed back, update.
void RunLearning(const RunConfig& config, const LearningParameters& params,
                 const Grid& grid, int replication, RegretTrace& trace) {
  Learner learner(config.units, Valuation(config.values), config.feedback,
                  grid, params.eta);
  const PseudoGraph& graph = learner.graph();
  CounterRng learner_rng = MakeRng(config, replication, kLearnerStream);
  CounterRng adversary_rng = MakeRng(config, replication, kAdversaryStream);
  std::vector<double> totals(graph.node_count(), 0.0);
  double cum_expected = 0.0;
  for (int t = 1; t <= config.horizon; ++t) {
    const BidProfile beta =
        NextBids(config.adversary, config.units, t, adversary_rng, grid);
    learner.Prepare();
    const double expected =
        ExpectedUtility(learner.state(), beta, learner.values(), graph);
    const PseudoPath played = learner.Sample(learner_rng);
    const AuctionOutcome outcome = ClearAuction(
        Decode(played, graph), beta, PricingRule::kLab, learner.values());
    if (!config.frozen) {
      learner.Observe(played,
                      FeedbackView::Make(config.feedback, outcome, beta));
    }
    AccumulateNodeTotals(beta, graph, learner.values(), totals);
    cum_expected += expected;
    const double comparator = BestFixedActionDp(totals, graph).total;
    trace.rounds.push_back(MakeRecord(outcome, expected, comparator,
                                      cum_expected, config.units, t,
                                      params.epsilon));
  }
}

// Clearing-only run under FRB: the path decomposition is a LAB identity, so
// accounting enumerates every path instead.
void RunFrozenFrb(const RunConfig& config, const LearningParameters& params,
                  const Grid& grid, int replication, RegretTrace& trace) {
  const PseudoGraph graph(config.units, grid);
  const Valuation values(config.values);
  const std::vector<PseudoPath> paths = EnumeratePaths(graph);
  std::vector<BidProfile> profiles;
  for (const PseudoPath& p : paths) profiles.push_back(Decode(p, graph));
  WeightState state(graph);
  BackwardPass(state, graph);
  CounterRng learner_rng = MakeRng(config, replication, kLearnerStream);
  CounterRng adversary_rng = MakeRng(config, replication, kAdversaryStream);
  std::vector<double> path_totals(paths.size(), 0.0);
  double cum_expected = 0.0;
  const double uniform = 1.0 / static_cast<double>(paths.size());
  for (int t = 1; t <= config.horizon; ++t) {
    const BidProfile beta =
        NextBids(config.adversary, config.units, t, adversary_rng, grid);
    double expected = 0.0;
    for (std::size_t i = 0; i < paths.size(); ++i) {
      const double u =
          ClearAuction(profiles[i], beta, PricingRule::kFrb, values).utility;
      expected += uniform * u;
      path_totals[i] += u;
    }
    const PseudoPath played = SamplePath(state, graph, learner_rng);
    const AuctionOutcome outcome =
        ClearAuction(Decode(played, graph), beta, PricingRule::kFrb, values);
    cum_expected += expected;
    const double comparator =
        *std::max_element(path_totals.begin(), path_totals.end());
    trace.rounds.push_back(MakeRecord(outcome, expected, comparator,
                                      cum_expected, config.units, t,
                                      params.epsilon));
  }
}

}  // namespace

void ValidateConfig(const RunConfig& config) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidConfig, what);
  };
  if (config.units < 1) fail("units must be at least 1");
  if (config.horizon < 1) fail("horizon must be at least 1");
  if (config.replications < 1) fail("replications must be at least 1");
  if (config.workers < 1) fail("workers must be at least 1");
  if (config.values.size() != static_cast<std::size_t>(config.units)) {
    fail("expected " + std::to_string(config.units) + " values");
  }
  Valuation(config.values);
  if (config.epsilon && !(*config.epsilon > 0.0 && *config.epsilon <= 1.0)) {
    fail("epsilon must lie in (0, 1]");
  }
  if (config.eta && !(*config.eta > 0.0)) fail("eta must be positive");
  if (config.pricing == PricingRule::kFrb && !config.frozen) {
    fail("FRB pricing is only supported for clearing-only (frozen) runs");
  }
  ResolveParameters(config);
}

LearningParameters ResolveParameters(const RunConfig& config) {
  LearningParameters params;
  if (!config.epsilon || !config.eta) {
    params = DefaultParameters(config.units, config.horizon, config.feedback,
                               config.eta_form);
  }
  if (config.epsilon) {
    params.levels = std::max(
        1, static_cast<int>(std::ceil(1.0 / *config.epsilon - 1e-9)));
    params.epsilon = 1.0 / params.levels;
  }
  if (config.eta) params.eta = *config.eta;
  return params;
}

RegretTrace RunReplication(const RunConfig& config, int replication) {
  const auto start = std::chrono::steady_clock::now();
  const LearningParameters params = ResolveParameters(config);
  const Grid grid = MakeGrid(config, params.levels, replication);
  RegretTrace trace;
  trace.run = replication;
  trace.tie_offset = grid.offset();
  trace.rounds.reserve(config.horizon);
  if (config.pricing == PricingRule::kFrb) {
    RunFrozenFrb(config, params, grid, replication, trace);
  } else {
    RunLearning(config, params, grid, replication, trace);
  }
  trace.final_regret = trace.rounds.back().cum_expected_regret;
  trace.wall_seconds = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return trace;
}

std::vector<RegretTrace> RunExperiment(const RunConfig& config) {
  ValidateConfig(config);
  const int reps = config.replications;
  std::vector<RegretTrace> traces(reps);
  std::vector<std::exception_ptr> errors(reps);
  std::atomic<int> next{0};
  auto work = [&] {
    for (int r = next++; r < reps; r = next++) {
      try {
        traces[r] = RunReplication(config, r);
      } catch (...) {
        errors[r] = std::current_exception();
      }
    }
  };
  const int workers = std::min(config.workers, reps);
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (std::thread& th : pool) th.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return traces;
}

}  // namespace unibid
