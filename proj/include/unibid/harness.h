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

// Repeated-auction experiments: one learner against one adversary per
// replication, with exact expected-utility accounting and regret against the
// best fixed grid profile in hindsight.

#ifndef UNIBID_HARNESS_H_
#define UNIBID_HARNESS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unibid/adversary.h"
#include "unibid/auction.h"
#include "unibid/feedback.h"
#include "unibid/learner.h"

namespace unibid {

enum class TieMode { kValidate, kPerturb };
enum class PlotScale { kLinear, kLogLog };

struct RunConfig {
  int units = 1;
  int horizon = 0;
  FeedbackMode feedback = FeedbackMode::kBandit;
  PricingRule pricing = PricingRule::kLab;
  std::vector<double> values;
  std::optional<double> epsilon;
  std::optional<double> eta;
  EtaForm eta_form = EtaForm::kHorizon;
  AdversarySpec adversary;
  std::uint64_t seed = 0;
  int replications = 1;
  int workers = 1;
  TieMode tie_mode = TieMode::kValidate;
  // Play the initial uniform distribution throughout without learning. The
  // only mode that accepts FRB pricing.
  bool frozen = false;
  std::string csv_path;
  std::string svg_path;
  PlotScale scale = PlotScale::kLinear;
};

// Throws kInvalidConfig (or kHorizonTooShort when defaults are needed and
// T <= K).
void ValidateConfig(const RunConfig& config);

// Grid size and learning rate after applying defaults and overrides. An
// ε override is rounded to the grid 1/ceil(1/ε).
LearningParameters ResolveParameters(const RunConfig& config);

struct RoundRecord {
  double realized_utility = 0.0;
  double expected_utility = 0.0;
  double cum_expected_regret = 0.0;
  double discretization_bound = 0.0;
  double price = 0.0;
  int allocation = 0;
};

struct RegretTrace {
  int run = 0;
  double tie_offset = 0.0;
  std::vector<RoundRecord> rounds;
  double final_regret = 0.0;
  double wall_seconds = 0.0;  // not part of any deterministic output
};

// One replication. Deterministic given (config, replication).
RegretTrace RunReplication(const RunConfig& config, int replication);

// All replications, spread over `config.workers` threads and returned in
// replication order.
std::vector<RegretTrace> RunExperiment(const RunConfig& config);

}  // namespace unibid

#endif  // UNIBID_HARNESS_H_
