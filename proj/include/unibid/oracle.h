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

// Brute-force references for small instances. Everything here enumerates
// paths and clears auctions directly, so it shares no recursion with the
// learner's passes.

#ifndef UNIBID_ORACLE_H_
#define UNIBID_ORACLE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "unibid/auction.h"
#include "unibid/feedback.h"
#include "unibid/learner.h"
#include "unibid/pseudo_space.h"

namespace unibid {

// Totals closer than this are treated as tied; ties go to the
// lexicographically smallest path.
inline constexpr double kComparatorTolerance = 1e-9;

struct BestPath {
  PseudoPath path;
  double total = 0.0;
};

// Maximizes Σ_t u(path, β^t) by clearing every round for every path.
// Throws kTooLarge.
BestPath BestFixedActionExhaustive(std::span<const BidProfile> history,
                                   const PseudoGraph& graph,
                                   const Valuation& values,
                                   std::uint64_t cap = kDefaultEnumerationCap);

// Σ_t w^t(h) for every node, indexed by node index.
std::vector<double> NodeTotals(std::span<const BidProfile> history,
                               const PseudoGraph& graph,
                               const Valuation& values);

// Adds one round's sub-utilities to running totals.
void AccumulateNodeTotals(const BidProfile& adversary, const PseudoGraph& graph,
                          const Valuation& values, std::vector<double>& totals);

// Max-weight source-to-sink path for per-node totals indexed by node index.
BestPath BestFixedActionDp(std::span<const double> node_totals,
                           const PseudoGraph& graph);

struct PathProbabilityEntry {
  PseudoPath path;
  double probability = 0.0;
};

// P(path) = Π W̃ / Σ_paths Π W̃ from the log weights alone, in lexicographic
// path order. Throws kTooLarge.
std::vector<PathProbabilityEntry> ExactPathDistribution(
    const WeightState& state, const PseudoGraph& graph,
    std::uint64_t cap = kDefaultEnumerationCap);

struct EstimatorMoments {
  PseudoPath path;
  int allocation = 0;
  double utility = 0.0;       // u(path, β) under LAB
  double probability = 0.0;   // sampling probability of the path
  double mean = 0.0;          // E[Σ_{h ∈ path} v(h)] over the played path
  double second_moment = 0.0; // E[(Σ_{h ∈ path} v(h))²]
};

struct EstimatorExpectation {
  std::vector<EstimatorMoments> paths;
  // Σ_path P(path) E[(Σ_{h ∈ path} v(h))²].
  double weighted_second_moment = 0.0;
};

// Exact moments of the estimated path utilities produced by the learner's
// signal for `mode`, averaging over every played path of the sampling
// distribution. Requires both passes. Throws kTooLarge.
EstimatorExpectation ExactEstimatorExpectation(
    const WeightState& state, const BidProfile& adversary,
    const Valuation& values, const PseudoGraph& graph, FeedbackMode mode,
    std::uint64_t cap = kDefaultEnumerationCap);

// P(node fires and lies in the observed set of the played outcome), summing
// enumerated path probabilities and clearing each played profile.
double ObservationProbabilityByEnumeration(
    const PseudoNode& node, const WeightState& state,
    const BidProfile& adversary, const PseudoGraph& graph,
    std::uint64_t cap = kDefaultEnumerationCap);

// Expected utility of exact Hedge over enumerated paths for each round,
// with P^t(path) ∝ exp(η Σ_{n<t} u^n(path)).
std::vector<double> ExactHedgeExpectedUtilities(
    std::span<const BidProfile> history, const PseudoGraph& graph,
    const Valuation& values, double eta,
    std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace unibid

#endif  // UNIBID_ORACLE_H_
