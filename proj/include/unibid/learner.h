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

// Component-based exponential weights over the pseudo-bid DAG. Each node
// carries a weight; a path is played with probability proportional to the
// product of its node weights, which the weight-pushing sampler realizes
// exactly from the backward accumulators Γ. All quantities are kept in the
// log domain.

#ifndef UNIBID_LEARNER_H_
#define UNIBID_LEARNER_H_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "unibid/auction.h"
#include "unibid/feedback.h"
#include "unibid/pseudo_space.h"
#include "unibid/rng.h"

namespace unibid {

struct WeightState {
  explicit WeightState(const PseudoGraph& graph);

  std::vector<double> log_weight;    // log W̃(h), starts at 0
  std::vector<double> log_backward;  // log Γ(h)
  std::vector<double> log_forward;   // log F(h)
  double log_gamma0 = 0.0;           // log Γ_0
  int round = 0;
};

// Sparse per-node signal fed to the weight update, keyed by node index.
class EstimateVector {
 public:
  void Set(int node_index, double value);
  double At(int node_index) const;
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  std::span<const std::pair<int, double>> entries() const { return entries_; }
  // Σ over the given node indices.
  double Sum(std::span<const int> node_indices) const;

 private:
  std::vector<std::pair<int, double>> entries_;  // sorted by index
};

// Γ(h) = Σ_{h' ∈ s(h)} W̃(h') Γ(h'), with Γ = 1 on k = K bid nodes.
void BackwardPass(WeightState& state, const PseudoGraph& graph);

// F(h) = W̃(h) Σ_{h' : h ∈ s(h')} F(h'), with F = W̃ on k = 1 bid nodes.
void ForwardPass(WeightState& state, const PseudoGraph& graph);

// Probability that the sampled path contains the node: F(h) Γ(h) / Γ_0.
double NodeMarginal(const WeightState& state, int node_index);

// Draws a path node by node: start h(1, j) with probability W̃ Γ / Γ_0, then
// each successor h' of h with probability W̃(h') Γ(h') / Γ(h). Requires a
// fresh backward pass.
PseudoPath SamplePath(const WeightState& state, const PseudoGraph& graph,
                      CounterRng& rng);

// Product of the sampler's conditional probabilities along the path.
double PathProbability(const WeightState& state, const PseudoGraph& graph,
                       const PseudoPath& path);

// True sub-utility of every node that fires, from a full-information view.
EstimateVector FullInfoSignal(const FeedbackView& view,
                              const Valuation& values,
                              const PseudoGraph& graph);

// The node of the played path that fired, deduced from the allocation and
// price alone; nullopt when nothing was won.
std::optional<PseudoNode> FiringNodeFromFeedback(const PseudoPath& played,
                                                 const FeedbackView& view,
                                                 const Grid& grid);

// Importance-weighted estimate (w - K) / P(h) at the fired node only.
// Empty when nothing was won. Throws kZeroMarginal.
EstimateVector BanditSignal(const std::optional<PseudoNode>& fired,
                            const FeedbackView& view,
                            const WeightState& state, const Valuation& values,
                            const PseudoGraph& graph);

// Probability, over the current sampling distribution, that `node` fires and
// is revealed by the all-winner feedback of the sampled round. Only evaluated
// for nodes the view determines and that fire; every outcome class that
// could hide the node is itself determined by the view.
double ObservationProbability(const PseudoNode& node, const WeightState& state,
                              const FeedbackView& view,
                              const PseudoGraph& graph);

// (w - K) / P(observed) at every node that fires and is revealed.
// Throws kZeroObservationProbability.
EstimateVector AllWinnerSignal(const FeedbackView& view,
                               const WeightState& state,
                               const Valuation& values,
                               const PseudoGraph& graph);

// W̃(h) <- W̃(h) exp(η v(h)).
void UpdateWeights(WeightState& state, const EstimateVector& signal,
                   double eta);

enum class EtaForm { kHorizon, kGrid };

struct LearningParameters {
  int levels = 1;  // 1/ε
  double epsilon = 1.0;
  double eta = 0.0;
};

// Horizon-tuned discretization and learning rate for each feedback model.
// 1/ε is rounded up to an integer. Throws kHorizonTooShort unless T > K.
LearningParameters DefaultParameters(int units, int horizon, FeedbackMode mode,
                                     EtaForm form = EtaForm::kHorizon);

// Exact expected utility of the current sampling distribution against a
// known adversary: Σ over firing nodes of marginal × sub-utility. Requires
// both passes.
double ExpectedUtility(const WeightState& state, const BidProfile& adversary,
                       const Valuation& values, const PseudoGraph& graph);

// Owns the graph and weights of one learning run.
class Learner {
 public:
  Learner(int units, Valuation values, FeedbackMode mode, Grid grid,
          double eta);

  const PseudoGraph& graph() const { return graph_; }
  const WeightState& state() const { return state_; }
  const Valuation& values() const { return values_; }
  FeedbackMode mode() const { return mode_; }
  double eta() const { return eta_; }

  // Refreshes both passes for the current weights.
  void Prepare();
  PseudoPath Sample(CounterRng& rng) const;
  // Builds the mode's signal from the view and applies the update.
  EstimateVector Observe(const PseudoPath& played, const FeedbackView& view);

 private:
  PseudoGraph graph_;
  WeightState state_;
  Valuation values_;
  FeedbackMode mode_;
  double eta_;
  bool prepared_ = false;
};

}  // namespace unibid

#endif  // UNIBID_LEARNER_H_
