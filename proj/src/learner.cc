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

#include "unibid/learner.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "unibid/error.h"

namespace unibid {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double LogAddExp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// Index into `options` drawn with probability proportional to
// exp(log_mass(option) - log_total).
template <typename LogMass>
int Pick(std::span<const int> options, LogMass log_mass, double log_total,
         CounterRng& rng) {
  double total = 0.0;
  for (int o : options) total += std::exp(log_mass(o) - log_total);
  const double target = rng.Uniform01() * total;
  double cumulative = 0.0;
  for (int o : options) {
    cumulative += std::exp(log_mass(o) - log_total);
    if (target < cumulative) return o;
  }
  return options.back();
}

struct FiredNode {
  int index;
  PseudoNode node;
  double price;
  double marginal;
};

std::vector<FiredNode> FiredAmongDetermined(const WeightState& state,
                                            const FeedbackView& view,
                                            const PseudoGraph& graph) {
  std::vector<FiredNode> fired;
  for (int idx = 0; idx < graph.node_count(); ++idx) {
    const PseudoNode h = graph.node(idx);
    if (!view.Determines(h, graph.grid())) continue;
    if (const auto price = view.FiredPrice(h, graph.grid())) {
      fired.push_back({idx, h, *price, NodeMarginal(state, idx)});
    }
  }
  return fired;
}

// 1 - mass of the outcome classes under which `target` stays hidden.
double RevealProbability(const FiredNode& target,
                         std::span<const FiredNode> fired, const Grid& grid) {
  double hidden = 0.0;
  for (const FiredNode& o : fired) {
    if (!InObservedSet(target.node, o.node.unit(), o.price, grid)) {
      hidden += o.marginal;
    }
  }
  // The target is revealed whenever it is itself the firing node.
  return std::max(1.0 - hidden, target.marginal);
}

int CeilLevels(double inverse_epsilon) {
  return std::max(1, static_cast<int>(std::ceil(inverse_epsilon - 1e-9)));
}

}  // namespace

WeightState::WeightState(const PseudoGraph& graph)
    : log_weight(graph.node_count(), 0.0),
      log_backward(graph.node_count(), 0.0),
      log_forward(graph.node_count(), 0.0) {}

void EstimateVector::Set(int node_index, double value) {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), node_index,
      [](const auto& entry, int idx) { return entry.first < idx; });
  if (it != entries_.end() && it->first == node_index) {
    it->second = value;
  } else {
    entries_.insert(it, {node_index, value});
  }
}

double EstimateVector::At(int node_index) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), node_index,
      [](const auto& entry, int idx) { return entry.first < idx; });
  return it != entries_.end() && it->first == node_index ? it->second : 0.0;
}

double EstimateVector::Sum(std::span<const int> node_indices) const {
  double total = 0.0;
  for (int idx : node_indices) total += At(idx);
  return total;
}

void BackwardPass(WeightState& state, const PseudoGraph& graph) {
  for (int idx = graph.node_count() - 1; idx >= 0; --idx) {
    if (graph.IsTerminal(idx)) {
      state.log_backward[idx] = 0.0;
      continue;
    }
    double acc = kNegInf;
    for (int s : graph.Successors(idx)) {
      acc = LogAddExp(acc, state.log_weight[s] + state.log_backward[s]);
    }
    state.log_backward[idx] = acc;
  }
  double acc = kNegInf;
  for (int s : graph.StartNodes()) {
    acc = LogAddExp(acc, state.log_weight[s] + state.log_backward[s]);
  }
  state.log_gamma0 = acc;
}

void ForwardPass(WeightState& state, const PseudoGraph& graph) {
  for (int idx = 0; idx < graph.node_count(); ++idx) {
    const auto preds = graph.Predecessors(idx);
    if (preds.empty()) {
      // Only k = 1 bid nodes lack predecessors.
      state.log_forward[idx] = state.log_weight[idx];
      continue;
    }
    double acc = kNegInf;
    for (int p : preds) acc = LogAddExp(acc, state.log_forward[p]);
    state.log_forward[idx] = state.log_weight[idx] + acc;
  }
}

double NodeMarginal(const WeightState& state, int node_index) {
  return std::exp(state.log_forward[node_index] +
                  state.log_backward[node_index] - state.log_gamma0);
}

PseudoPath SamplePath(const WeightState& state, const PseudoGraph& graph,
                      CounterRng& rng) {
  auto log_mass = [&](int idx) {
    return state.log_weight[idx] + state.log_backward[idx];
  };
  PseudoPath path;
  int current = Pick(graph.StartNodes(), log_mass, state.log_gamma0, rng);
  path.nodes.push_back(graph.node(current));
  while (!graph.IsTerminal(current)) {
    current = Pick(graph.Successors(current), log_mass,
                   state.log_backward[current], rng);
    path.nodes.push_back(graph.node(current));
  }
  return path;
}

double PathProbability(const WeightState& state, const PseudoGraph& graph,
                       const PseudoPath& path) {
  const std::vector<int> idx = PathIndices(path, graph);
  double log_p = 0.0;
  double log_parent = state.log_gamma0;
  for (int i : idx) {
    log_p += state.log_weight[i] + state.log_backward[i] - log_parent;
    log_parent = state.log_backward[i];
  }
  return std::exp(log_p);
}

EstimateVector FullInfoSignal(const FeedbackView& view,
                              const Valuation& values,
                              const PseudoGraph& graph) {
  EstimateVector signal;
  for (int idx = 0; idx < graph.node_count(); ++idx) {
    const PseudoNode h = graph.node(idx);
    if (const auto price = view.FiredPrice(h, graph.grid())) {
      signal.Set(idx, Surplus(values, h.unit(), *price));
    }
  }
  return signal;
}

std::optional<PseudoNode> FiringNodeFromFeedback(const PseudoPath& played,
                                                 const FeedbackView& view,
                                                 const Grid& grid) {
  if (view.allocation() == 0) return std::nullopt;
  const double price = *view.price();
  for (const PseudoNode& h : played.nodes) {
    if (h.unit() != view.allocation()) continue;
    if (h.is_bid() ? grid.Value(h.level) == price
                   : grid.Value(h.level) < price &&
                         price < grid.Value(h.level + 1)) {
      return h;
    }
  }
  throw Error(ErrorCode::kInternal,
              "no node of the played path matches the observed outcome");
}

EstimateVector BanditSignal(const std::optional<PseudoNode>& fired,
                            const FeedbackView& view,
                            const WeightState& state, const Valuation& values,
                            const PseudoGraph& graph) {
  EstimateVector signal;
  if (!fired) return signal;
  const int idx = graph.IndexOf(*fired);
  const double marginal = NodeMarginal(state, idx);
  if (!(marginal > 0.0)) {
    throw Error(ErrorCode::kZeroMarginal,
                "fired node " + ToString(*fired) + " has zero marginal");
  }
  const double w = Surplus(values, view.allocation(), *view.price());
  signal.Set(idx, (w - graph.units()) / marginal);
  return signal;
}

double ObservationProbability(const PseudoNode& node, const WeightState& state,
                              const FeedbackView& view,
                              const PseudoGraph& graph) {
  if (!view.Determines(node, graph.grid())) {
    throw Error(ErrorCode::kInternal,
                "feedback does not determine node " + ToString(node));
  }
  const auto fired = FiredAmongDetermined(state, view, graph);
  for (const FiredNode& f : fired) {
    if (f.node == node) return RevealProbability(f, fired, graph.grid());
  }
  return 0.0;
}

EstimateVector AllWinnerSignal(const FeedbackView& view,
                               const WeightState& state,
                               const Valuation& values,
                               const PseudoGraph& graph) {
  EstimateVector signal;
  const auto fired = FiredAmongDetermined(state, view, graph);
  for (const FiredNode& f : fired) {
    const double reveal = RevealProbability(f, fired, graph.grid());
    if (!(reveal > 0.0)) {
      throw Error(ErrorCode::kZeroObservationProbability,
                  "node " + ToString(f.node) + " is never revealed");
    }
    const double w = Surplus(values, f.node.unit(), f.price);
    signal.Set(f.index, (w - graph.units()) / reveal);
  }
  return signal;
}

void UpdateWeights(WeightState& state, const EstimateVector& signal,
                   double eta) {
  for (const auto& [idx, value] : signal.entries()) {
    state.log_weight[idx] += eta * value;
  }
  ++state.round;
}

LearningParameters DefaultParameters(int units, int horizon, FeedbackMode mode,
                                     EtaForm form) {
  if (units < 1 || horizon <= units) {
    throw Error(ErrorCode::kHorizonTooShort,
                "need T > K, got T = " + std::to_string(horizon) +
                    ", K = " + std::to_string(units));
  }
  const double k = units;
  const double t = horizon;
  LearningParameters params;
  switch (mode) {
    case FeedbackMode::kBandit:
      params.levels = CeilLevels(std::cbrt(t / k));
      params.epsilon = 1.0 / params.levels;
      params.eta = form == EtaForm::kHorizon
                       ? std::pow(k, -1.0 / 3.0) * std::pow(t, -2.0 / 3.0) *
                             std::sqrt(std::log(t / k) / 3.0)
                       : std::sqrt(params.epsilon *
                                   std::log(1.0 / params.epsilon) / (k * t));
      break;
    case FeedbackMode::kFullInformation:
      params.levels = CeilLevels(std::sqrt(t / k));
      params.epsilon = 1.0 / params.levels;
      params.eta =
          form == EtaForm::kHorizon
              ? std::sqrt(std::log(t / k) / (2.0 * k * t))
              : std::sqrt(std::log(1.0 / params.epsilon) / (k * t));
      break;
    case FeedbackMode::kAllWinner:
      params.levels = CeilLevels(std::sqrt(t / (k * k * k)));
      params.epsilon = 1.0 / params.levels;
      params.eta = 1.0 / (k * std::sqrt(t));
      break;
  }
  if (!(params.eta > 0.0)) {
    throw Error(ErrorCode::kHorizonTooShort,
                "learning rate vanishes for T = " + std::to_string(horizon));
  }
  return params;
}

double ExpectedUtility(const WeightState& state, const BidProfile& adversary,
                       const Valuation& values, const PseudoGraph& graph) {
  double total = 0.0;
  for (int idx = 0; idx < graph.node_count(); ++idx) {
    const PseudoNode h = graph.node(idx);
    if (const auto price = NodeFires(h, adversary, graph.grid())) {
      total += NodeMarginal(state, idx) * Surplus(values, h.unit(), *price);
    }
  }
  return total;
}

Learner::Learner(int units, Valuation values, FeedbackMode mode, Grid grid,
                 double eta)
    : graph_(units, grid),
      state_(graph_),
      values_(std::move(values)),
      mode_(mode),
      eta_(eta) {
  if (values_.size() != static_cast<std::size_t>(units)) {
    throw Error(ErrorCode::kWrongLength, "valuation length differs from K");
  }
  if (!(eta > 0.0)) {
    throw Error(ErrorCode::kInvalidConfig, "learning rate must be positive");
  }
}

void Learner::Prepare() {
  BackwardPass(state_, graph_);
  ForwardPass(state_, graph_);
  prepared_ = true;
}

PseudoPath Learner::Sample(CounterRng& rng) const {
  if (!prepared_) {
    throw Error(ErrorCode::kInternal, "Sample() before Prepare()");
  }
  return SamplePath(state_, graph_, rng);
}

EstimateVector Learner::Observe(const PseudoPath& played,
                                const FeedbackView& view) {
  if (!prepared_) {
    throw Error(ErrorCode::kInternal, "Observe() before Prepare()");
  }
  EstimateVector signal;
  switch (mode_) {
    case FeedbackMode::kFullInformation:
      signal = FullInfoSignal(view, values_, graph_);
      break;
    case FeedbackMode::kBandit:
      signal = BanditSignal(
          FiringNodeFromFeedback(played, view, graph_.grid()), view, state_,
          values_, graph_);
      break;
    case FeedbackMode::kAllWinner:
      signal = AllWinnerSignal(view, state_, values_, graph_);
      break;
  }
  UpdateWeights(state_, signal, eta_);
  prepared_ = false;
  return signal;
}

}  // namespace unibid
