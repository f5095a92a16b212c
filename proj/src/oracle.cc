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

#include "unibid/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "unibid/error.h"

namespace unibid {
namespace {

struct EnumeratedPath {
  PseudoPath path;
  std::vector<int> indices;
  BidProfile bids;
};

std::vector<EnumeratedPath> Enumerate(const PseudoGraph& graph,
                                      std::uint64_t cap) {
  std::vector<EnumeratedPath> out;
  ForEachPath(
      graph,
      [&](const PseudoPath& p) {
        out.push_back({p, PathIndices(p, graph), Decode(p, graph)});
      },
      cap);
  return out;
}

// Normalized exp(log_mass) with the maximum factored out.
std::vector<double> Normalize(const std::vector<double>& log_mass) {
  const double hi = *std::max_element(log_mass.begin(), log_mass.end());
  std::vector<double> p(log_mass.size());
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = std::exp(log_mass[i] - hi);
    total += p[i];
  }
  for (double& x : p) x /= total;
  return p;
}

std::vector<double> PathProbabilities(const WeightState& state,
                                      const std::vector<EnumeratedPath>& paths) {
  std::vector<double> log_mass;
  log_mass.reserve(paths.size());
  for (const EnumeratedPath& e : paths) {
    double s = 0.0;
    for (int idx : e.indices) s += state.log_weight[idx];
    log_mass.push_back(s);
  }
  return Normalize(log_mass);
}

}  // namespace

BestPath BestFixedActionExhaustive(std::span<const BidProfile> history,
                                   const PseudoGraph& graph,
                                   const Valuation& values,
                                   std::uint64_t cap) {
  const std::vector<EnumeratedPath> paths = Enumerate(graph, cap);
  std::vector<double> totals(paths.size(), 0.0);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (const BidProfile& beta : history) {
      totals[i] +=
          ClearAuction(paths[i].bids, beta, PricingRule::kLab, values).utility;
    }
  }
  const double best = *std::max_element(totals.begin(), totals.end());
  // Enumeration order is lexicographic, so the first near-optimal path wins.
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (totals[i] >= best - kComparatorTolerance) {
      return {paths[i].path, totals[i]};
    }
  }
  throw Error(ErrorCode::kInternal, "no optimal path found");
}

void AccumulateNodeTotals(const BidProfile& adversary, const PseudoGraph& graph,
                          const Valuation& values,
                          std::vector<double>& totals) {
  totals.resize(graph.node_count(), 0.0);
  for (int idx = 0; idx < graph.node_count(); ++idx) {
    const PseudoNode h = graph.node(idx);
    if (const auto price = NodeFires(h, adversary, graph.grid())) {
      totals[idx] += Surplus(values, h.unit(), *price);
    }
  }
}

std::vector<double> NodeTotals(std::span<const BidProfile> history,
                               const PseudoGraph& graph,
                               const Valuation& values) {
  std::vector<double> totals(graph.node_count(), 0.0);
  for (const BidProfile& beta : history) {
    AccumulateNodeTotals(beta, graph, values, totals);
  }
  return totals;
}

BestPath BestFixedActionDp(std::span<const double> node_totals,
                           const PseudoGraph& graph) {
  if (node_totals.size() != static_cast<std::size_t>(graph.node_count())) {
    throw Error(ErrorCode::kWrongLength, "one total per node expected");
  }
  // suffix[h]: best total of a path segment starting at h.
  std::vector<double> suffix(graph.node_count());
  for (int idx = graph.node_count() - 1; idx >= 0; --idx) {
    double tail = 0.0;
    if (!graph.IsTerminal(idx)) {
      tail = -std::numeric_limits<double>::infinity();
      for (int s : graph.Successors(idx)) tail = std::max(tail, suffix[s]);
    }
    suffix[idx] = node_totals[idx] + tail;
  }
  double best = -std::numeric_limits<double>::infinity();
  for (int s : graph.StartNodes()) best = std::max(best, suffix[s]);

  // Walk forward taking the lexicographically first node that can still
  // complete a near-optimal path. Successor lists are in node order.
  BestPath out;
  double prefix = 0.0;
  std::span<const int> options = graph.StartNodes();
  while (true) {
    int chosen = -1;
    for (int s : options) {
      if (prefix + suffix[s] >= best - kComparatorTolerance) {
        chosen = s;
        break;
      }
    }
    if (chosen < 0) {
      throw Error(ErrorCode::kInternal, "dynamic program lost its path");
    }
    prefix += node_totals[chosen];
    out.path.nodes.push_back(graph.node(chosen));
    if (graph.IsTerminal(chosen)) break;
    options = graph.Successors(chosen);
  }
  out.total = prefix;
  return out;
}

std::vector<PathProbabilityEntry> ExactPathDistribution(
    const WeightState& state, const PseudoGraph& graph, std::uint64_t cap) {
  const std::vector<EnumeratedPath> paths = Enumerate(graph, cap);
  const std::vector<double> p = PathProbabilities(state, paths);
  std::vector<PathProbabilityEntry> out;
  out.reserve(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    out.push_back({paths[i].path, p[i]});
  }
  return out;
}

EstimatorExpectation ExactEstimatorExpectation(
    const WeightState& state, const BidProfile& adversary,
    const Valuation& values, const PseudoGraph& graph, FeedbackMode mode,
    std::uint64_t cap) {
  const std::vector<EnumeratedPath> paths = Enumerate(graph, cap);
  const std::vector<double> p = PathProbabilities(state, paths);

  EstimatorExpectation out;
  out.paths.resize(paths.size());
  for (std::size_t c = 0; c < paths.size(); ++c) {
    const AuctionOutcome outcome =
        ClearAuction(paths[c].bids, adversary, PricingRule::kLab, values);
    out.paths[c].path = paths[c].path;
    out.paths[c].allocation = outcome.allocation;
    out.paths[c].utility = outcome.utility;
    out.paths[c].probability = p[c];
  }

  for (std::size_t l = 0; l < paths.size(); ++l) {
    const AuctionOutcome outcome =
        ClearAuction(paths[l].bids, adversary, PricingRule::kLab, values);
    const FeedbackView view = FeedbackView::Make(mode, outcome, adversary);
    EstimateVector signal;
    switch (mode) {
      case FeedbackMode::kFullInformation:
        signal = FullInfoSignal(view, values, graph);
        break;
      case FeedbackMode::kBandit:
        signal = BanditSignal(
            FiringNodeFromFeedback(paths[l].path, view, graph.grid()), view,
            state, values, graph);
        break;
      case FeedbackMode::kAllWinner:
        signal = AllWinnerSignal(view, state, values, graph);
        break;
    }
    for (std::size_t c = 0; c < paths.size(); ++c) {
      const double estimate = signal.Sum(paths[c].indices);
      out.paths[c].mean += p[l] * estimate;
      out.paths[c].second_moment += p[l] * estimate * estimate;
    }
  }
  for (const EstimatorMoments& m : out.paths) {
    out.weighted_second_moment += m.probability * m.second_moment;
  }
  return out;
}

double ObservationProbabilityByEnumeration(const PseudoNode& node,
                                           const WeightState& state,
                                           const BidProfile& adversary,
                                           const PseudoGraph& graph,
                                           std::uint64_t cap) {
  if (!NodeFires(node, adversary, graph.grid())) return 0.0;
  const std::vector<EnumeratedPath> paths = Enumerate(graph, cap);
  const std::vector<double> p = PathProbabilities(state, paths);
  // Values only matter for utility, which is not used here.
  const Valuation values(std::vector<double>(graph.units(), 1.0));
  double total = 0.0;
  for (std::size_t l = 0; l < paths.size(); ++l) {
    const AuctionOutcome outcome =
        ClearAuction(paths[l].bids, adversary, PricingRule::kLab, values);
    if (InObservedSet(node, outcome, graph.grid())) total += p[l];
  }
  return total;
}

std::vector<double> ExactHedgeExpectedUtilities(
    std::span<const BidProfile> history, const PseudoGraph& graph,
    const Valuation& values, double eta, std::uint64_t cap) {
  const std::vector<EnumeratedPath> paths = Enumerate(graph, cap);
  std::vector<double> log_mass(paths.size(), 0.0);
  std::vector<double> out;
  out.reserve(history.size());
  for (const BidProfile& beta : history) {
    const std::vector<double> p = Normalize(log_mass);
    double expected = 0.0;
    for (std::size_t i = 0; i < paths.size(); ++i) {
      const double u =
          ClearAuction(paths[i].bids, beta, PricingRule::kLab, values).utility;
      expected += p[i] * u;
      log_mass[i] += eta * u;
    }
    out.push_back(expected);
  }
  return out;
}

}  // namespace unibid
