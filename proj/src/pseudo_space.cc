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

#include "unibid/pseudo_space.h"

#include <algorithm>
#include <string>

#include "unibid/error.h"

namespace unibid {

bool operator<(const PseudoNode& a, const PseudoNode& b) {
  if (a.k2 != b.k2) return a.k2 < b.k2;
  return a.level > b.level;
}

std::string ToString(const PseudoNode& node) {
  std::string k = std::to_string(node.unit());
  if (!node.is_bid()) k += ".5";
  return "h(" + k + "," + std::to_string(node.level) + ")";
}

bool operator<(const PseudoPath& a, const PseudoPath& b) {
  return std::lexicographical_compare(a.nodes.begin(), a.nodes.end(),
                                      b.nodes.begin(), b.nodes.end());
}

std::string ToString(const PseudoPath& path) {
  std::string out = "(";
  for (std::size_t i = 0; i < path.nodes.size(); ++i) {
    if (i > 0) out += ", ";
    out += ToString(path.nodes[i]);
  }
  return out + ")";
}

PseudoGraph::PseudoGraph(int units, Grid grid)
    : units_(units), grid_(grid) {
  if (units < 1) {
    throw Error(ErrorCode::kOutOfRange, "need at least one unit");
  }
  layer_offset_.assign(2 * units_ + 2, 0);
  for (int k2 = 2; k2 <= 2 * units_; ++k2) {
    layer_offset_[k2] = static_cast<int>(nodes_.size());
    const int size = LayerSize(k2);
    for (int i = 0; i < size; ++i) {
      nodes_.push_back(PseudoNode{k2, size - 1 - i});
    }
  }
  layer_offset_[2 * units_ + 1] = static_cast<int>(nodes_.size());

  const int n = node_count();
  std::vector<std::vector<int>> succ(n), pred(n);
  for (int idx = 0; idx < n; ++idx) {
    const PseudoNode h = nodes_[idx];
    if (h.k2 == 2 * units_) continue;
    const int next_bid_k2 = h.is_bid() ? h.k2 + 2 : h.k2 + 1;
    if (h.level >= 1) {
      const int gap_k2 = h.is_bid() ? h.k2 + 1 : h.k2;
      succ[idx].push_back(IndexOf(PseudoNode{gap_k2, h.level - 1}));
    }
    succ[idx].push_back(IndexOf(PseudoNode{next_bid_k2, h.level}));
    for (int s : succ[idx]) pred[s].push_back(idx);
  }
  auto flatten = [](const std::vector<std::vector<int>>& lists,
                    std::vector<int>& offsets, std::vector<int>& flat) {
    offsets.assign(1, 0);
    for (const auto& list : lists) {
      flat.insert(flat.end(), list.begin(), list.end());
      offsets.push_back(static_cast<int>(flat.size()));
    }
  };
  for (auto& list : pred) std::sort(list.begin(), list.end());
  flatten(succ, succ_offset_, succ_);
  flatten(pred, pred_offset_, pred_);
  for (int i = 0; i < LayerSize(2); ++i) starts_.push_back(i);
}

int PseudoGraph::LayerSize(int k2) const {
  return k2 % 2 == 0 ? grid_.levels() + 1 : grid_.levels();
}

int PseudoGraph::IndexOf(const PseudoNode& node) const {
  if (node.k2 < 2 || node.k2 > 2 * units_) return -1;
  const int size = LayerSize(node.k2);
  if (node.level < 0 || node.level >= size) return -1;
  return layer_offset_[node.k2] + (size - 1 - node.level);
}

std::span<const int> PseudoGraph::Successors(int index) const {
  return std::span<const int>(succ_).subspan(
      succ_offset_[index], succ_offset_[index + 1] - succ_offset_[index]);
}

std::span<const int> PseudoGraph::Predecessors(int index) const {
  return std::span<const int>(pred_).subspan(
      pred_offset_[index], pred_offset_[index + 1] - pred_offset_[index]);
}

double PseudoGraph::PathCount() const {
  std::vector<double> count(nodes_.size(), 0.0);
  for (int idx = node_count() - 1; idx >= 0; --idx) {
    if (IsTerminal(idx)) {
      count[idx] = 1.0;
      continue;
    }
    for (int s : Successors(idx)) count[idx] += count[s];
  }
  double total = 0.0;
  for (int s : starts_) total += count[s];
  return total;
}

std::vector<int> PathIndices(const PseudoPath& path, const PseudoGraph& graph) {
  std::vector<int> out;
  out.reserve(path.nodes.size());
  for (const PseudoNode& h : path.nodes) {
    const int idx = graph.IndexOf(h);
    if (idx < 0) {
      throw Error(ErrorCode::kMalformedPath,
                  "node " + ToString(h) + " is not in the graph");
    }
    out.push_back(idx);
  }
  return out;
}

PseudoPath Encode(const BidProfile& bids, const PseudoGraph& graph) {
  const int units = graph.units();
  if (bids.size() != static_cast<std::size_t>(units)) {
    throw Error(ErrorCode::kWrongLength, "profile length differs from K");
  }
  std::vector<int> levels(units);
  for (int k = 0; k < units; ++k) {
    const auto level = graph.grid().LevelOf(bids[k]);
    if (!level) {
      throw Error(ErrorCode::kOffGrid,
                  "bid " + std::to_string(bids[k]) + " is not a grid level");
    }
    levels[k] = *level;
  }
  PseudoPath path;
  for (int k = 1; k <= units; ++k) {
    path.nodes.push_back(PseudoNode{2 * k, levels[k - 1]});
    if (k == units) break;
    for (int j = levels[k - 1] - 1; j >= levels[k]; --j) {
      path.nodes.push_back(PseudoNode{2 * k + 1, j});
    }
  }
  return path;
}

BidProfile Decode(const PseudoPath& path, const PseudoGraph& graph) {
  if (path.nodes.empty()) {
    throw Error(ErrorCode::kMalformedPath, "empty path");
  }
  const std::vector<int> idx = PathIndices(path, graph);
  if (path.nodes.front().k2 != 2) {
    throw Error(ErrorCode::kMalformedPath, "path must start at a k = 1 bid");
  }
  for (std::size_t i = 1; i < idx.size(); ++i) {
    const auto succ = graph.Successors(idx[i - 1]);
    if (std::find(succ.begin(), succ.end(), idx[i]) == succ.end()) {
      throw Error(ErrorCode::kMalformedPath,
                  ToString(path.nodes[i]) + " does not follow " +
                      ToString(path.nodes[i - 1]));
    }
  }
  if (!graph.IsTerminal(idx.back())) {
    throw Error(ErrorCode::kMalformedPath, "path must end at a k = K bid");
  }
  std::vector<double> bids;
  for (const PseudoNode& h : path.nodes) {
    if (h.is_bid()) bids.push_back(graph.grid().Value(h.level));
  }
  return ValidateBidProfile(bids, graph.units(), graph.grid());
}

namespace {

// β_i with 1-based i and the boundary sentinels.
double AdversaryAt(const BidProfile& adversary, int i) {
  if (i <= 0) return 2.0;
  if (i > static_cast<int>(adversary.size())) return -1.0;
  return adversary[i - 1];
}

}  // namespace

std::optional<double> NodeFires(const PseudoNode& node,
                                const BidProfile& adversary,
                                const Grid& grid) {
  const int units = static_cast<int>(adversary.size());
  const int k = node.unit();
  if (node.is_bid()) {
    const double price = grid.Value(node.level);
    if (AdversaryAt(adversary, units - k) > price &&
        price > AdversaryAt(adversary, units - k + 1)) {
      return price;
    }
    return std::nullopt;
  }
  const double beta = AdversaryAt(adversary, units - k);
  if (grid.Value(node.level) < beta && beta < grid.Value(node.level + 1)) {
    return beta;
  }
  return std::nullopt;
}

double SubUtility(const PseudoNode& node, const BidProfile& adversary,
                  const Valuation& values, const Grid& grid) {
  const auto price = NodeFires(node, adversary, grid);
  return price ? Surplus(values, node.unit(), *price) : 0.0;
}

double PathUtility(const PseudoPath& path, const BidProfile& adversary,
                   const Valuation& values, const Grid& grid) {
  double total = 0.0;
  for (const PseudoNode& h : path.nodes) {
    total += SubUtility(h, adversary, values, grid);
  }
  return total;
}

std::optional<PseudoNode> FiringNode(const PseudoPath& path,
                                     const BidProfile& adversary,
                                     const Grid& grid) {
  for (const PseudoNode& h : path.nodes) {
    if (NodeFires(h, adversary, grid)) return h;
  }
  return std::nullopt;
}

bool InObservedSet(const PseudoNode& node, int allocation, double price,
                   const Grid& grid) {
  if (node.k2 > 2 * allocation) return true;
  return node.k2 == 2 * allocation && grid.Value(node.level) >= price;
}

bool InObservedSet(const PseudoNode& node, const AuctionOutcome& outcome,
                   const Grid& grid) {
  return InObservedSet(node, outcome.allocation, outcome.price, grid);
}

void ForEachPath(const PseudoGraph& graph,
                 const std::function<void(const PseudoPath&)>& visit,
                 std::uint64_t cap) {
  const double count = graph.PathCount();
  if (count > static_cast<double>(cap)) {
    throw Error(ErrorCode::kTooLarge,
                "path space of size " + std::to_string(count) +
                    " exceeds the enumeration cap");
  }
  PseudoPath path;
  std::function<void(int)> descend = [&](int idx) {
    path.nodes.push_back(graph.node(idx));
    if (graph.IsTerminal(idx)) {
      visit(path);
    } else {
      for (int s : graph.Successors(idx)) descend(s);
    }
    path.nodes.pop_back();
  };
  for (int s : graph.StartNodes()) descend(s);
}

std::vector<PseudoPath> EnumeratePaths(const PseudoGraph& graph,
                                       std::uint64_t cap) {
  std::vector<PseudoPath> out;
  ForEachPath(graph, [&](const PseudoPath& p) { out.push_back(p); }, cap);
  return out;
}

}  // namespace unibid
