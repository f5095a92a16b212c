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

// The pseudo-bid action space: bid nodes h(k, j) meaning b_k = jε and bid-gap
// nodes h(k+1/2, j) meaning b_k >= (j+1)ε and b_{k+1} <= jε. A grid bid
// profile corresponds to exactly one source-to-sink path of the DAG built
// here, and its utility against an off-grid adversary is the sum of the
// per-node sub-utilities along that path.

#ifndef UNIBID_PSEUDO_SPACE_H_
#define UNIBID_PSEUDO_SPACE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unibid/auction.h"
#include "unibid/grid.h"

namespace unibid {

struct PseudoNode {
  int k2 = 2;     // twice the index k: even for bid nodes, odd for gap nodes
  int level = 0;  // j

  bool is_bid() const { return k2 % 2 == 0; }
  // ⌊k⌋, the allocation credited when this node fires.
  int unit() const { return k2 / 2; }

  friend bool operator==(const PseudoNode&, const PseudoNode&) = default;
};

// Lexicographic order: k increasing, then level decreasing.
bool operator<(const PseudoNode& a, const PseudoNode& b);
std::string ToString(const PseudoNode& node);

struct PseudoPath {
  std::vector<PseudoNode> nodes;

  friend bool operator==(const PseudoPath&, const PseudoPath&) = default;
};

// Lexicographic over the node sequences.
bool operator<(const PseudoPath& a, const PseudoPath& b);
std::string ToString(const PseudoPath& path);

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

// Immutable DAG over all nodes for K units on `grid`. Node indices follow the
// lexicographic node order, which is also a topological order.
class PseudoGraph {
 public:
  PseudoGraph(int units, Grid grid);

  int units() const { return units_; }
  const Grid& grid() const { return grid_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }

  PseudoNode node(int index) const { return nodes_[index]; }
  // -1 when the node does not exist in this graph.
  int IndexOf(const PseudoNode& node) const;
  bool Contains(const PseudoNode& node) const { return IndexOf(node) >= 0; }

  std::span<const int> Successors(int index) const;
  std::span<const int> Predecessors(int index) const;
  std::span<const int> StartNodes() const { return starts_; }
  // Bid nodes with k = K; they have no successors.
  bool IsTerminal(int index) const { return nodes_[index].k2 == 2 * units_; }

  // Number of source-to-sink paths, computed by dynamic programming. Equals
  // C(K + 1/ε, K).
  double PathCount() const;

 private:
  int LayerSize(int k2) const;

  int units_;
  Grid grid_;
  std::vector<PseudoNode> nodes_;
  std::vector<int> layer_offset_;  // indexed by k2
  std::vector<int> succ_offset_, succ_;
  std::vector<int> pred_offset_, pred_;
  std::vector<int> starts_;
};

// Node indices of a path; throws kMalformedPath when a node is missing.
std::vector<int> PathIndices(const PseudoPath& path, const PseudoGraph& graph);

// Grid-aligned profile to path. Throws kOffGrid or kWrongLength.
PseudoPath Encode(const BidProfile& bids, const PseudoGraph& graph);

// Path to grid profile. Throws kMalformedPath unless the path starts at a
// k = 1 bid node, follows successor edges and ends at a k = K bid node.
BidProfile Decode(const PseudoPath& path, const PseudoGraph& graph);

// Firing indicator of a node against an off-grid adversary: the price the
// node is credited with when it fires, nullopt otherwise. Missing adversary
// indices use the sentinels β_0 = 2 and β_{K+1} = -1.
std::optional<double> NodeFires(const PseudoNode& node,
                                const BidProfile& adversary, const Grid& grid);

double SubUtility(const PseudoNode& node, const BidProfile& adversary,
                  const Valuation& values, const Grid& grid);

double PathUtility(const PseudoPath& path, const BidProfile& adversary,
                   const Valuation& values, const Grid& grid);

// The unique node on the path whose event fires; nullopt iff the decoded
// profile wins nothing.
std::optional<PseudoNode> FiringNode(const PseudoPath& path,
                                     const BidProfile& adversary,
                                     const Grid& grid);

// Membership in the set of nodes whose sub-utility the all-winner feedback of
// a LAB round with this allocation and price reveals: k > x, or k = x and the
// node's level is at least the price.
bool InObservedSet(const PseudoNode& node, int allocation, double price,
                   const Grid& grid);
bool InObservedSet(const PseudoNode& node, const AuctionOutcome& outcome,
                   const Grid& grid);

// Calls `visit` once per path, in lexicographic order. Throws kTooLarge when
// the path count exceeds `cap`.
void ForEachPath(const PseudoGraph& graph,
                 const std::function<void(const PseudoPath&)>& visit,
                 std::uint64_t cap = kDefaultEnumerationCap);
std::vector<PseudoPath> EnumeratePaths(
    const PseudoGraph& graph, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace unibid

#endif  // UNIBID_PSEUDO_SPACE_H_
