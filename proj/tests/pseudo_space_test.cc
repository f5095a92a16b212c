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

#include <gtest/gtest.h>

#include <set>

#include "test_util.h"
#include "unibid/error.h"

namespace unibid {
namespace {

using ::unibid::testing::AllGridProfiles;
using ::unibid::testing::Binomial;
using ::unibid::testing::RandomOffGridProfile;
using ::unibid::testing::RandomValuation;

PseudoNode Bid(int k, int j) { return PseudoNode{2 * k, j}; }
PseudoNode Gap(int k, int j) { return PseudoNode{2 * k + 1, j}; }

TEST(PseudoSpaceTest, PathCountIsBinomial) {
  for (int units = 1; units <= 3; ++units) {
    for (int levels = 0; levels <= 6; ++levels) {
      const PseudoGraph graph(units, Grid(levels));
      EXPECT_EQ(graph.PathCount(), Binomial(units + levels, units));
      EXPECT_EQ(EnumeratePaths(graph).size(),
                static_cast<std::size_t>(Binomial(units + levels, units)));
    }
  }
  EXPECT_EQ(PseudoGraph(3, Grid(3)).PathCount(), 20.0);
}

TEST(PseudoSpaceTest, NodeIndexOrderIsLexicographicAndTopological) {
  const PseudoGraph graph(3, Grid(3));
  for (int i = 1; i < graph.node_count(); ++i) {
    EXPECT_LT(graph.node(i - 1), graph.node(i));
  }
  for (int i = 0; i < graph.node_count(); ++i) {
    EXPECT_EQ(graph.IndexOf(graph.node(i)), i);
    for (int s : graph.Successors(i)) EXPECT_GT(s, i);
  }
  EXPECT_EQ(graph.IndexOf(Gap(3, 0)), -1);
  EXPECT_EQ(graph.IndexOf(Gap(1, 3)), -1);
}

TEST(PseudoSpaceTest, SuccessorsFollowTheBidGapRules) {
  const PseudoGraph graph(2, Grid(2));
  auto succ = [&](PseudoNode h) {
    std::vector<PseudoNode> out;
    for (int s : graph.Successors(graph.IndexOf(h))) {
      out.push_back(graph.node(s));
    }
    return out;
  };
  EXPECT_EQ(succ(Bid(1, 2)), (std::vector<PseudoNode>{Gap(1, 1), Bid(2, 2)}));
  EXPECT_EQ(succ(Bid(1, 0)), (std::vector<PseudoNode>{Bid(2, 0)}));
  EXPECT_EQ(succ(Gap(1, 1)), (std::vector<PseudoNode>{Gap(1, 0), Bid(2, 1)}));
  EXPECT_EQ(succ(Gap(1, 0)), (std::vector<PseudoNode>{Bid(2, 0)}));
  EXPECT_TRUE(succ(Bid(2, 1)).empty());
}

TEST(PseudoSpaceTest, EncodeExample) {
  const PseudoGraph graph(3, Grid(4));
  const PseudoPath path = Encode(BidProfile({1.0, 0.5, 0.5}), graph);
  EXPECT_EQ(path.nodes, (std::vector<PseudoNode>{Bid(1, 4), Gap(1, 3),
                                                  Gap(1, 2), Bid(2, 2),
                                                  Bid(3, 2)}));
  EXPECT_EQ(ToString(path),
            "(h(1,4), h(1.5,3), h(1.5,2), h(2,2), h(3,2))");
}

TEST(PseudoSpaceTest, EncodeDecodeRoundTripIsExhaustive) {
  for (int units = 1; units <= 3; ++units) {
    for (int levels = 1; levels <= 6; ++levels) {
      const PseudoGraph graph(units, Grid(levels));
      const auto profiles = AllGridProfiles(units, graph.grid());
      std::set<std::vector<PseudoNode>> seen;
      for (const BidProfile& b : profiles) {
        const PseudoPath path = Encode(b, graph);
        ASSERT_EQ(Decode(path, graph), b);
        seen.insert(path.nodes);
      }
      EXPECT_EQ(seen.size(), profiles.size());
      for (const PseudoPath& p : EnumeratePaths(graph)) {
        ASSERT_EQ(Encode(Decode(p, graph), graph), p);
      }
    }
  }
}

TEST(PseudoSpaceTest, DecodeRejectsMalformedPaths) {
  const PseudoGraph graph(2, Grid(2));
  auto code = [&](std::vector<PseudoNode> nodes) {
    try {
      Decode(PseudoPath{nodes}, graph);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInternal;
  };
  EXPECT_EQ(code({}), ErrorCode::kMalformedPath);
  EXPECT_EQ(code({Bid(2, 1)}), ErrorCode::kMalformedPath);
  EXPECT_EQ(code({Bid(1, 1)}), ErrorCode::kMalformedPath);
  EXPECT_EQ(code({Bid(1, 1), Bid(2, 2)}), ErrorCode::kMalformedPath);
  EXPECT_EQ(code({Bid(1, 1), Gap(1, 1), Bid(2, 1)}),
            ErrorCode::kMalformedPath);
  EXPECT_EQ(code({Bid(1, 7), Bid(2, 7)}), ErrorCode::kMalformedPath);
  EXPECT_EQ(code({Bid(1, 2), Gap(1, 1), Bid(2, 1)}), ErrorCode::kInternal);
}

TEST(PseudoSpaceTest, EncodeRejectsOffGridBids) {
  const PseudoGraph graph(2, Grid(4));
  EXPECT_THROW(Encode(BidProfile({0.6, 0.1}), graph), Error);
  EXPECT_THROW(Encode(BidProfile({0.5}), graph), Error);
}

TEST(PseudoSpaceTest, FiringExamples) {
  const Grid grid(4);
  const BidProfile beta({0.8, 0.3});
  // b_1 = 0.5 with β_2 = 0.3 below and β_1 = 0.8 above: wins one at 0.5.
  EXPECT_EQ(NodeFires(Bid(1, 2), beta, grid), 0.5);
  EXPECT_FALSE(NodeFires(Bid(1, 1), beta, grid).has_value());
  // Gap (1.5, 1): b_1 >= 0.5, b_2 <= 0.25, and β_1 = 0.8 is not in
  // (0.25, 0.5), so it stays silent; gap (1.5, 3) sees β_1 in (0.75, 1).
  EXPECT_FALSE(NodeFires(Gap(1, 1), beta, grid).has_value());
  EXPECT_EQ(NodeFires(Gap(1, 3), beta, grid), 0.8);
  // Bid (2, 2): both bids at or above 0.5, β_1 = 0.8 > 0.5 > -1.
  EXPECT_FALSE(NodeFires(Bid(2, 2), beta, grid).has_value());
  EXPECT_EQ(NodeFires(Bid(2, 1), BidProfile({0.2, 0.1}), grid), 0.25);
}

TEST(PseudoSpaceTest, PathUtilityEqualsClearingBitwise) {
  CounterRng rng(21, 0);
  for (int units = 1; units <= 3; ++units) {
    for (int levels : {2, 4}) {
      const PseudoGraph graph(units, Grid(levels));
      const auto paths = EnumeratePaths(graph);
      for (int trial = 0; trial < 30; ++trial) {
        const BidProfile beta = RandomOffGridProfile(units, graph.grid(), rng);
        const Valuation values = RandomValuation(units, rng);
        for (const PseudoPath& p : paths) {
          const AuctionOutcome out = ClearAuction(
              Decode(p, graph), beta, PricingRule::kLab, values);
          ASSERT_EQ(PathUtility(p, beta, values, graph.grid()), out.utility);
          int fired = 0;
          for (const PseudoNode& h : p.nodes) {
            if (auto price = NodeFires(h, beta, graph.grid())) {
              ++fired;
              ASSERT_EQ(*price, out.price);
              ASSERT_EQ(h.unit(), out.allocation);
            }
          }
          ASSERT_EQ(fired, out.allocation > 0 ? 1 : 0);
          ASSERT_EQ(FiringNode(p, beta, graph.grid()).has_value(),
                    out.allocation > 0);
        }
      }
    }
  }
}

TEST(PseudoSpaceTest, ObservedSetMembership) {
  const Grid grid(4);
  EXPECT_TRUE(InObservedSet(Bid(1, 0), 0, 0.3, grid));
  EXPECT_TRUE(InObservedSet(Gap(1, 0), 0, 0.3, grid));
  EXPECT_TRUE(InObservedSet(Bid(2, 0), 1, 0.6, grid));
  EXPECT_TRUE(InObservedSet(Gap(1, 0), 1, 0.6, grid));
  EXPECT_TRUE(InObservedSet(Bid(1, 3), 1, 0.6, grid));
  EXPECT_FALSE(InObservedSet(Bid(1, 2), 1, 0.6, grid));
  EXPECT_FALSE(InObservedSet(Bid(1, 4), 2, 0.2, grid));
  EXPECT_FALSE(InObservedSet(Gap(1, 3), 2, 0.2, grid));
}

TEST(PseudoSpaceTest, EnumerationCap) {
  const PseudoGraph graph(3, Grid(6));
  EXPECT_THROW(EnumeratePaths(graph, 10), Error);
  std::vector<PseudoPath> paths = EnumeratePaths(graph);
  EXPECT_TRUE(std::is_sorted(paths.begin(), paths.end()));
}

}  // namespace
}  // namespace unibid
