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

// Bid generators for the aggregated adversary.

#ifndef UNIBID_ADVERSARY_H_
#define UNIBID_ADVERSARY_H_

#include <optional>
#include <string>
#include <vector>

#include "unibid/auction.h"
#include "unibid/grid.h"
#include "unibid/rng.h"

namespace unibid {

enum class AdversaryKind { kFixed, kIidUniform, kSchedule, kFirstPriceReduction };

struct AdversarySpec {
  AdversaryKind kind = AdversaryKind::kFixed;
  // kFixed: the profile played every round.
  std::vector<double> fixed;
  // kIidUniform: every coordinate drawn from U[low, high), then sorted.
  // kFirstPriceReduction without `reduction_h`: h^t drawn from U[low, high).
  double low = 0.0;
  double high = 1.0;
  // kSchedule: profiles played in turn, cycling after the last one.
  std::vector<std::vector<double>> schedule;
  // kFirstPriceReduction: the scalar sequence h^t, cycled.
  std::vector<double> reduction_h;
};

// Parses "fixed:a,b", "iid:lo,hi", "schedule:a,b/c,d", "reduction:h1,h2,..."
// or "reduction-iid:lo,hi". Throws kInvalidConfig.
AdversarySpec ParseAdversarySpec(const std::string& text);
std::string ToString(const AdversarySpec& spec);

// Gap δ_g between the reduction's high bids and 1. Equals ε/√2, which keeps
// 1 - δ_g strictly between the two top grid levels.
double ReductionNudge(const Grid& grid);

// Profile for round `round` (1-based). Random kinds redraw values that land
// on `grid`; kGridCollision is thrown when a draw keeps colliding or a
// deterministic profile sits on the grid.
BidProfile NextBids(const AdversarySpec& spec, int units, int round,
                    CounterRng& rng, const Grid& grid);

struct ReductionCheck {
  // First-price formulas with values (1, 0, ..., 0).
  int formula_allocation = 0;
  std::optional<double> formula_price;
  double formula_utility = 0.0;
  // LAB clearing of (b1, 0, ..., 0) against (1-δ_g, ..., 1-δ_g, h).
  AuctionOutcome cleared;

  bool Matches() const;
};

// Compares the K-unit embedding of a first-price auction with its closed
// form. The embedding is exact for b1 <= 1 - ε.
ReductionCheck ReductionConsistencyCheck(double b1, double h, int units,
                                         const Grid& grid);

}  // namespace unibid

#endif  // UNIBID_ADVERSARY_H_
