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

// Single-shot K-unit uniform-price auction between the learner and an
// aggregated adversary.

#ifndef UNIBID_AUCTION_H_
#define UNIBID_AUCTION_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "unibid/grid.h"

namespace unibid {

// Non-increasing sequence of K bids in [0, 1].
class BidProfile {
 public:
  // Throws kWrongLength, kOutOfRange or kNotMonotone.
  explicit BidProfile(std::vector<double> bids);

  std::size_t size() const { return bids_.size(); }
  double operator[](std::size_t i) const { return bids_[i]; }
  std::span<const double> values() const { return bids_; }
  auto begin() const { return bids_.begin(); }
  auto end() const { return bids_.end(); }

  // True when the profile was validated against a grid and every bid sits on
  // one of its levels.
  bool grid_aligned() const { return grid_aligned_; }

  friend bool operator==(const BidProfile& a, const BidProfile& b) {
    return a.bids_ == b.bids_;
  }

 private:
  friend BidProfile ValidateBidProfile(std::span<const double>, int,
                                       const std::optional<Grid>&);

  std::vector<double> bids_;
  bool grid_aligned_ = false;
};

// Marginal value of each item. Order is unconstrained.
class Valuation {
 public:
  explicit Valuation(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const { return values_; }
  bool non_increasing() const;

 private:
  std::vector<double> values_;
};

enum class PricingRule { kLab, kFrb };

enum class PriceSetter { kLearnerBid, kAdversaryBid, kZeroWin };

struct AuctionOutcome {
  double price = 0.0;
  int allocation = 0;
  double utility = 0.0;
  PriceSetter price_setter = PriceSetter::kZeroWin;
};

// Checks a raw bid vector. With a grid, every bid must sit on a grid level
// (kOffGrid otherwise) and the result is flagged grid-aligned.
BidProfile ValidateBidProfile(std::span<const double> bids, int units,
                              const std::optional<Grid>& grid = std::nullopt);

// Σ_{l < count} (values[l] - price), accumulated in item order. Both the
// auction and the sub-utility decomposition use this so their results agree
// bitwise.
double Surplus(const Valuation& values, int count, double price);

// Price is the K-th (LAB) or (K+1)-th (FRB) highest of the 2K pooled bids; the
// learner receives one item per bid among the K highest. Throws kTieDetected
// when a learner bid equals an adversary bid.
AuctionOutcome ClearAuction(const BidProfile& learner,
                            const BidProfile& adversary, PricingRule rule,
                            const Valuation& values);

// Elementwise min(values, bids). Throws kNotMonotoneResult when the clipped
// profile is no longer non-increasing.
BidProfile ClipDominated(const BidProfile& bids, const Valuation& values);

// Shifts grid-aligned bids by a common offset in [0, ε), capping at 1.
BidProfile ApplyTieOffset(const BidProfile& bids, double offset,
                          const Grid& grid);

// Enforces the adversary contract: bids in the open interval (0, 1) and off
// every level of `grid`. Throws kTieDetected otherwise.
void CheckAdversaryOffGrid(const BidProfile& adversary, const Grid& grid);

}  // namespace unibid

#endif  // UNIBID_AUCTION_H_
