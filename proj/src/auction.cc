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

#include "unibid/auction.h"

#include <algorithm>
#include <string>
#include <utility>

#include "unibid/error.h"

namespace unibid {
namespace {

void CheckUnitInterval(std::span<const double> xs, const char* what) {
  for (double x : xs) {
    if (!(x >= 0.0 && x <= 1.0)) {
      throw Error(ErrorCode::kOutOfRange,
                  std::string(what) + " value " + std::to_string(x) +
                      " outside [0, 1]");
    }
  }
}

}  // namespace

BidProfile::BidProfile(std::vector<double> bids) : bids_(std::move(bids)) {
  if (bids_.empty()) {
    throw Error(ErrorCode::kWrongLength, "bid profile must hold K >= 1 bids");
  }
  CheckUnitInterval(bids_, "bid");
  for (std::size_t k = 1; k < bids_.size(); ++k) {
    if (bids_[k] > bids_[k - 1]) {
      throw Error(ErrorCode::kNotMonotone,
                  "bids must be non-increasing (position " +
                      std::to_string(k + 1) + ")");
    }
  }
}

Valuation::Valuation(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(ErrorCode::kWrongLength, "valuation must hold K >= 1 values");
  }
  CheckUnitInterval(values_, "valuation");
}

bool Valuation::non_increasing() const {
  return std::is_sorted(values_.begin(), values_.end(), std::greater<>());
}

BidProfile ValidateBidProfile(std::span<const double> bids, int units,
                              const std::optional<Grid>& grid) {
  if (units < 1 || bids.size() != static_cast<std::size_t>(units)) {
    throw Error(ErrorCode::kWrongLength,
                "expected " + std::to_string(units) + " bids, got " +
                    std::to_string(bids.size()));
  }
  BidProfile profile(std::vector<double>(bids.begin(), bids.end()));
  if (grid) {
    for (double b : profile) {
      if (!grid->OnGrid(b)) {
        throw Error(ErrorCode::kOffGrid,
                    "bid " + std::to_string(b) + " is not a grid level");
      }
    }
    profile.grid_aligned_ = true;
  }
  return profile;
}

double Surplus(const Valuation& values, int count, double price) {
  double total = 0.0;
  for (int l = 0; l < count; ++l) total += values[l] - price;
  return total;
}

AuctionOutcome ClearAuction(const BidProfile& learner,
                            const BidProfile& adversary, PricingRule rule,
                            const Valuation& values) {
  const std::size_t units = learner.size();
  if (adversary.size() != units || values.size() != units) {
    throw Error(ErrorCode::kWrongLength,
                "learner, adversary and valuation must have equal length");
  }
  for (double b : learner) {
    for (double beta : adversary) {
      if (b == beta) {
        throw Error(ErrorCode::kTieDetected,
                    "learner and adversary both bid " + std::to_string(b));
      }
    }
  }

  // (bid, is_learner) pooled and ranked. Cross-owner ties are excluded above,
  // so the learner's share of the top K does not depend on tie order.
  std::vector<std::pair<double, bool>> pool;
  pool.reserve(2 * units);
  for (double b : learner) pool.emplace_back(b, true);
  for (double b : adversary) pool.emplace_back(b, false);
  std::stable_sort(pool.begin(), pool.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });

  AuctionOutcome out;
  out.price = rule == PricingRule::kLab ? pool[units - 1].first
                                        : pool[units].first;
  out.allocation = static_cast<int>(
      std::count_if(pool.begin(), pool.begin() + units,
                    [](const auto& entry) { return entry.second; }));
  out.utility = Surplus(values, out.allocation, out.price);
  if (out.allocation == 0) {
    out.price_setter = PriceSetter::kZeroWin;
  } else if (std::find(learner.begin(), learner.end(), out.price) !=
             learner.end()) {
    out.price_setter = PriceSetter::kLearnerBid;
  } else {
    out.price_setter = PriceSetter::kAdversaryBid;
  }
  return out;
}

BidProfile ClipDominated(const BidProfile& bids, const Valuation& values) {
  if (bids.size() != values.size()) {
    throw Error(ErrorCode::kWrongLength,
                "bids and valuation must have equal length");
  }
  std::vector<double> clipped(bids.size());
  for (std::size_t i = 0; i < bids.size(); ++i) {
    clipped[i] = std::min(values[i], bids[i]);
  }
  for (std::size_t i = 1; i < clipped.size(); ++i) {
    if (clipped[i] > clipped[i - 1]) {
      throw Error(ErrorCode::kNotMonotoneResult,
                  "clipping to the valuation breaks bid ordering at position " +
                      std::to_string(i + 1));
    }
  }
  return BidProfile(std::move(clipped));
}

BidProfile ApplyTieOffset(const BidProfile& bids, double offset,
                          const Grid& grid) {
  if (!(offset >= 0.0) || offset >= grid.epsilon()) {
    throw Error(ErrorCode::kOffsetTooLarge,
                "offset " + std::to_string(offset) + " not in [0, epsilon)");
  }
  const Grid base(grid.levels());
  std::vector<double> shifted;
  shifted.reserve(bids.size());
  for (double b : bids) {
    if (!base.OnGrid(b)) {
      throw Error(ErrorCode::kOffGrid,
                  "bid " + std::to_string(b) + " is not a grid level");
    }
    shifted.push_back(std::min(b + offset, 1.0));
  }
  return BidProfile(std::move(shifted));
}

void CheckAdversaryOffGrid(const BidProfile& adversary, const Grid& grid) {
  for (double beta : adversary) {
    if (!(beta > 0.0 && beta < 1.0) || grid.OnGrid(beta)) {
      throw Error(ErrorCode::kTieDetected,
                  "adversary bid " + std::to_string(beta) +
                      " is outside (0, 1) or on the learner's grid");
    }
  }
}

}  // namespace unibid
