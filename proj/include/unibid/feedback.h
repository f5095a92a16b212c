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

#ifndef UNIBID_FEEDBACK_H_
#define UNIBID_FEEDBACK_H_

#include <optional>
#include <span>
#include <vector>

#include "unibid/auction.h"
#include "unibid/pseudo_space.h"

namespace unibid {

enum class FeedbackMode { kFullInformation, kBandit, kAllWinner };

// What the learner is shown after a LAB round. Learner code only ever sees
// this type, never the adversary profile itself:
//   full information: allocation, price, every adversary bid;
//   bandit:           allocation, and the price only when allocation > 0;
//   all-winner:       allocation, price, and the K - x winning adversary bids.
class FeedbackView {
 public:
  static FeedbackView Make(FeedbackMode mode, const AuctionOutcome& outcome,
                           const BidProfile& adversary);

  FeedbackMode mode() const { return mode_; }
  int units() const { return units_; }
  int allocation() const { return allocation_; }
  std::optional<double> price() const { return price_; }
  // Highest adversary bids in non-increasing order.
  std::span<const double> revealed_bids() const { return revealed_; }

  // Whether the firing indicator of `node` can be evaluated from this view.
  bool Determines(const PseudoNode& node, const Grid& grid) const;

  // The price `node` is credited with if it fires, nullopt if it does not.
  // Throws kInternal when the view does not determine the node.
  std::optional<double> FiredPrice(const PseudoNode& node,
                                   const Grid& grid) const;

 private:
  FeedbackView() = default;

  FeedbackMode mode_ = FeedbackMode::kBandit;
  int units_ = 0;
  int allocation_ = 0;
  std::optional<double> price_;
  std::vector<double> revealed_;
};

}  // namespace unibid

#endif  // UNIBID_FEEDBACK_H_
