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

#include "unibid/feedback.h"

#include "unibid/error.h"

namespace unibid {

FeedbackView FeedbackView::Make(FeedbackMode mode,
                                const AuctionOutcome& outcome,
                                const BidProfile& adversary) {
  FeedbackView view;
  view.mode_ = mode;
  view.units_ = static_cast<int>(adversary.size());
  view.allocation_ = outcome.allocation;
  switch (mode) {
    case FeedbackMode::kFullInformation:
      view.price_ = outcome.price;
      view.revealed_.assign(adversary.begin(), adversary.end());
      break;
    case FeedbackMode::kBandit:
      if (outcome.allocation > 0) view.price_ = outcome.price;
      break;
    case FeedbackMode::kAllWinner:
      view.price_ = outcome.price;
      view.revealed_.assign(adversary.begin(),
                            adversary.begin() +
                                (view.units_ - outcome.allocation));
      break;
  }
  return view;
}

bool FeedbackView::Determines(const PseudoNode& node, const Grid& grid) const {
  switch (mode_) {
    case FeedbackMode::kFullInformation:
      return true;
    case FeedbackMode::kBandit:
      return false;
    case FeedbackMode::kAllWinner:
      return InObservedSet(node, allocation_, *price_, grid);
  }
  return false;
}

std::optional<double> FeedbackView::FiredPrice(const PseudoNode& node,
                                               const Grid& grid) const {
  const int known = static_cast<int>(revealed_.size());
  auto undetermined = [&]() {
    return Error(ErrorCode::kInternal,
                 "feedback does not determine node " + ToString(node));
  };
  // Adversary bids beyond the revealed prefix are known to lie strictly
  // below the price: they lost, and none ties a learner bid.
  auto exact = [&](int i) -> std::optional<double> {
    if (i <= 0) return 2.0;
    if (i > units_) return -1.0;
    if (i <= known) return revealed_[i - 1];
    return std::nullopt;
  };

  const int k = node.unit();
  if (node.is_bid()) {
    const double level = grid.Value(node.level);
    const auto upper = exact(units_ - k);
    if (!upper) throw undetermined();
    bool below_level;
    if (const auto lower = exact(units_ - k + 1)) {
      below_level = level > *lower;
    } else if (price_ && level >= *price_) {
      below_level = true;
    } else {
      throw undetermined();
    }
    if (*upper > level && below_level) return level;
    return std::nullopt;
  }
  const auto beta = exact(units_ - k);
  if (!beta) throw undetermined();
  if (grid.Value(node.level) < *beta && *beta < grid.Value(node.level + 1)) {
    return *beta;
  }
  return std::nullopt;
}

}  // namespace unibid
