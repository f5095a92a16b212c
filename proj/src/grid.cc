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

#include "unibid/grid.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "unibid/error.h"

namespace unibid {

Grid::Grid(int levels, double offset) : levels_(levels), offset_(offset) {
  if (levels < 0) {
    throw Error(ErrorCode::kOutOfRange,
                "grid levels must be non-negative, got " +
                    std::to_string(levels));
  }
  if (!(offset >= 0.0) || (levels > 0 && offset >= epsilon())) {
    throw Error(ErrorCode::kOffsetTooLarge,
                "grid offset must lie in [0, epsilon)");
  }
}

double Grid::epsilon() const {
  return levels_ == 0 ? 1.0 : 1.0 / static_cast<double>(levels_);
}

double Grid::Value(int level) const {
  if (levels_ == 0) return std::min(offset_, 1.0);
  return std::min(
      static_cast<double>(level) / static_cast<double>(levels_) + offset_, 1.0);
}

std::optional<int> Grid::LevelOf(double bid) const {
  if (levels_ == 0) {
    if (std::abs(bid - Value(0)) <= kGridTolerance) return 0;
    return std::nullopt;
  }
  const double scaled = (bid - offset_) * static_cast<double>(levels_);
  const int nearest = static_cast<int>(std::floor(scaled + 0.5));
  for (int j = nearest - 1; j <= nearest + 1; ++j) {
    if (j < 0 || j > levels_) continue;
    if (std::abs(Value(j) - bid) <= kGridTolerance) return j;
  }
  return std::nullopt;
}

}  // namespace unibid
