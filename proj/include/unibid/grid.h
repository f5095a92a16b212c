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

#ifndef UNIBID_GRID_H_
#define UNIBID_GRID_H_

#include <optional>

namespace unibid {

// Absolute distance below which a value is considered to sit on a grid level.
inline constexpr double kGridTolerance = 1e-9;

// The learner's bid levels {offset, ε + offset, ..., 1} with ε = 1/levels.
// Shifted levels are capped at 1, so with a non-zero offset the top level is
// exactly 1 and the one below it is 1 - ε + offset.
//
// `levels == 0` is the degenerate grid holding the single value `offset`.
class Grid {
 public:
  explicit Grid(int levels, double offset = 0.0);

  int levels() const { return levels_; }
  double offset() const { return offset_; }
  // 1/levels; 1 for the degenerate grid.
  double epsilon() const;

  // Bid value of level j. Every component that needs the numeric value of a
  // level goes through here so that equal levels compare bitwise equal.
  double Value(int level) const;

  std::optional<int> LevelOf(double bid) const;
  bool OnGrid(double x) const { return LevelOf(x).has_value(); }

  Grid WithOffset(double offset) const { return Grid(levels_, offset); }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  int levels_;
  double offset_;
};

}  // namespace unibid

#endif  // UNIBID_GRID_H_
