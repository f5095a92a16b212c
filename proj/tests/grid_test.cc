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

#include <gtest/gtest.h>

#include "unibid/error.h"

namespace unibid {
namespace {

TEST(GridTest, LevelsAreMultiplesOfEpsilon) {
  const Grid grid(4);
  EXPECT_EQ(grid.epsilon(), 0.25);
  EXPECT_EQ(grid.Value(0), 0.0);
  EXPECT_EQ(grid.Value(2), 0.5);
  EXPECT_EQ(grid.Value(4), 1.0);
}

TEST(GridTest, LevelOfRecognizesLevelsWithinTolerance) {
  const Grid grid(10);
  EXPECT_EQ(grid.LevelOf(0.3), 3);
  EXPECT_EQ(grid.LevelOf(0.3 + 1e-12), 3);
  EXPECT_EQ(grid.LevelOf(1.0), 10);
  EXPECT_FALSE(grid.LevelOf(0.35).has_value());
  EXPECT_FALSE(grid.LevelOf(1.1).has_value());
  EXPECT_FALSE(grid.LevelOf(-0.1).has_value());
}

TEST(GridTest, OffsetShiftsAndCapsAtOne) {
  const Grid grid(4, 0.01);
  EXPECT_DOUBLE_EQ(grid.Value(0), 0.01);
  EXPECT_DOUBLE_EQ(grid.Value(3), 0.76);
  EXPECT_EQ(grid.Value(4), 1.0);
  EXPECT_EQ(grid.LevelOf(0.26), 1);
  EXPECT_FALSE(grid.OnGrid(0.25));
  EXPECT_EQ(grid.WithOffset(0.0), Grid(4));
}

TEST(GridTest, DegenerateGridHoldsOneValue) {
  const Grid grid(0);
  EXPECT_EQ(grid.epsilon(), 1.0);
  EXPECT_EQ(grid.Value(0), 0.0);
  EXPECT_TRUE(grid.OnGrid(0.0));
  EXPECT_FALSE(grid.OnGrid(0.5));
}

TEST(GridTest, RejectsBadArguments) {
  try {
    Grid(-1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfRange);
  }
  try {
    Grid(4, 0.25);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOffsetTooLarge);
  }
  EXPECT_THROW(Grid(4, -0.1), Error);
}

}  // namespace
}  // namespace unibid
