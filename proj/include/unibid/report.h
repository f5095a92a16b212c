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

// CSV and SVG output for regret traces.

#ifndef UNIBID_REPORT_H_
#define UNIBID_REPORT_H_

#include <span>
#include <string>
#include <vector>

#include "unibid/harness.h"

namespace unibid {

inline constexpr char kCsvHeader[] =
    "run,t,realized_utility,expected_utility,cum_expected_regret,"
    "discretization_bound,price,allocation";

// One row per (run, round), runs in the given order. Throws kEmptyTrace.
std::string FormatCsv(std::span<const RegretTrace> traces);
void WriteCsv(std::span<const RegretTrace> traces, const std::string& path);

// Least-squares slope of log y against log x over points with x, y > 0.
// Throws kEmptyTrace with fewer than two such points.
double FitLogLogSlope(std::span<const double> x, std::span<const double> y);

// Mean cumulative regret with a min-max band across runs. In log-log scale
// the fitted slope is printed on the chart.
std::string FormatSvg(std::span<const RegretTrace> traces, PlotScale scale);
void WriteSvg(std::span<const RegretTrace> traces, const std::string& path,
              PlotScale scale);

}  // namespace unibid

#endif  // UNIBID_REPORT_H_
