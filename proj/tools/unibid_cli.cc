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

// Runs one experiment configuration and writes the regret traces.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "unibid/config.h"
#include "unibid/error.h"
#include "unibid/harness.h"
#include "unibid/report.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  std::optional<unibid::RunConfig> config;
  try {
    std::string help;
    config = unibid::ParseArguments(args, &help);
    if (!config) {
      std::cout << help;
      return 0;
    }
  } catch (const unibid::Error& e) {
    std::cerr << "unibid: " << e.what() << "\n";
    return 2;
  }

  try {
    const unibid::LearningParameters params =
        unibid::ResolveParameters(*config);
    const std::vector<unibid::RegretTrace> traces =
        unibid::RunExperiment(*config);
    if (config->csv_path.empty()) {
      std::cout << unibid::FormatCsv(traces);
    } else {
      unibid::WriteCsv(traces, config->csv_path);
    }
    if (!config->svg_path.empty()) {
      unibid::WriteSvg(traces, config->svg_path, config->scale);
    }
    double mean = 0.0;
    for (const auto& tr : traces) mean += tr.final_regret / traces.size();
    std::fprintf(stderr,
                 "K=%d T=%d 1/eps=%d eta=%.6g reps=%zu mean final regret "
                 "%.6g\n",
                 config->units, config->horizon, params.levels, params.eta,
                 traces.size(), mean);
  } catch (const unibid::Error& e) {
    std::cerr << "unibid: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
