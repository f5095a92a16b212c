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

// Command-line and key=value file parsing for experiment runs.

#ifndef UNIBID_CONFIG_H_
#define UNIBID_CONFIG_H_

#include <optional>
#include <string>
#include <vector>

#include "unibid/harness.h"

namespace unibid {

// Parses arguments (program name first). Keys of a --config file are the long
// flag names; flags given on the command line take precedence. Unknown flags
// and keys are rejected. Returns nullopt after filling `help` when help was
// requested. Throws kInvalidConfig.
std::optional<RunConfig> ParseArguments(const std::vector<std::string>& args,
                                        std::string* help = nullptr);

std::vector<double> ParseNumberList(const std::string& text);

}  // namespace unibid

#endif  // UNIBID_CONFIG_H_
