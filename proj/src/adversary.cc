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

#include "unibid/adversary.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <tuple>

#include "unibid/error.h"

namespace unibid {
namespace {

constexpr int kMaxRedraws = 1000;

std::vector<std::string> Split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<double> ParseList(const std::string& text) {
  std::vector<double> out;
  for (const std::string& item : Split(text, ',')) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw Error(ErrorCode::kInvalidConfig,
                  "cannot parse number '" + item + "'");
    }
    out.push_back(value);
  }
  if (out.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "empty number list");
  }
  return out;
}

std::pair<double, double> ParseRange(const std::string& text) {
  const std::vector<double> r = ParseList(text);
  if (r.size() != 2 || !(0.0 <= r[0] && r[0] < r[1] && r[1] <= 1.0)) {
    throw Error(ErrorCode::kInvalidConfig,
                "expected lo,hi with 0 <= lo < hi <= 1, got '" + text + "'");
  }
  return {r[0], r[1]};
}

std::string JoinList(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    // Shortest of 15 or 17 digits that reads back exactly.
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.15g", xs[i]);
    if (std::strtod(buf, nullptr) != xs[i]) {
      std::snprintf(buf, sizeof(buf), "%.17g", xs[i]);
    }
    if (i > 0) out += ',';
    out += buf;
  }
  return out;
}

bool Admissible(double beta, const Grid& grid) {
  return beta > 0.0 && beta < 1.0 && !grid.OnGrid(beta);
}

BidProfile Deterministic(const std::vector<double>& bids, int units,
                         const Grid& grid) {
  BidProfile profile = ValidateBidProfile(bids, units);
  for (double beta : profile) {
    if (!Admissible(beta, grid)) {
      throw Error(ErrorCode::kGridCollision,
                  "adversary bid " + std::to_string(beta) +
                      " is outside (0, 1) or on the learner's grid");
    }
  }
  return profile;
}

double Draw(double low, double high, CounterRng& rng, const Grid& grid) {
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    const double beta = rng.Uniform(low, high);
    if (Admissible(beta, grid)) return beta;
  }
  throw Error(ErrorCode::kGridCollision,
              "adversary draws keep landing on the grid or outside (0, 1)");
}

}  // namespace

AdversarySpec ParseAdversarySpec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw Error(ErrorCode::kInvalidConfig,
                "adversary must look like name:params, got '" + text + "'");
  }
  const std::string name = text.substr(0, colon);
  const std::string params = text.substr(colon + 1);
  AdversarySpec spec;
  if (name == "fixed") {
    spec.kind = AdversaryKind::kFixed;
    spec.fixed = ParseList(params);
  } else if (name == "iid") {
    spec.kind = AdversaryKind::kIidUniform;
    std::tie(spec.low, spec.high) = ParseRange(params);
  } else if (name == "schedule") {
    spec.kind = AdversaryKind::kSchedule;
    for (const std::string& profile : Split(params, '/')) {
      spec.schedule.push_back(ParseList(profile));
    }
  } else if (name == "reduction") {
    spec.kind = AdversaryKind::kFirstPriceReduction;
    spec.reduction_h = ParseList(params);
  } else if (name == "reduction-iid") {
    spec.kind = AdversaryKind::kFirstPriceReduction;
    std::tie(spec.low, spec.high) = ParseRange(params);
  } else {
    throw Error(ErrorCode::kInvalidConfig, "unknown adversary '" + name + "'");
  }
  return spec;
}

std::string ToString(const AdversarySpec& spec) {
  switch (spec.kind) {
    case AdversaryKind::kFixed:
      return "fixed:" + JoinList(spec.fixed);
    case AdversaryKind::kIidUniform:
      return "iid:" + JoinList({spec.low, spec.high});
    case AdversaryKind::kSchedule: {
      std::string out = "schedule:";
      for (std::size_t i = 0; i < spec.schedule.size(); ++i) {
        if (i > 0) out += '/';
        out += JoinList(spec.schedule[i]);
      }
      return out;
    }
    case AdversaryKind::kFirstPriceReduction:
      return spec.reduction_h.empty()
                 ? "reduction-iid:" + JoinList({spec.low, spec.high})
                 : "reduction:" + JoinList(spec.reduction_h);
  }
  return "";
}

double ReductionNudge(const Grid& grid) {
  return grid.epsilon() / std::sqrt(2.0);
}

BidProfile NextBids(const AdversarySpec& spec, int units, int round,
                    CounterRng& rng, const Grid& grid) {
  if (round < 1) {
    throw Error(ErrorCode::kInvalidConfig, "rounds are numbered from 1");
  }
  switch (spec.kind) {
    case AdversaryKind::kFixed:
      return Deterministic(spec.fixed, units, grid);
    case AdversaryKind::kSchedule: {
      if (spec.schedule.empty()) {
        throw Error(ErrorCode::kInvalidConfig, "empty adversary schedule");
      }
      const auto& profile = spec.schedule[(round - 1) % spec.schedule.size()];
      return Deterministic(profile, units, grid);
    }
    case AdversaryKind::kIidUniform: {
      std::vector<double> bids(units);
      for (double& b : bids) b = Draw(spec.low, spec.high, rng, grid);
      std::sort(bids.begin(), bids.end(), std::greater<>());
      return ValidateBidProfile(bids, units);
    }
    case AdversaryKind::kFirstPriceReduction: {
      const double top = 1.0 - ReductionNudge(grid);
      double h = 0.0;
      if (spec.reduction_h.empty()) {
        h = Draw(spec.low, std::min(spec.high, top), rng, grid);
      } else {
        h = spec.reduction_h[(round - 1) % spec.reduction_h.size()];
        if (!Admissible(h, grid) || h > top) {
          throw Error(ErrorCode::kGridCollision,
                      "reduction value " + std::to_string(h) +
                          " is on the grid or above 1 - δ_g");
        }
      }
      std::vector<double> bids(units, top);
      bids.back() = h;
      return Deterministic(bids, units, grid);
    }
  }
  throw Error(ErrorCode::kInternal, "unknown adversary kind");
}

bool ReductionCheck::Matches() const {
  const std::optional<double> cleared_price =
      cleared.allocation > 0 ? std::optional<double>(cleared.price)
                             : std::nullopt;
  return cleared.allocation == formula_allocation &&
         cleared_price == formula_price && cleared.utility == formula_utility;
}

ReductionCheck ReductionConsistencyCheck(double b1, double h, int units,
                                         const Grid& grid) {
  std::vector<double> values(units, 0.0);
  values[0] = 1.0;
  std::vector<double> learner(units, 0.0);
  learner[0] = b1;
  std::vector<double> adversary(units, 1.0 - ReductionNudge(grid));
  adversary.back() = h;

  ReductionCheck check;
  if (b1 > h) {
    check.formula_allocation = 1;
    check.formula_price = b1;
    check.formula_utility = 1.0 - b1;
  }
  check.cleared = ClearAuction(ValidateBidProfile(learner, units, grid),
                               ValidateBidProfile(adversary, units),
                               PricingRule::kLab, Valuation(values));
  return check;
}

}  // namespace unibid
