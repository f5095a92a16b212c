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

#include "unibid/config.h"

#include <map>

#include "CLI11.hpp"
#include "unibid/error.h"

namespace unibid {

std::vector<double> ParseNumberList(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, comma - start);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) {
      throw Error(ErrorCode::kInvalidConfig,
                  "cannot parse number '" + item + "'");
    }
    out.push_back(value);
    start = comma + 1;
  }
  return out;
}

std::optional<RunConfig> ParseArguments(const std::vector<std::string>& args,
                                        std::string* help) {
  CLI::App app("Online bidding in repeated multi-unit uniform-price auctions.",
               "unibid");
  app.set_config("--config", "", "key=value file with the same keys as flags");
  app.allow_config_extras(false);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  RunConfig config;
  std::string values;
  std::string adversary;
  std::optional<double> epsilon;
  std::optional<double> eta;
  std::string seed = "0";
  FeedbackMode feedback = FeedbackMode::kBandit;
  PricingRule pricing = PricingRule::kLab;
  EtaForm eta_form = EtaForm::kHorizon;
  TieMode tie_mode = TieMode::kValidate;
  PlotScale scale = PlotScale::kLinear;

  app.add_option("--units", config.units, "number of units K")->required();
  app.add_option("--horizon", config.horizon, "number of rounds T")
      ->required();
  app.add_option("--feedback", feedback, "full, bandit or allwinner")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, FeedbackMode>{
              {"full", FeedbackMode::kFullInformation},
              {"bandit", FeedbackMode::kBandit},
              {"allwinner", FeedbackMode::kAllWinner}},
          CLI::ignore_case));
  app.add_option("--pricing", pricing, "lab or frb")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, PricingRule>{{"lab", PricingRule::kLab},
                                             {"frb", PricingRule::kFrb}},
          CLI::ignore_case));
  // Config-file values are split on commas; join them back.
  app.add_option("--values", values, "marginal values v1,...,vK")
      ->required()
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join);
  app.add_option("--adversary", adversary,
                 "fixed:a,b | iid:lo,hi | schedule:a,b/c,d | "
                 "reduction:h1,h2 | reduction-iid:lo,hi")
      ->required()
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join);
  app.add_option("--epsilon", epsilon, "grid step override");
  app.add_option("--eta", eta, "learning rate override");
  app.add_option("--eta-form", eta_form,
                 "default learning rate: horizon (log T) or grid (log 1/eps) form")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, EtaForm>{{"horizon", EtaForm::kHorizon},
                                         {"grid", EtaForm::kGrid}},
          CLI::ignore_case));
  app.add_option("--seed", seed, "64-bit seed");
  app.add_option("--reps", config.replications, "replications");
  app.add_option("--workers", config.workers, "worker threads");
  app.add_option("--tie-mode", tie_mode, "validate or perturb")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, TieMode>{{"validate", TieMode::kValidate},
                                         {"perturb", TieMode::kPerturb}},
          CLI::ignore_case));
  app.add_option("--out", config.csv_path, "CSV output path");
  app.add_option("--plot", config.svg_path, "SVG output path");
  app.add_option("--scale", scale, "linear or loglog")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, PlotScale>{{"linear", PlotScale::kLinear},
                                           {"loglog", PlotScale::kLogLog}},
          CLI::ignore_case));
  app.add_flag("--frozen", config.frozen,
               "play the initial distribution without learning");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    if (help) *help = app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorCode::kInvalidConfig, e.what());
  }

  config.feedback = feedback;
  config.pricing = pricing;
  config.eta_form = eta_form;
  config.tie_mode = tie_mode;
  config.scale = scale;
  config.epsilon = epsilon;
  config.eta = eta;
  config.values = ParseNumberList(values);
  config.adversary = ParseAdversarySpec(adversary);
  try {
    std::size_t used = 0;
    config.seed = std::stoull(seed, &used, 0);
    if (used != seed.size()) throw std::invalid_argument(seed);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidConfig, "cannot parse seed '" + seed + "'");
  }
  ValidateConfig(config);
  return config;
}

}  // namespace unibid
