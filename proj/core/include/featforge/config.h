// Copyright 2026 The FeatForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FEATFORGE_CONFIG_H_
#define FEATFORGE_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "featforge/aggregate.h"
#include "featforge/csv.h"
#include "featforge/domain.h"
#include "featforge/evaluator.h"
#include "featforge/proxy.h"
#include "featforge/template_ident.h"
#include "featforge/tpe.h"

namespace featforge {

enum class RunMode { kFeatAug, kRandom, kFeaturetools };

std::string_view ModeName(RunMode mode);  // "feataug", "random", "featuretools"
std::optional<RunMode> ParseMode(std::string_view name);

struct RunConfig {
  // Paths as written in the config; resolved against `base_dir` on load.
  std::string train_path;
  std::string relevant_path;
  std::filesystem::path base_dir;
  Schema train_schema;
  Schema relevant_schema;
  std::string train_name = "D";
  std::string relevant_name = "R";

  std::string label;
  std::vector<std::string> keys;
  std::vector<std::string> agg_columns;
  std::vector<AggFunction> agg_functions{kAllAggFunctions.begin(),
                                         kAllAggFunctions.end()};
  // Candidate predicate attributes of the relevant table.
  std::vector<std::string> attrs;

  TaskKind task = TaskKind::kBinaryClassification;
  ModelSpec model;
  ProxyKind proxy = ProxyKind::kMutualInformation;
  size_t mi_bins = 10;

  size_t n_templates = 8;
  size_t queries_per_template = 5;
  TpeConfig tpe;
  WarmStartBudget budget;
  IdentConfig ident;
  DomainConfig domains;

  double fill = 0.0;
  SplitRatios split;
  uint64_t seed = 0;
  RunMode mode = RunMode::kFeatAug;

  std::filesystem::path ResolvedTrainPath() const { return base_dir / train_path; }
  std::filesystem::path ResolvedRelevantPath() const { return base_dir / relevant_path; }
};

// Parses a config document. Unknown keys, wrong types and invalid values
// raise ConfigError. Relative data paths resolve against `base_dir`.
RunConfig ParseConfig(const nlohmann::json& doc, const std::filesystem::path& base_dir);
RunConfig LoadConfig(const std::filesystem::path& path);

// Semantic checks that need no data: non-empty keys/A/attrs, budgets, label
// and keys present in the schemas. Throws ConfigError.
void ValidateConfig(const RunConfig& config);

// Every setting, defaults included, in the same layout ParseConfig reads.
nlohmann::json ConfigToJson(const RunConfig& config);

}  // namespace featforge

#endif  // FEATFORGE_CONFIG_H_
