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

#ifndef FEATFORGE_PIPELINE_H_
#define FEATFORGE_PIPELINE_H_

#include <filesystem>
#include <mutex>
#include <string_view>
#include <vector>

#include "featforge/config.h"
#include "featforge/report.h"
#include "featforge/table.h"

namespace featforge {

enum class Stage { kLoad, kSplit, kIdentify, kSearch, kFinalEvaluation, kOutput };
std::string_view StageName(Stage stage);

enum class SplitPart { kTrain, kValid, kTest };

struct SplitAccess {
  Stage stage;
  SplitPart part;
  friend bool operator==(const SplitAccess&, const SplitAccess&) = default;
};

// Every read of a split table, in order.
class AuditLog {
 public:
  void Record(Stage stage, SplitPart part);
  std::vector<SplitAccess> events() const;

 private:
  mutable std::mutex mu_;
  std::vector<SplitAccess> events_;
};

// Owns the three parts of the training table; the only way to reach a part
// is through an accessor that records the read.
class GuardedSplit {
 public:
  GuardedSplit(TableSplit split, AuditLog* log) : split_(std::move(split)), log_(log) {}
  const Table& train(Stage stage) const;
  const Table& valid(Stage stage) const;
  const Table& test(Stage stage) const;

 private:
  TableSplit split_;
  AuditLog* log_;
};

struct RunResult {
  RunReport report;
  // The full training table plus one feat_<i> column per kept query.
  Table augmented;
  std::vector<SplitAccess> audit;
};

// Class ids for classification labels (position in the sorted distinct
// values), raw numbers for regression. Throws DataError on Null labels, text
// regression labels, or a binary task without exactly two classes.
std::vector<double> EncodeLabels(const Column& label, TaskKind task,
                                 const std::vector<Value>& classes);
std::vector<Value> LabelClasses(const Column& label);

// Loads the tables named by the config and runs the selected mode. Errors
// keep their type (ConfigError, DataError) and are prefixed with the stage.
RunResult RunPipeline(const RunConfig& config, size_t workers);
RunResult RunPipeline(const RunConfig& config, const Table& train,
                      const Table& relevant, size_t workers);

// augmented.csv, report.json and queries.sql under `out_dir` (created if
// needed). Throws DataError with the path on I/O failure.
void WriteOutputs(const RunReport& report, const Table& augmented,
                  const std::filesystem::path& out_dir);

}  // namespace featforge

#endif  // FEATFORGE_PIPELINE_H_
