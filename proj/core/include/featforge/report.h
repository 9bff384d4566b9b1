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

#ifndef FEATFORGE_REPORT_H_
#define FEATFORGE_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "featforge/query.h"
#include "featforge/template_ident.h"

namespace featforge {

struct TemplateRecord {
  // Predicate attributes in config order.
  std::vector<std::string> attrs;
  QueryTemplate tmpl;
  // Absent for templates that were not scored (random mode).
  std::optional<double> proxy_effectiveness;
  size_t rank = 0;
  friend bool operator==(const TemplateRecord&, const TemplateRecord&) = default;
};

struct QueryRecord {
  size_t template_index = 0;
  std::string sql;
  std::vector<int> vector;
  double proxy_score = 0.0;
  double validation_loss = 0.0;
  double missing_fraction = 0.0;
  // Column name in augmented.csv.
  std::string feature;
  friend bool operator==(const QueryRecord&, const QueryRecord&) = default;
};

struct RunLedger {
  CostLedger ident;
  size_t search_proxy_evaluations = 0;
  size_t search_real_evaluations = 0;
  friend bool operator==(const RunLedger& a, const RunLedger& b) {
    return a.ident.proxy_evaluations == b.ident.proxy_evaluations &&
           a.ident.predictions == b.ident.predictions &&
           a.ident.empty_template_evaluations == b.ident.empty_template_evaluations &&
           a.search_proxy_evaluations == b.search_proxy_evaluations &&
           a.search_real_evaluations == b.search_real_evaluations;
  }
};

struct SplitMetrics {
  double validation_loss = 0.0;
  double validation_metric = 0.0;
  double test_loss = 0.0;
  double test_metric = 0.0;
  friend bool operator==(const SplitMetrics&, const SplitMetrics&) = default;
};

struct RunMetrics {
  std::string metric;  // "auc", "macro_f1" or "rmse"
  SplitMetrics base;
  SplitMetrics augmented;
  // Set when no query survived, so augmented equals base.
  bool no_features = false;
  friend bool operator==(const RunMetrics&, const RunMetrics&) = default;
};

struct RunReport {
  nlohmann::json config;
  std::vector<TemplateRecord> templates;
  std::vector<QueryRecord> queries;
  RunLedger cost_ledger;
  RunMetrics metrics;
  uint64_t seed = 0;
  friend bool operator==(const RunReport&, const RunReport&) = default;
};

nlohmann::json ReportToJson(const RunReport& report);
// Throws DataError on a malformed document.
RunReport ReportFromJson(const nlohmann::json& doc);

}  // namespace featforge

#endif  // FEATFORGE_REPORT_H_
