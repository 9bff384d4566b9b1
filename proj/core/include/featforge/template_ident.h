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

#ifndef FEATFORGE_TEMPLATE_IDENT_H_
#define FEATFORGE_TEMPLATE_IDENT_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "featforge/domain.h"
#include "featforge/evaluator.h"
#include "featforge/proxy.h"
#include "featforge/query.h"
#include "featforge/search_space.h"
#include "featforge/tpe.h"

namespace featforge {

// An attribute combination: indices into the global attribute list,
// ascending, with its one-hot encoding.
struct TemplateNode {
  std::vector<size_t> attrs;
  std::vector<uint8_t> encoding;
  std::optional<double> proxy_value;
  std::optional<double> predicted_value;

  size_t depth() const { return attrs.size(); }
};

TemplateNode MakeNode(std::vector<size_t> attrs, size_t attr_count);

// One child per attribute after the node's largest attribute, so every
// subset is generated from exactly one parent.
std::vector<TemplateNode> Children(const TemplateNode& node, size_t attr_count);

// Ridge regression (unpenalised intercept) from one-hot encodings to proxy
// values.
class TemplatePredictor {
 public:
  struct Record {
    std::vector<uint8_t> encoding;
    double value;
  };

  // Needs at least two records of equal width.
  static TemplatePredictor Fit(std::span<const Record> records, double lambda = 1.0);
  double Predict(std::span<const uint8_t> encoding) const;

  const std::vector<double>& weights() const { return weights_; }
  double intercept() const { return intercept_; }

 private:
  std::vector<double> weights_;
  double intercept_ = 0.0;
};

struct IdentConfig {
  size_t beam_width = 1;
  size_t max_depth = 4;
  size_t inner_budget = 100;
  size_t n_out = 8;
  bool predictor_on = true;
  uint64_t seed = 0;
  // Also score P = {} and let it compete for the output slots.
  bool include_empty_template = true;
};

struct CostLedger {
  size_t proxy_evaluations = 0;           // non-empty nodes scored
  size_t predictions = 0;                 // predictor calls
  size_t empty_template_evaluations = 0;  // the P = {} baseline node
};

struct IdentResult {
  // Highest proxy value first.
  std::vector<TemplateNode> top;
  // Every scored node in evaluation order.
  std::vector<TemplateNode> evaluated;
  CostLedger ledger;
  // Set when fewer than n_out nodes were available.
  bool truncated = false;
};

// Proxy effectiveness of an attribute combination; higher is better.
using NodeScorer = std::function<double(const TemplateNode&)>;

// Layer-wise beam search over attribute combinations. Layer one scores every
// singleton; each later layer expands the beam, and either scores every child
// or, with the predictor on, only the beam_width children the predictor ranks
// highest. The predictor is refit on all scored nodes after each layer.
IdentResult Identify(size_t attr_count, const NodeScorer& scorer,
                     const IdentConfig& config, size_t workers = 1);

// Data needed to score queries by a low-cost proxy on the training rows.
struct ProxyContext {
  const Table* relevant = nullptr;
  const Table* train = nullptr;
  std::span<const double> labels;
  TaskKind task = TaskKind::kBinaryClassification;
  ProxyOptions proxy;
  double fill = 0.0;
};

// Proxy score of one query's feature over the training rows.
ProxyScore ScoreQuery(const CandidateQuery& query, const ProxyContext& ctx);

// Objective for TpeRun: the negated proxy score of the decoded query.
Objective MakeProxyObjective(const SearchSpace& space, const ProxyContext& ctx);

struct TemplateIngredients {
  std::vector<AggFunction> functions;
  std::vector<std::string> agg_columns;
  std::vector<std::string> key_columns;
};

// Best proxy value found by an inner TPE search of `inner_budget`
// iterations over the pool of (F, A, predicate_columns, K).
double NodeProxyEffectiveness(const std::vector<std::string>& predicate_columns,
                              const TemplateIngredients& ingredients,
                              const ProxyContext& ctx, const DomainConfig& domains,
                              size_t inner_budget, const TpeConfig& tpe);

}  // namespace featforge

#endif  // FEATFORGE_TEMPLATE_IDENT_H_
