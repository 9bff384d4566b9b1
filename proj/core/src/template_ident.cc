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

#include "featforge/template_ident.h"

#include <Eigen/Dense>
#include <algorithm>
#include <set>
#include <stdexcept>

#include "featforge/parallel.h"

namespace featforge {
namespace {

// Proxy value descending, then attribute set ascending.
bool BetterByProxy(const TemplateNode& a, const TemplateNode& b) {
  if (*a.proxy_value != *b.proxy_value) return *a.proxy_value > *b.proxy_value;
  return a.attrs < b.attrs;
}

bool BetterByPrediction(const TemplateNode& a, const TemplateNode& b) {
  if (*a.predicted_value != *b.predicted_value) {
    return *a.predicted_value > *b.predicted_value;
  }
  return a.attrs < b.attrs;
}

}  // namespace

TemplateNode MakeNode(std::vector<size_t> attrs, size_t attr_count) {
  std::sort(attrs.begin(), attrs.end());
  attrs.erase(std::unique(attrs.begin(), attrs.end()), attrs.end());
  TemplateNode node;
  node.encoding.assign(attr_count, 0);
  for (size_t a : attrs) {
    if (a >= attr_count) throw std::out_of_range("attribute index out of range");
    node.encoding[a] = 1;
  }
  node.attrs = std::move(attrs);
  return node;
}

std::vector<TemplateNode> Children(const TemplateNode& node, size_t attr_count) {
  std::vector<TemplateNode> out;
  const size_t start = node.attrs.empty() ? 0 : node.attrs.back() + 1;
  for (size_t a = start; a < attr_count; ++a) {
    std::vector<size_t> attrs = node.attrs;
    attrs.push_back(a);
    out.push_back(MakeNode(std::move(attrs), attr_count));
  }
  return out;
}

TemplatePredictor TemplatePredictor::Fit(std::span<const Record> records,
                                         double lambda) {
  if (records.size() < 2) throw std::invalid_argument("predictor needs >= 2 records");
  const size_t m = records.size();
  const size_t p = records.front().encoding.size();
  Eigen::MatrixXd x(m, p);
  Eigen::VectorXd y(m);
  for (size_t i = 0; i < m; ++i) {
    if (records[i].encoding.size() != p) {
      throw std::invalid_argument("predictor records differ in width");
    }
    for (size_t j = 0; j < p; ++j) x(i, j) = records[i].encoding[j];
    y(i) = records[i].value;
  }
  const Eigen::RowVectorXd x_mean = x.colwise().mean();
  const double y_mean = y.mean();
  const Eigen::MatrixXd xc = x.rowwise() - x_mean;
  const Eigen::VectorXd yc = y.array() - y_mean;
  Eigen::MatrixXd gram = xc.transpose() * xc;
  gram.diagonal().array() += lambda;
  const Eigen::VectorXd w = gram.ldlt().solve(xc.transpose() * yc);

  TemplatePredictor out;
  out.weights_.assign(w.data(), w.data() + w.size());
  out.intercept_ = y_mean - x_mean.dot(w);
  return out;
}

double TemplatePredictor::Predict(std::span<const uint8_t> encoding) const {
  if (encoding.size() != weights_.size()) {
    throw std::invalid_argument("encoding width differs from the predictor");
  }
  double out = intercept_;
  for (size_t j = 0; j < weights_.size(); ++j) out += weights_[j] * encoding[j];
  return out;
}

IdentResult Identify(size_t attr_count, const NodeScorer& scorer,
                     const IdentConfig& config, size_t workers) {
  if (attr_count == 0) throw std::invalid_argument("no candidate attributes");
  if (config.beam_width < 1 || config.max_depth < 1 || config.n_out < 1) {
    throw std::invalid_argument("beam width, depth and n_out must be positive");
  }
  const size_t max_depth = std::min(config.max_depth, attr_count);

  IdentResult result;
  std::vector<TemplatePredictor::Record> records;
  std::set<std::vector<size_t>> scored;

  auto score_all = [&](std::vector<TemplateNode>& nodes) {
    for (const TemplateNode& n : nodes) {
      if (!scored.insert(n.attrs).second) {
        throw std::logic_error("attribute set scored twice");
      }
    }
    std::vector<double> values(nodes.size());
    ParallelFor(nodes.size(), workers,
                [&](size_t i) { values[i] = scorer(nodes[i]); });
    for (size_t i = 0; i < nodes.size(); ++i) {
      nodes[i].proxy_value = values[i];
      records.push_back({nodes[i].encoding, values[i]});
      result.evaluated.push_back(nodes[i]);
    }
    result.ledger.proxy_evaluations += nodes.size();
  };
  auto top_beam = [&](std::vector<TemplateNode> layer) {
    std::sort(layer.begin(), layer.end(), BetterByProxy);
    if (layer.size() > config.beam_width) layer.resize(config.beam_width);
    return layer;
  };

  std::vector<TemplateNode> layer = Children(MakeNode({}, attr_count), attr_count);
  score_all(layer);
  std::vector<TemplateNode> beam = top_beam(layer);

  for (size_t depth = 2; depth <= max_depth; ++depth) {
    std::vector<TemplateNode> children;
    for (const TemplateNode& b : beam) {
      for (TemplateNode& c : Children(b, attr_count)) children.push_back(std::move(c));
    }
    if (children.empty()) break;

    if (config.predictor_on && records.size() >= 2) {
      const TemplatePredictor predictor = TemplatePredictor::Fit(records);
      for (TemplateNode& c : children) {
        c.predicted_value = predictor.Predict(c.encoding);
        ++result.ledger.predictions;
      }
      std::sort(children.begin(), children.end(), BetterByPrediction);
      if (children.size() > config.beam_width) children.resize(config.beam_width);
    }
    score_all(children);
    beam = top_beam(children);
  }

  std::vector<TemplateNode> candidates = result.evaluated;
  if (config.include_empty_template) {
    TemplateNode empty = MakeNode({}, attr_count);
    empty.proxy_value = scorer(empty);
    ++result.ledger.empty_template_evaluations;
    candidates.push_back(std::move(empty));
  }
  std::sort(candidates.begin(), candidates.end(), BetterByProxy);
  if (candidates.size() < config.n_out) result.truncated = true;
  if (candidates.size() > config.n_out) candidates.resize(config.n_out);
  result.top = std::move(candidates);
  return result;
}

ProxyScore ScoreQuery(const CandidateQuery& query, const ProxyContext& ctx) {
  const FeatureColumn feature = Execute(query, *ctx.relevant, *ctx.train, ctx.fill);
  return ScoreProxy(feature, ctx.labels, ctx.task, ctx.proxy);
}

Objective MakeProxyObjective(const SearchSpace& space, const ProxyContext& ctx) {
  return [&space, ctx](const QueryVector& v) {
    return -ScoreQuery(Decode(space, v), ctx).value;
  };
}

double NodeProxyEffectiveness(const std::vector<std::string>& predicate_columns,
                              const TemplateIngredients& ingredients,
                              const ProxyContext& ctx, const DomainConfig& domains,
                              size_t inner_budget, const TpeConfig& tpe) {
  const QueryTemplate tmpl{ingredients.functions, ingredients.agg_columns,
                           predicate_columns, ingredients.key_columns};
  const SearchSpace space = BuildSpace(tmpl, *ctx.relevant, domains);
  const TrialHistory history =
      TpeRun(MakeProxyObjective(space, ctx), space, std::max<size_t>(1, inner_budget), tpe);
  return -history.best_trial().objective;
}

}  // namespace featforge
