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

#include "featforge/evaluator.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace featforge {
namespace {

double Sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// Average ranks (1-based) with ties sharing the mean of their positions.
std::vector<double> AverageRanks(std::span<const double> v) {
  std::vector<size_t> order(v.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  for (size_t i = 0; i < order.size();) {
    size_t j = i;
    while (j < order.size() && v[order[j]] == v[order[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + 1 + j);
    for (size_t k = i; k < j; ++k) ranks[order[k]] = avg;
    i = j;
  }
  return ranks;
}

void CheckRows(const FeatureMatrix& x, size_t n) {
  for (const auto& c : x.columns) {
    if (c.size() != x.rows) throw std::invalid_argument("ragged feature matrix");
  }
  if (x.rows != n) throw std::invalid_argument("feature rows do not match labels");
}

}  // namespace

std::string_view TaskName(TaskKind task) {
  switch (task) {
    case TaskKind::kBinaryClassification: return "binary";
    case TaskKind::kMulticlassClassification: return "multiclass";
    case TaskKind::kRegression: return "regression";
  }
  return "unknown";
}

std::optional<TaskKind> ParseTask(std::string_view name) {
  if (name == "binary") return TaskKind::kBinaryClassification;
  if (name == "multiclass") return TaskKind::kMulticlassClassification;
  if (name == "regression") return TaskKind::kRegression;
  return std::nullopt;
}

std::string_view ModelName(ModelKind kind) {
  switch (kind) {
    case ModelKind::kLogisticRegression: return "logistic";
    case ModelKind::kLinearRegression: return "linear";
    case ModelKind::kOneVsRestLogistic: return "ovr_logistic";
  }
  return "unknown";
}

std::optional<ModelKind> ParseModel(std::string_view name) {
  if (name == "logistic") return ModelKind::kLogisticRegression;
  if (name == "linear") return ModelKind::kLinearRegression;
  if (name == "ovr_logistic") return ModelKind::kOneVsRestLogistic;
  return std::nullopt;
}

ModelKind DefaultModelFor(TaskKind task) {
  switch (task) {
    case TaskKind::kBinaryClassification: return ModelKind::kLogisticRegression;
    case TaskKind::kMulticlassClassification: return ModelKind::kOneVsRestLogistic;
    case TaskKind::kRegression: return ModelKind::kLinearRegression;
  }
  return ModelKind::kLogisticRegression;
}

void FeatureMatrix::AddColumn(std::vector<double> values) {
  if (columns.empty() && rows == 0) rows = values.size();
  if (values.size() != rows) {
    throw std::invalid_argument("feature column length " +
                                std::to_string(values.size()) + " != " +
                                std::to_string(rows));
  }
  columns.push_back(std::move(values));
}

FeatureMatrix NumericFeatures(const Table& table,
                              std::span<const std::string> exclude, double fill) {
  FeatureMatrix m;
  m.rows = table.row_count();
  for (const Column& c : table.columns()) {
    if (!c.is_numeric()) continue;
    if (std::find(exclude.begin(), exclude.end(), c.name()) != exclude.end()) continue;
    std::vector<double> v(table.row_count(), fill);
    for (size_t r = 0; r < table.row_count(); ++r) {
      if (!c.IsNull(r)) v[r] = c.Number(r);
    }
    m.columns.push_back(std::move(v));
  }
  return m;
}

std::vector<double> Model::Linear(const FeatureMatrix& x, size_t output) const {
  std::vector<double> z(x.rows, bias_[output]);
  for (size_t c = 0; c < x.cols(); ++c) {
    if (scales_[c] == 0.0) continue;
    const double w = weights_[output][c] / scales_[c];
    const double shift = means_[c];
    const auto& col = x.columns[c];
    for (size_t r = 0; r < x.rows; ++r) z[r] += w * (col[r] - shift);
  }
  return z;
}

std::vector<double> Model::ClassScores(const FeatureMatrix& x) const {
  if (x.cols() != means_.size()) {
    throw std::invalid_argument("feature count differs from the fitted model");
  }
  std::vector<double> out(x.rows * weights_.size());
  for (size_t k = 0; k < weights_.size(); ++k) {
    const std::vector<double> z = Linear(x, k);
    for (size_t r = 0; r < x.rows; ++r) out[r * weights_.size() + k] = Sigmoid(z[r]);
  }
  return out;
}

std::vector<double> Model::Predict(const FeatureMatrix& x) const {
  if (x.cols() != means_.size()) {
    throw std::invalid_argument("feature count differs from the fitted model");
  }
  switch (kind_) {
    case ModelKind::kLinearRegression:
      return Linear(x, 0);
    case ModelKind::kLogisticRegression: {
      std::vector<double> z = Linear(x, 0);
      for (double& v : z) v = Sigmoid(v);
      return z;
    }
    case ModelKind::kOneVsRestLogistic: {
      const std::vector<double> scores = ClassScores(x);
      const size_t k = weights_.size();
      std::vector<double> out(x.rows);
      for (size_t r = 0; r < x.rows; ++r) {
        const auto* row = &scores[r * k];
        out[r] = static_cast<double>(std::max_element(row, row + k) - row);
      }
      return out;
    }
  }
  return {};
}

Model Fit(const FeatureMatrix& x, std::span<const double> labels,
          const ModelSpec& spec) {
  CheckRows(x, labels.size());
  if (x.rows < 2) throw std::invalid_argument("fit needs at least two rows");
  if (!(spec.learning_rate > 0) || spec.epochs < 1 || spec.l2 < 0) {
    throw std::invalid_argument("invalid model spec");
  }
  const size_t n = x.rows;
  const size_t d = x.cols();
  const double inv_n = 1.0 / static_cast<double>(n);

  Model model;
  model.kind_ = spec.kind;
  model.means_.assign(d, 0.0);
  model.scales_.assign(d, 0.0);
  std::vector<std::vector<double>> z(d, std::vector<double>(n, 0.0));
  for (size_t c = 0; c < d; ++c) {
    const auto& col = x.columns[c];
    double mean = 0.0;
    for (double v : col) mean += v;
    mean *= inv_n;
    double var = 0.0;
    for (double v : col) var += (v - mean) * (v - mean);
    const double sd = std::sqrt(var * inv_n);
    model.means_[c] = mean;
    // Relative threshold so a constant column with rounding noise stays inert.
    if (sd > 1e-12 * std::max(1.0, std::abs(mean))) {
      model.scales_[c] = sd;
      for (size_t r = 0; r < n; ++r) z[c][r] = (col[r] - mean) / sd;
    }
  }

  // Targets per output head.
  std::vector<std::vector<double>> targets;
  const bool logistic = spec.kind != ModelKind::kLinearRegression;
  if (spec.kind == ModelKind::kOneVsRestLogistic) {
    double max_label = 0.0;
    for (double y : labels) max_label = std::max(max_label, y);
    model.num_classes_ = static_cast<size_t>(max_label) + 1;
    std::set<double> seen(labels.begin(), labels.end());
    if (seen.size() < 2) throw std::invalid_argument("single-class training labels");
    for (size_t k = 0; k < model.num_classes_; ++k) {
      std::vector<double> t(n);
      for (size_t r = 0; r < n; ++r) t[r] = labels[r] == static_cast<double>(k) ? 1.0 : 0.0;
      targets.push_back(std::move(t));
    }
  } else {
    if (logistic) {
      std::set<double> seen(labels.begin(), labels.end());
      if (seen.size() < 2) throw std::invalid_argument("single-class training labels");
    }
    model.num_classes_ = logistic ? 2 : 0;
    targets.emplace_back(labels.begin(), labels.end());
  }

  for (const std::vector<double>& y : targets) {
    std::vector<double> w(d, 0.0);
    double b = 0.0;
    if (!logistic) b = std::accumulate(y.begin(), y.end(), 0.0) * inv_n;
    std::vector<double> residual(n);
    for (int epoch = 0; epoch < spec.epochs; ++epoch) {
      std::fill(residual.begin(), residual.end(), b);
      for (size_t c = 0; c < d; ++c) {
        if (w[c] == 0.0) continue;
        const double wc = w[c];
        const auto& zc = z[c];
        for (size_t r = 0; r < n; ++r) residual[r] += wc * zc[r];
      }
      double grad_b = 0.0;
      for (size_t r = 0; r < n; ++r) {
        const double pred = logistic ? Sigmoid(residual[r]) : residual[r];
        residual[r] = pred - y[r];
        grad_b += residual[r];
      }
      for (size_t c = 0; c < d; ++c) {
        if (model.scales_[c] == 0.0) continue;
        const auto& zc = z[c];
        double g = 0.0;
        for (size_t r = 0; r < n; ++r) g += residual[r] * zc[r];
        w[c] -= spec.learning_rate * (g * inv_n + spec.l2 * w[c]);
      }
      b -= spec.learning_rate * grad_b * inv_n;
    }
    model.weights_.push_back(std::move(w));
    model.bias_.push_back(b);
  }
  return model;
}

double Auc(std::span<const double> scores, std::span<const double> labels) {
  if (scores.size() != labels.size()) throw std::invalid_argument("length mismatch");
  const std::vector<double> ranks = AverageRanks(scores);
  double pos = 0, neg = 0, rank_sum = 0;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] > 0.5) {
      pos += 1;
      rank_sum += ranks[i];
    } else {
      neg += 1;
    }
  }
  if (pos == 0 || neg == 0) throw std::invalid_argument("AUC needs both classes");
  return (rank_sum - pos * (pos + 1) / 2) / (pos * neg);
}

double MacroF1(std::span<const double> predicted, std::span<const double> labels) {
  if (predicted.size() != labels.size()) throw std::invalid_argument("length mismatch");
  std::set<double> classes(labels.begin(), labels.end());
  classes.insert(predicted.begin(), predicted.end());
  if (classes.empty()) return 0.0;
  double total = 0.0;
  for (double k : classes) {
    double tp = 0, fp = 0, fn = 0;
    for (size_t i = 0; i < labels.size(); ++i) {
      const bool p = predicted[i] == k, t = labels[i] == k;
      tp += p && t;
      fp += p && !t;
      fn += !p && t;
    }
    const double denom = 2 * tp + fp + fn;
    total += denom == 0 ? 0.0 : 2 * tp / denom;
  }
  return total / static_cast<double>(classes.size());
}

double Rmse(std::span<const double> predicted, std::span<const double> labels) {
  if (predicted.size() != labels.size()) throw std::invalid_argument("length mismatch");
  if (labels.empty()) return 0.0;
  double ss = 0.0;
  for (size_t i = 0; i < labels.size(); ++i) {
    ss += (predicted[i] - labels[i]) * (predicted[i] - labels[i]);
  }
  return std::sqrt(ss / static_cast<double>(labels.size()));
}

LossValue Loss(const Model& model, const FeatureMatrix& x,
               std::span<const double> labels, TaskKind task) {
  CheckRows(x, labels.size());
  if (labels.empty()) throw std::invalid_argument("empty validation set");
  const std::vector<double> pred = model.Predict(x);
  switch (task) {
    case TaskKind::kBinaryClassification: {
      std::set<double> seen(labels.begin(), labels.end());
      if (seen.size() < 2) return {0.5, 0.5, true};
      const double auc = Auc(pred, labels);
      return {1.0 - auc, auc, false};
    }
    case TaskKind::kMulticlassClassification: {
      const double f1 = MacroF1(pred, labels);
      return {1.0 - f1, f1, false};
    }
    case TaskKind::kRegression: {
      const double rmse = Rmse(pred, labels);
      return {rmse, rmse, false};
    }
  }
  return {};
}

LossValue QueryObjective(const CandidateQuery& query, const ObjectiveContext& ctx) {
  FeatureMatrix train = *ctx.base_train;
  FeatureMatrix valid = *ctx.base_valid;
  train.rows = ctx.train->row_count();
  valid.rows = ctx.valid->row_count();
  const KeyedFeature feature = EvaluateQuery(query, *ctx.relevant);
  train.AddColumn(Augment(*ctx.train, feature, query.keys, ctx.fill, "").values);
  valid.AddColumn(Augment(*ctx.valid, feature, query.keys, ctx.fill, "").values);
  const Model model = Fit(train, ctx.train_labels, ctx.model);
  return Loss(model, valid, ctx.valid_labels, ctx.task);
}

LossValue BaseObjective(const ObjectiveContext& ctx) {
  const Model model = Fit(*ctx.base_train, ctx.train_labels, ctx.model);
  return Loss(model, *ctx.base_valid, ctx.valid_labels, ctx.task);
}

}  // namespace featforge
