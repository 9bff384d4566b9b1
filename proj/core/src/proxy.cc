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

#include "featforge/proxy.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "featforge/random.h"

namespace featforge {
namespace {

bool IsConstant(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

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

bool HasTies(std::span<const double> v) {
  std::vector<double> s(v.begin(), v.end());
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) != s.end();
}

double WorstLr(TaskKind task, std::span<const double> holdout_labels,
               double train_mean) {
  switch (task) {
    case TaskKind::kBinaryClassification: return 0.5;
    case TaskKind::kMulticlassClassification: return 0.0;
    case TaskKind::kRegression: {
      std::vector<double> pred(holdout_labels.size(), train_mean);
      return -Rmse(pred, holdout_labels);
    }
  }
  return 0.0;
}

}  // namespace

std::string_view ProxyName(ProxyKind kind) {
  switch (kind) {
    case ProxyKind::kMutualInformation: return "mi";
    case ProxyKind::kSpearman: return "spearman";
    case ProxyKind::kLrProxy: return "lr";
  }
  return "unknown";
}

std::optional<ProxyKind> ParseProxy(std::string_view name) {
  if (name == "mi") return ProxyKind::kMutualInformation;
  if (name == "spearman") return ProxyKind::kSpearman;
  if (name == "lr") return ProxyKind::kLrProxy;
  return std::nullopt;
}

std::vector<int> EqualFrequencyBins(std::span<const double> values, size_t bins) {
  if (bins < 1) throw std::invalid_argument("bins must be positive");
  const size_t n = values.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return values[a] < values[b]; });
  std::vector<int> out(n, 0);
  for (size_t i = 0; i < n;) {
    size_t j = i;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    const int bin = static_cast<int>(i * bins / n);
    for (size_t k = i; k < j; ++k) out[order[k]] = bin;
    i = j;
  }
  return out;
}

double DiscreteMutualInformation(std::span<const int> x, std::span<const int> y) {
  if (x.size() != y.size()) throw std::invalid_argument("length mismatch");
  const size_t n = x.size();
  if (n == 0) return 0.0;
  std::map<std::pair<int, int>, size_t> joint;
  std::map<int, size_t> px, py;
  for (size_t i = 0; i < n; ++i) {
    ++joint[{x[i], y[i]}];
    ++px[x[i]];
    ++py[y[i]];
  }
  const double dn = static_cast<double>(n);
  double mi = 0.0;
  for (const auto& [cell, count] : joint) {
    const double c = static_cast<double>(count);
    mi += c / dn *
          std::log(c * dn / (static_cast<double>(px[cell.first]) *
                             static_cast<double>(py[cell.second])));
  }
  return std::max(0.0, mi);
}

ProxyScore MutualInformation(std::span<const double> feature,
                             std::span<const double> labels, TaskKind task,
                             size_t bins) {
  if (feature.size() != labels.size()) throw std::invalid_argument("length mismatch");
  if (bins < 2) throw std::invalid_argument("mutual information needs >= 2 bins");
  if (feature.empty() || IsConstant(feature)) return {0.0, true};
  const std::vector<int> fx = EqualFrequencyBins(feature, bins);
  std::vector<int> fy;
  if (IsClassification(task)) {
    fy.reserve(labels.size());
    for (double y : labels) fy.push_back(static_cast<int>(std::lround(y)));
  } else {
    fy = EqualFrequencyBins(labels, bins);
  }
  return {DiscreteMutualInformation(fx, fy), false};
}

ProxyScore MutualInformation(const FeatureColumn& feature,
                             std::span<const double> labels, TaskKind task,
                             size_t bins) {
  if (feature.values.size() != labels.size()) throw std::invalid_argument("length mismatch");
  if (feature.missing_fraction >= 1.0) return {0.0, true};
  return MutualInformation(feature.values, labels, task, bins);
}

ProxyScore Spearman(std::span<const double> feature, std::span<const double> labels,
                    double* signed_rho) {
  if (feature.size() != labels.size()) throw std::invalid_argument("length mismatch");
  if (feature.size() < 2) throw std::invalid_argument("spearman needs two rows");
  if (signed_rho) *signed_rho = 0.0;
  if (IsConstant(feature) || IsConstant(labels)) return {0.0, true};
  const std::vector<double> rx = AverageRanks(feature);
  const std::vector<double> ry = AverageRanks(labels);
  const double n = static_cast<double>(feature.size());
  double rho;
  if (!HasTies(feature) && !HasTies(labels)) {
    double d2 = 0.0;
    for (size_t i = 0; i < rx.size(); ++i) d2 += (rx[i] - ry[i]) * (rx[i] - ry[i]);
    rho = 1.0 - 6.0 * d2 / (n * (n * n - 1.0));
  } else {
    const double mean = (n + 1.0) / 2.0;
    double sxy = 0, sxx = 0, syy = 0;
    for (size_t i = 0; i < rx.size(); ++i) {
      sxy += (rx[i] - mean) * (ry[i] - mean);
      sxx += (rx[i] - mean) * (rx[i] - mean);
      syy += (ry[i] - mean) * (ry[i] - mean);
    }
    rho = sxy / std::sqrt(sxx * syy);
  }
  rho = std::clamp(rho, -1.0, 1.0);
  if (signed_rho) *signed_rho = rho;
  return {std::abs(rho), false};
}

ProxyScore Spearman(const FeatureColumn& feature, std::span<const double> labels) {
  if (feature.missing_fraction >= 1.0) {
    if (feature.values.size() != labels.size()) throw std::invalid_argument("length mismatch");
    return {0.0, true};
  }
  return Spearman(feature.values, labels);
}

ProxyScore LrProxy(std::span<const double> feature, std::span<const double> labels,
                   TaskKind task, uint64_t split_seed) {
  if (feature.size() != labels.size()) throw std::invalid_argument("length mismatch");
  const size_t n = feature.size();
  if (n < 10) throw std::invalid_argument("lr proxy needs at least 10 rows");

  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  Rng rng(split_seed);
  rng.Shuffle(order);
  const size_t n_fit = n * 7 / 10;

  FeatureMatrix fit_x, hold_x;
  std::vector<double> fit_f, hold_f, fit_y, hold_y;
  for (size_t i = 0; i < n; ++i) {
    const size_t r = order[i];
    (i < n_fit ? fit_f : hold_f).push_back(feature[r]);
    (i < n_fit ? fit_y : hold_y).push_back(labels[r]);
  }
  const double fit_mean =
      std::accumulate(fit_y.begin(), fit_y.end(), 0.0) / static_cast<double>(fit_y.size());
  const double worst = WorstLr(task, hold_y, fit_mean);
  if (IsConstant(feature)) return {worst, true};
  if (IsClassification(task) && std::set<double>(fit_y.begin(), fit_y.end()).size() < 2) {
    return {worst, true};
  }
  fit_x.AddColumn(std::move(fit_f));
  hold_x.AddColumn(std::move(hold_f));

  ModelSpec spec;
  spec.kind = DefaultModelFor(task);
  const Model model = Fit(fit_x, fit_y, spec);
  const LossValue loss = Loss(model, hold_x, hold_y, task);
  if (loss.degenerate) return {worst, true};
  switch (task) {
    case TaskKind::kRegression: return {-loss.metric_raw, false};
    default: return {loss.metric_raw, false};
  }
}

ProxyScore LrProxy(const FeatureColumn& feature, std::span<const double> labels,
                   TaskKind task, uint64_t split_seed) {
  if (feature.missing_fraction >= 1.0) {
    // Constant by construction; report the worst score.
    std::vector<double> constant(feature.values.size(), 0.0);
    return LrProxy(constant, labels, task, split_seed);
  }
  return LrProxy(feature.values, labels, task, split_seed);
}

ProxyScore ScoreProxy(const FeatureColumn& feature, std::span<const double> labels,
                      TaskKind task, const ProxyOptions& options) {
  switch (options.kind) {
    case ProxyKind::kMutualInformation:
      return MutualInformation(feature, labels, task, options.mi_bins);
    case ProxyKind::kSpearman:
      return Spearman(feature, labels);
    case ProxyKind::kLrProxy:
      return LrProxy(feature, labels, task, options.seed);
  }
  return {};
}

}  // namespace featforge
