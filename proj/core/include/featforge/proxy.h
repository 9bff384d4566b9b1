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

#ifndef FEATFORGE_PROXY_H_
#define FEATFORGE_PROXY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "featforge/evaluator.h"
#include "featforge/group_by.h"

namespace featforge {

enum class ProxyKind { kMutualInformation, kSpearman, kLrProxy };

std::string_view ProxyName(ProxyKind kind);  // "mi", "spearman", "lr"
std::optional<ProxyKind> ParseProxy(std::string_view name);

// Higher is better. Degenerate features (constant, or every row filled)
// carry the worst value of their proxy instead of raising.
struct ProxyScore {
  double value = 0.0;
  bool degenerate = false;
};

// Equal-frequency bin ids in [0, bins): each run of tied values takes the
// bin of its first sorted position, floor(position * bins / n).
std::vector<int> EqualFrequencyBins(std::span<const double> values, size_t bins);

// Plug-in mutual information (nats) between two discrete sequences.
double DiscreteMutualInformation(std::span<const int> x, std::span<const int> y);

// Feature binned into `bins` equal-frequency bins; classification labels used
// as class ids, regression labels binned the same way as the feature.
ProxyScore MutualInformation(std::span<const double> feature,
                             std::span<const double> labels, TaskKind task,
                             size_t bins = 10);
ProxyScore MutualInformation(const FeatureColumn& feature,
                             std::span<const double> labels, TaskKind task,
                             size_t bins = 10);

// Spearman rank correlation, scored as |rho|. Ties get average ranks and use
// Pearson on ranks; otherwise the closed form 1 - 6 sum d^2 / (n (n^2 - 1)).
// `signed_rho` receives rho itself when non-null.
ProxyScore Spearman(std::span<const double> feature, std::span<const double> labels,
                    double* signed_rho = nullptr);
ProxyScore Spearman(const FeatureColumn& feature, std::span<const double> labels);

// Single-feature model on a seeded 70/30 split: held-out AUC (binary),
// macro-F1 (multiclass) or -RMSE (regression). Needs at least 10 rows.
ProxyScore LrProxy(std::span<const double> feature, std::span<const double> labels,
                   TaskKind task, uint64_t split_seed);
ProxyScore LrProxy(const FeatureColumn& feature, std::span<const double> labels,
                   TaskKind task, uint64_t split_seed);

struct ProxyOptions {
  ProxyKind kind = ProxyKind::kMutualInformation;
  size_t mi_bins = 10;
  uint64_t seed = 0;
};

ProxyScore ScoreProxy(const FeatureColumn& feature, std::span<const double> labels,
                      TaskKind task, const ProxyOptions& options);

}  // namespace featforge

#endif  // FEATFORGE_PROXY_H_
