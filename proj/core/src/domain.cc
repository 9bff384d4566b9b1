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

#include "featforge/domain.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace featforge {

size_t NearestRankIndex(size_t n, double q) {
  if (n == 0) throw std::invalid_argument("quantile of empty sample");
  // The epsilon keeps q * n products such as 0.25 * 8 from rounding up.
  double rank = std::ceil(q * static_cast<double>(n) - 1e-9) - 1.0;
  rank = std::clamp(rank, 0.0, static_cast<double>(n - 1));
  return static_cast<size_t>(rank);
}

double NearestRankQuantile(std::span<const double> sorted, double q) {
  return sorted[NearestRankIndex(sorted.size(), q)];
}

Domain ValueDomain(const Table& table, const std::string& column,
                   const DomainConfig& config) {
  if (config.categorical_cap == 0 || config.grid_resolution == 0) {
    throw std::invalid_argument("domain cap and resolution must be positive");
  }
  const Column& col = table.column(column);
  Domain out;
  out.column = column;

  if (col.kind() == ColumnKind::kText) {
    out.kind = DomainKind::kCategorical;
    std::vector<size_t> counts(col.dictionary().size(), 0);
    for (size_t r = 0; r < col.size(); ++r) {
      if (!col.IsNull(r)) ++counts[col.Code(r)];
    }
    std::vector<size_t> codes;
    for (size_t c = 0; c < counts.size(); ++c) {
      if (counts[c] > 0) codes.push_back(c);
    }
    if (codes.size() > config.categorical_cap) {
      // Codes are value ranks, so the code order breaks frequency ties.
      std::stable_sort(codes.begin(), codes.end(), [&](size_t a, size_t b) {
        return counts[a] > counts[b];
      });
      codes.resize(config.categorical_cap);
      std::sort(codes.begin(), codes.end());
    }
    for (size_t c : codes) out.values.emplace_back(col.dictionary()[c]);
    return out;
  }

  out.kind = col.kind() == ColumnKind::kDateTime ? DomainKind::kDateTimeGrid
                                                 : DomainKind::kNumericGrid;
  const size_t res = config.grid_resolution;
  auto quantile_at = [res](size_t j) {
    return res == 1 ? 0.5 : static_cast<double>(j) / static_cast<double>(res - 1);
  };
  if (col.kind() == ColumnKind::kFloat) {
    std::vector<double> sample;
    sample.reserve(col.size());
    for (size_t r = 0; r < col.size(); ++r) {
      if (!col.IsNull(r)) sample.push_back(col.Number(r));
    }
    if (sample.empty()) return out;
    std::sort(sample.begin(), sample.end());
    for (size_t j = 0; j < res; ++j) {
      const double v = sample[NearestRankIndex(sample.size(), quantile_at(j))];
      if (out.values.empty() || v > std::get<double>(out.values.back())) {
        out.values.emplace_back(v);
      }
    }
    return out;
  }

  // Int and DateTime stay in 64-bit integers to avoid double rounding.
  std::vector<int64_t> sample;
  sample.reserve(col.size());
  for (size_t r = 0; r < col.size(); ++r) {
    if (!col.IsNull(r)) sample.push_back(col.Integer(r));
  }
  if (sample.empty()) return out;
  std::sort(sample.begin(), sample.end());
  std::vector<int64_t> cuts;
  for (size_t j = 0; j < res; ++j) {
    const int64_t v = sample[NearestRankIndex(sample.size(), quantile_at(j))];
    if (cuts.empty() || v > cuts.back()) cuts.push_back(v);
  }
  for (int64_t v : cuts) {
    if (col.kind() == ColumnKind::kDateTime) {
      out.values.emplace_back(DateTime{v});
    } else {
      out.values.emplace_back(v);
    }
  }
  return out;
}

}  // namespace featforge
