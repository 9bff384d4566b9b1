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

#ifndef FEATFORGE_DOMAIN_H_
#define FEATFORGE_DOMAIN_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "featforge/table.h"

namespace featforge {

enum class DomainKind { kCategorical, kNumericGrid, kDateTimeGrid };

// Finite set of candidate predicate values for one column. Categorical
// domains hold Text values; grids hold Int, Float or DateTime values. Values
// are strictly ascending in every kind.
struct Domain {
  std::string column;
  DomainKind kind = DomainKind::kCategorical;
  std::vector<Value> values;
};

struct DomainConfig {
  size_t categorical_cap = 64;
  size_t grid_resolution = 20;
};

size_t NearestRankIndex(size_t n, double q);

// Nearest-rank quantile of an ascending sample: the element at position
// ceil(q * n) - 1, clamped to the sample. q = 0 yields the minimum.
double NearestRankQuantile(std::span<const double> sorted, double q);

// Text columns: distinct non-null values, keeping the `categorical_cap` most
// frequent (ties to the smaller value), listed ascending. Numeric and
// datetime columns: nearest-rank quantiles at j / (resolution - 1) for
// j = 0..resolution-1 with duplicates collapsed; a resolution of 1 yields the
// median. Throws std::out_of_range for an unknown column.
Domain ValueDomain(const Table& table, const std::string& column,
                   const DomainConfig& config = {});

}  // namespace featforge

#endif  // FEATFORGE_DOMAIN_H_
