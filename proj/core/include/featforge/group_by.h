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

#ifndef FEATFORGE_GROUP_BY_H_
#define FEATFORGE_GROUP_BY_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "featforge/aggregate.h"
#include "featforge/predicate.h"
#include "featforge/table.h"

namespace featforge {

using KeyTuple = std::vector<Value>;

// Result of a keyed group-by: one finite value per surviving key tuple.
struct KeyedFeature {
  std::vector<std::string> key_columns;
  std::vector<ColumnKind> key_kinds;
  std::map<KeyTuple, double> rows;
};

// One augmented column aligned with the training table's rows.
struct FeatureColumn {
  std::string name;
  std::vector<double> values;
  // Fraction of training rows whose key found no group.
  double missing_fraction = 0.0;
};

// Groups the selected rows by `keys` and aggregates `agg_column` per group.
// Null aggregate cells are skipped; rows with a Null key cell are discarded;
// groups whose aggregate is undefined are dropped. Throws
// std::invalid_argument for empty keys, unknown columns, or a numeric-only
// function over a text column.
KeyedFeature GroupAggregate(const Table& table, const RowSelection& selection,
                            std::span<const std::string> keys, AggFunction fn,
                            const std::string& agg_column);

// Left-joins `feature` onto `train` by `keys`; rows without a group get
// `fill`. Throws std::invalid_argument when a key column is missing from
// `train` or its kind differs from the feature's key kind.
FeatureColumn Augment(const Table& train, const KeyedFeature& feature,
                      std::span<const std::string> keys, double fill,
                      std::string name);

}  // namespace featforge

#endif  // FEATFORGE_GROUP_BY_H_
