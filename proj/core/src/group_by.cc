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

#include "featforge/group_by.h"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <unordered_map>

namespace featforge {
namespace {

// Exact 64-bit payload of a non-null key cell; distinct values map to
// distinct payloads within one column.
int64_t KeyPayload(const Column& col, size_t row) {
  switch (col.kind()) {
    case ColumnKind::kInt:
    case ColumnKind::kDateTime:
      return col.Integer(row);
    case ColumnKind::kText:
      return col.Code(row);
    case ColumnKind::kFloat: {
      double d = col.Number(row);
      if (d == 0.0) d = 0.0;  // fold -0.0
      int64_t bits;
      std::memcpy(&bits, &d, sizeof bits);
      return bits;
    }
  }
  return 0;
}

struct PayloadHash {
  size_t operator()(const std::vector<int64_t>& key) const {
    uint64_t h = 1469598103934665603ULL;
    for (int64_t k : key) {
      h ^= static_cast<uint64_t>(k) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace

KeyedFeature GroupAggregate(const Table& table, const RowSelection& selection,
                            std::span<const std::string> keys, AggFunction fn,
                            const std::string& agg_column) {
  if (keys.empty()) throw std::invalid_argument("group-by needs at least one key");
  std::vector<const Column*> key_cols;
  KeyedFeature out;
  for (const std::string& k : keys) {
    if (!table.HasColumn(k)) {
      throw std::invalid_argument("unknown key column '" + k + "'");
    }
    key_cols.push_back(&table.column(k));
    out.key_columns.push_back(k);
    out.key_kinds.push_back(key_cols.back()->kind());
  }
  if (!table.HasColumn(agg_column)) {
    throw std::invalid_argument("unknown aggregation column '" + agg_column + "'");
  }
  const Column& agg = table.column(agg_column);
  if (IsNumericOnly(fn) && !agg.is_numeric()) {
    throw std::invalid_argument(std::string(AggName(fn)) +
                                " needs a numeric column, '" + agg_column +
                                "' is text");
  }

  struct Group {
    size_t first_row;
    std::vector<double> values;
  };
  std::unordered_map<std::vector<int64_t>, size_t, PayloadHash> index;
  std::vector<Group> groups;
  std::vector<int64_t> payload(key_cols.size());
  for (size_t r : selection) {
    bool null_key = false;
    for (size_t k = 0; k < key_cols.size(); ++k) {
      if (key_cols[k]->IsNull(r)) {
        null_key = true;
        break;
      }
      payload[k] = KeyPayload(*key_cols[k], r);
    }
    if (null_key) continue;
    auto [it, inserted] = index.try_emplace(payload, groups.size());
    if (inserted) groups.push_back({r, {}});
    if (!agg.IsNull(r)) groups[it->second].values.push_back(agg.Number(r));
  }

  for (const Group& g : groups) {
    const auto value = Aggregate(g.values, fn);
    if (!value) continue;
    KeyTuple key;
    key.reserve(key_cols.size());
    for (const Column* c : key_cols) key.push_back(c->Cell(g.first_row));
    out.rows.emplace(std::move(key), *value);
  }
  return out;
}

FeatureColumn Augment(const Table& train, const KeyedFeature& feature,
                      std::span<const std::string> keys, double fill,
                      std::string name) {
  if (keys.size() != feature.key_columns.size()) {
    throw std::invalid_argument("join key count does not match the feature");
  }
  std::vector<const Column*> key_cols;
  for (size_t k = 0; k < keys.size(); ++k) {
    if (!train.HasColumn(keys[k])) {
      throw std::invalid_argument("training table has no key column '" +
                                  keys[k] + "'");
    }
    const Column& c = train.column(keys[k]);
    if (c.kind() != feature.key_kinds[k]) {
      throw std::invalid_argument(
          "key column '" + keys[k] + "' is " + std::string(KindName(c.kind())) +
          " in the training table but " +
          std::string(KindName(feature.key_kinds[k])) + " in the feature");
    }
    key_cols.push_back(&c);
  }

  FeatureColumn out;
  out.name = std::move(name);
  out.values.assign(train.row_count(), fill);
  size_t missing = 0;
  KeyTuple key(key_cols.size());
  for (size_t r = 0; r < train.row_count(); ++r) {
    bool null_key = false;
    for (size_t k = 0; k < key_cols.size(); ++k) {
      if (key_cols[k]->IsNull(r)) null_key = true;
      key[k] = key_cols[k]->Cell(r);
    }
    auto it = null_key ? feature.rows.end() : feature.rows.find(key);
    if (it == feature.rows.end()) {
      ++missing;
    } else {
      out.values[r] = it->second;
    }
  }
  out.missing_fraction =
      train.row_count() == 0
          ? 0.0
          : static_cast<double>(missing) / static_cast<double>(train.row_count());
  return out;
}

}  // namespace featforge
