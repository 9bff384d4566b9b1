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

#ifndef FEATFORGE_PREDICATE_H_
#define FEATFORGE_PREDICATE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "featforge/table.h"

namespace featforge {

// `column = value`, text columns only.
struct Equality {
  Value value;
  friend bool operator==(const Equality&, const Equality&) = default;
};

// `lower <= column <= upper`, either side optional; numeric and datetime
// columns only.
struct Range {
  std::optional<Value> lower;
  std::optional<Value> upper;
  friend bool operator==(const Range&, const Range&) = default;
};

struct PredicateSpec {
  std::string column;
  std::variant<Equality, Range> form;
  friend bool operator==(const PredicateSpec&, const PredicateSpec&) = default;
};

// Ascending row indices.
using RowSelection = std::vector<size_t>;

// Throws std::invalid_argument when the predicate does not fit the table:
// unknown column, equality on a non-text column, range on a text column,
// bound kinds that do not match the column, or lower > upper.
void ValidatePredicate(const Table& table, const PredicateSpec& predicate);

// Rows where every predicate holds. Null cells fail any predicate on their
// column. The empty conjunction selects every row.
RowSelection SelectRows(const Table& table,
                        std::span<const PredicateSpec> predicates);

}  // namespace featforge

#endif  // FEATFORGE_PREDICATE_H_
