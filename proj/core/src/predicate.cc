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

#include "featforge/predicate.h"

#include <numeric>
#include <stdexcept>

namespace featforge {
namespace {

bool BoundFits(ColumnKind kind, const Value& bound) {
  switch (kind) {
    case ColumnKind::kInt:
    case ColumnKind::kFloat:
      return std::holds_alternative<int64_t>(bound) ||
             std::holds_alternative<double>(bound);
    case ColumnKind::kDateTime:
      return std::holds_alternative<DateTime>(bound);
    case ColumnKind::kText:
      return false;
  }
  return false;
}

// Keeps the rows of `rows` passing `pred`, in place.
template <typename Pred>
void Retain(RowSelection& rows, Pred pred) {
  size_t out = 0;
  for (size_t r : rows) {
    if (pred(r)) rows[out++] = r;
  }
  rows.resize(out);
}

void ApplyRange(const Column& col, const Range& range, RowSelection& rows) {
  const bool integral = col.kind() != ColumnKind::kFloat;
  auto as_int = [](const Value& v) -> std::optional<int64_t> {
    if (const auto* i = std::get_if<int64_t>(&v)) return *i;
    if (const auto* t = std::get_if<DateTime>(&v)) return t->seconds;
    return std::nullopt;
  };
  const bool int_bounds = integral &&
                          (!range.lower || as_int(*range.lower)) &&
                          (!range.upper || as_int(*range.upper));
  if (int_bounds) {
    const std::optional<int64_t> lo =
        range.lower ? as_int(*range.lower) : std::nullopt;
    const std::optional<int64_t> hi =
        range.upper ? as_int(*range.upper) : std::nullopt;
    Retain(rows, [&](size_t r) {
      if (col.IsNull(r)) return false;
      const int64_t v = col.Integer(r);
      return (!lo || v >= *lo) && (!hi || v <= *hi);
    });
    return;
  }
  const std::optional<double> lo =
      range.lower ? AsNumber(*range.lower) : std::nullopt;
  const std::optional<double> hi =
      range.upper ? AsNumber(*range.upper) : std::nullopt;
  Retain(rows, [&](size_t r) {
    if (col.IsNull(r)) return false;
    const double v = col.Number(r);
    return (!lo || v >= *lo) && (!hi || v <= *hi);
  });
}

}  // namespace

void ValidatePredicate(const Table& table, const PredicateSpec& predicate) {
  const int idx = table.ColumnIndex(predicate.column);
  if (idx < 0) {
    throw std::invalid_argument("predicate on unknown column '" +
                                predicate.column + "'");
  }
  const Column& col = table.column(static_cast<size_t>(idx));
  if (const auto* eq = std::get_if<Equality>(&predicate.form)) {
    if (col.kind() != ColumnKind::kText) {
      throw std::invalid_argument("equality predicate on non-text column '" +
                                  predicate.column + "'");
    }
    if (!std::holds_alternative<std::string>(eq->value)) {
      throw std::invalid_argument("equality value for '" + predicate.column +
                                  "' must be text");
    }
    return;
  }
  const Range& range = std::get<Range>(predicate.form);
  if (col.kind() == ColumnKind::kText) {
    throw std::invalid_argument("range predicate on text column '" +
                                predicate.column + "'");
  }
  if ((range.lower && !BoundFits(col.kind(), *range.lower)) ||
      (range.upper && !BoundFits(col.kind(), *range.upper))) {
    throw std::invalid_argument("range bound kind does not match column '" +
                                predicate.column + "'");
  }
  if (range.lower && range.upper &&
      CompareValues(*range.lower, *range.upper) ==
          std::partial_ordering::greater) {
    throw std::invalid_argument("range on '" + predicate.column +
                                "' has lower bound above upper bound");
  }
}

RowSelection SelectRows(const Table& table,
                        std::span<const PredicateSpec> predicates) {
  for (const PredicateSpec& p : predicates) ValidatePredicate(table, p);
  RowSelection rows(table.row_count());
  std::iota(rows.begin(), rows.end(), size_t{0});
  for (const PredicateSpec& p : predicates) {
    const Column& col = table.column(p.column);
    if (const auto* eq = std::get_if<Equality>(&p.form)) {
      const int32_t code = col.FindCode(std::get<std::string>(eq->value));
      if (code < 0) {
        rows.clear();
        break;
      }
      Retain(rows, [&](size_t r) { return !col.IsNull(r) && col.Code(r) == code; });
    } else {
      ApplyRange(col, std::get<Range>(p.form), rows);
    }
    if (rows.empty()) break;
  }
  return rows;
}

}  // namespace featforge
