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

#ifndef FEATFORGE_TABLE_H_
#define FEATFORGE_TABLE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "featforge/value.h"

namespace featforge {

// One typed column. Int and DateTime cells live in `ints`, Float cells in
// `floats`. Text cells are dictionary encoded: `codes` index into
// `dictionary`, which is sorted ascending, so a code is also the rank of the
// value among the column's distinct values. Null cells are flagged in
// `null_mask` and hold an unspecified payload.
class Column {
 public:
  Column(std::string name, ColumnKind kind, std::vector<Value> cells);

  const std::string& name() const { return name_; }
  ColumnKind kind() const { return kind_; }
  size_t size() const { return null_mask_.size(); }
  bool is_numeric() const { return kind_ != ColumnKind::kText; }

  bool IsNull(size_t row) const { return null_mask_[row] != 0; }
  Value Cell(size_t row) const;

  // Numeric payload for Int/Float/DateTime, dictionary code for Text.
  // Undefined for Null cells.
  double Number(size_t row) const;
  int64_t Integer(size_t row) const { return ints_[row]; }
  int32_t Code(size_t row) const { return codes_[row]; }

  const std::vector<std::string>& dictionary() const { return dictionary_; }
  // Dictionary code of `text`, or -1 when the column never holds it.
  int32_t FindCode(std::string_view text) const;

  Column Take(std::span<const size_t> rows) const;

 private:
  Column() = default;

  std::string name_;
  ColumnKind kind_ = ColumnKind::kInt;
  std::vector<uint8_t> null_mask_;
  std::vector<int64_t> ints_;
  std::vector<double> floats_;
  std::vector<int32_t> codes_;
  std::vector<std::string> dictionary_;
};

struct ColumnSpec {
  std::string name;
  ColumnKind kind;
  friend bool operator==(const ColumnSpec&, const ColumnSpec&) = default;
};

// Immutable column-major relation.
class Table {
 public:
  Table() = default;
  // Throws std::invalid_argument on duplicate names or ragged columns.
  Table(std::string name, std::vector<Column> columns);

  const std::string& name() const { return name_; }
  size_t row_count() const { return row_count_; }
  size_t column_count() const { return columns_.size(); }

  const std::vector<Column>& columns() const { return columns_; }
  const Column& column(size_t i) const { return columns_.at(i); }
  // Throws std::out_of_range naming the column when absent.
  const Column& column(std::string_view name) const;
  bool HasColumn(std::string_view name) const;
  // Position of the column, or -1.
  int ColumnIndex(std::string_view name) const;
  std::vector<ColumnSpec> Schema() const;

  Value Cell(size_t row, std::string_view column_name) const {
    return column(column_name).Cell(row);
  }

  // New table holding the given rows in the given order.
  Table Take(std::span<const size_t> rows, std::string name) const;
  // New table with `extra` columns appended.
  Table WithColumns(std::vector<Column> extra) const;

 private:
  std::string name_;
  std::vector<Column> columns_;
  size_t row_count_ = 0;
};

bool CellwiseEqual(const Table& a, const Table& b);

struct SplitRatios {
  double train = 0.6;
  double valid = 0.2;
  double test = 0.2;
};

// Row indices of a deterministic shuffled three-way split. Part sizes are
// floor(ratio * n) for the second and third parts; the first part takes the
// remainder. Throws std::invalid_argument when the ratios do not sum to one.
struct SplitIndices {
  std::vector<size_t> train;
  std::vector<size_t> valid;
  std::vector<size_t> test;
};
SplitIndices SplitRows(size_t row_count, const SplitRatios& ratios,
                       uint64_t seed);

struct TableSplit {
  Table train;
  Table valid;
  Table test;
};
TableSplit Split(const Table& table, const SplitRatios& ratios, uint64_t seed);

}  // namespace featforge

#endif  // FEATFORGE_TABLE_H_
