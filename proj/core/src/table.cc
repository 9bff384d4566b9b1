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

#include "featforge/table.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "featforge/random.h"

namespace featforge {

Column::Column(std::string name, ColumnKind kind, std::vector<Value> cells)
    : name_(std::move(name)), kind_(kind), null_mask_(cells.size(), 0) {
  const size_t n = cells.size();
  auto bad_cell = [&](size_t row) {
    return std::invalid_argument("column '" + name_ + "' row " +
                                 std::to_string(row) + ": value does not fit kind " +
                                 std::string(KindName(kind_)));
  };
  switch (kind_) {
    case ColumnKind::kInt:
    case ColumnKind::kDateTime:
      ints_.assign(n, 0);
      for (size_t r = 0; r < n; ++r) {
        if (featforge::IsNull(cells[r])) {
          null_mask_[r] = 1;
        } else if (kind_ == ColumnKind::kInt && std::holds_alternative<int64_t>(cells[r])) {
          ints_[r] = std::get<int64_t>(cells[r]);
        } else if (kind_ == ColumnKind::kDateTime &&
                   std::holds_alternative<DateTime>(cells[r])) {
          ints_[r] = std::get<DateTime>(cells[r]).seconds;
        } else {
          throw bad_cell(r);
        }
      }
      break;
    case ColumnKind::kFloat:
      floats_.assign(n, 0.0);
      for (size_t r = 0; r < n; ++r) {
        if (featforge::IsNull(cells[r])) {
          null_mask_[r] = 1;
        } else if (const auto* d = std::get_if<double>(&cells[r])) {
          floats_[r] = *d;
        } else if (const auto* i = std::get_if<int64_t>(&cells[r])) {
          floats_[r] = static_cast<double>(*i);
        } else {
          throw bad_cell(r);
        }
      }
      break;
    case ColumnKind::kText: {
      for (size_t r = 0; r < n; ++r) {
        if (featforge::IsNull(cells[r])) {
          null_mask_[r] = 1;
        } else if (const auto* s = std::get_if<std::string>(&cells[r])) {
          dictionary_.push_back(*s);
        } else {
          throw bad_cell(r);
        }
      }
      std::sort(dictionary_.begin(), dictionary_.end());
      dictionary_.erase(std::unique(dictionary_.begin(), dictionary_.end()),
                        dictionary_.end());
      codes_.assign(n, -1);
      for (size_t r = 0; r < n; ++r) {
        if (!null_mask_[r]) codes_[r] = FindCode(std::get<std::string>(cells[r]));
      }
      break;
    }
  }
}

Value Column::Cell(size_t row) const {
  if (null_mask_.at(row)) return Value{};
  switch (kind_) {
    case ColumnKind::kInt: return Value{ints_[row]};
    case ColumnKind::kDateTime: return Value{DateTime{ints_[row]}};
    case ColumnKind::kFloat: return Value{floats_[row]};
    case ColumnKind::kText: return Value{dictionary_[codes_[row]]};
  }
  return Value{};
}

double Column::Number(size_t row) const {
  switch (kind_) {
    case ColumnKind::kInt:
    case ColumnKind::kDateTime:
      return static_cast<double>(ints_[row]);
    case ColumnKind::kFloat:
      return floats_[row];
    case ColumnKind::kText:
      return static_cast<double>(codes_[row]);
  }
  return 0.0;
}

int32_t Column::FindCode(std::string_view text) const {
  auto it = std::lower_bound(dictionary_.begin(), dictionary_.end(), text);
  if (it == dictionary_.end() || *it != text) return -1;
  return static_cast<int32_t>(it - dictionary_.begin());
}

Column Column::Take(std::span<const size_t> rows) const {
  Column out;
  out.name_ = name_;
  out.kind_ = kind_;
  out.null_mask_.reserve(rows.size());
  for (size_t r : rows) out.null_mask_.push_back(null_mask_.at(r));
  switch (kind_) {
    case ColumnKind::kInt:
    case ColumnKind::kDateTime:
      for (size_t r : rows) out.ints_.push_back(ints_[r]);
      break;
    case ColumnKind::kFloat:
      for (size_t r : rows) out.floats_.push_back(floats_[r]);
      break;
    case ColumnKind::kText: {
      // Re-encode against the subset's own dictionary so codes stay ranks.
      std::vector<uint8_t> used(dictionary_.size(), 0);
      for (size_t r : rows) {
        if (!null_mask_[r]) used[codes_[r]] = 1;
      }
      std::vector<int32_t> remap(dictionary_.size(), -1);
      for (size_t c = 0; c < dictionary_.size(); ++c) {
        if (used[c]) {
          remap[c] = static_cast<int32_t>(out.dictionary_.size());
          out.dictionary_.push_back(dictionary_[c]);
        }
      }
      for (size_t r : rows) {
        out.codes_.push_back(null_mask_[r] ? -1 : remap[codes_[r]]);
      }
      break;
    }
  }
  return out;
}

Table::Table(std::string name, std::vector<Column> columns)
    : name_(std::move(name)), columns_(std::move(columns)) {
  std::unordered_set<std::string> seen;
  for (const Column& c : columns_) {
    if (!seen.insert(c.name()).second) {
      throw std::invalid_argument("duplicate column name '" + c.name() + "'");
    }
  }
  row_count_ = columns_.empty() ? 0 : columns_.front().size();
  for (const Column& c : columns_) {
    if (c.size() != row_count_) {
      throw std::invalid_argument("column '" + c.name() + "' has " +
                                  std::to_string(c.size()) + " cells, expected " +
                                  std::to_string(row_count_));
    }
  }
}

const Column& Table::column(std::string_view name) const {
  const int idx = ColumnIndex(name);
  if (idx < 0) {
    throw std::out_of_range("table '" + name_ + "' has no column '" +
                            std::string(name) + "'");
  }
  return columns_[idx];
}

bool Table::HasColumn(std::string_view name) const {
  return ColumnIndex(name) >= 0;
}

int Table::ColumnIndex(std::string_view name) const {
  for (size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].name() == name) return static_cast<int>(i);
  }
  return -1;
}

std::vector<ColumnSpec> Table::Schema() const {
  std::vector<ColumnSpec> out;
  out.reserve(columns_.size());
  for (const Column& c : columns_) out.push_back({c.name(), c.kind()});
  return out;
}

Table Table::Take(std::span<const size_t> rows, std::string name) const {
  std::vector<Column> cols;
  cols.reserve(columns_.size());
  for (const Column& c : columns_) cols.push_back(c.Take(rows));
  Table out(std::move(name), std::move(cols));
  out.row_count_ = rows.size();
  return out;
}

Table Table::WithColumns(std::vector<Column> extra) const {
  std::vector<Column> cols = columns_;
  for (Column& c : extra) cols.push_back(std::move(c));
  Table out(name_, std::move(cols));
  if (out.columns_.empty()) out.row_count_ = row_count_;
  return out;
}

bool CellwiseEqual(const Table& a, const Table& b) {
  if (a.Schema() != b.Schema() || a.row_count() != b.row_count()) return false;
  for (size_t c = 0; c < a.column_count(); ++c) {
    for (size_t r = 0; r < a.row_count(); ++r) {
      if (a.column(c).Cell(r) != b.column(c).Cell(r)) return false;
    }
  }
  return true;
}

SplitIndices SplitRows(size_t row_count, const SplitRatios& ratios,
                       uint64_t seed) {
  const double total = ratios.train + ratios.valid + ratios.test;
  if (ratios.train < 0 || ratios.valid < 0 || ratios.test < 0 ||
      std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("split ratios must be non-negative and sum to 1");
  }
  std::vector<size_t> order(row_count);
  std::iota(order.begin(), order.end(), size_t{0});
  Rng rng(seed);
  rng.Shuffle(order);

  // A tiny epsilon keeps products like 0.2 * 10 from flooring to 1.
  auto part = [&](double ratio) {
    return static_cast<size_t>(
        std::floor(ratio * static_cast<double>(row_count) + 1e-9));
  };
  const size_t n_valid = part(ratios.valid);
  const size_t n_test = part(ratios.test);
  const size_t n_train = row_count - n_valid - n_test;

  SplitIndices out;
  out.train.assign(order.begin(), order.begin() + n_train);
  out.valid.assign(order.begin() + n_train, order.begin() + n_train + n_valid);
  out.test.assign(order.begin() + n_train + n_valid, order.end());
  return out;
}

TableSplit Split(const Table& table, const SplitRatios& ratios, uint64_t seed) {
  const SplitIndices idx = SplitRows(table.row_count(), ratios, seed);
  return {table.Take(idx.train, table.name() + "_train"),
          table.Take(idx.valid, table.name() + "_valid"),
          table.Take(idx.test, table.name() + "_test")};
}

}  // namespace featforge
