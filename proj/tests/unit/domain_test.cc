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

#include <gtest/gtest.h>

#include "support/oracles.h"

namespace featforge {
namespace {

Table OneColumn(ColumnKind kind, std::vector<Value> cells) {
  return Table("T", {Column("c", kind, std::move(cells))});
}

TEST(DomainTest, CategoricalDistinctSorted) {
  const Table t = OneColumn(ColumnKind::kText, {Value(std::string("b")), Value(std::string("a")),
                                                Value(std::string("b")), Value{}});
  const Domain d = ValueDomain(t, "c", {10, 20});
  EXPECT_EQ(d.kind, DomainKind::kCategorical);
  EXPECT_EQ(d.values, (std::vector<Value>{Value(std::string("a")), Value(std::string("b"))}));
}

TEST(DomainTest, CategoricalCapKeepsMostFrequentTiesToSmaller) {
  std::vector<Value> cells;
  for (const char* s : {"d", "d", "d", "c", "c", "b", "b", "a", "a", "e"}) {
    cells.emplace_back(std::string(s));
  }
  const Domain d = ValueDomain(OneColumn(ColumnKind::kText, cells), "c", {3, 20});
  // d (3), then a/b/c tied at 2: keep a and b.
  EXPECT_EQ(d.values, (std::vector<Value>{Value(std::string("a")), Value(std::string("b")),
                                          Value(std::string("d"))}));
}

TEST(DomainTest, GridMatchesNearestRankOracle) {
  std::vector<Value> cells;
  std::vector<double> raw;
  for (int i = 1; i <= 10; ++i) {
    cells.emplace_back(int64_t{i});
    raw.push_back(i);
  }
  const Domain d = ValueDomain(OneColumn(ColumnKind::kInt, cells), "c", {64, 5});
  ASSERT_EQ(d.values.size(), 5u);
  for (size_t j = 0; j < 5; ++j) {
    const double expected = testing::RefNearestRank(raw, j / 4.0);
    EXPECT_DOUBLE_EQ(*AsNumber(d.values[j]), expected) << "j=" << j;
  }
  EXPECT_EQ(std::get<int64_t>(d.values[0]), 1);
  EXPECT_EQ(std::get<int64_t>(d.values[4]), 10);
}

TEST(DomainTest, ConstantCollapses) {
  const Table t = OneColumn(ColumnKind::kFloat, {Value(3.0), Value(3.0), Value(3.0)});
  for (size_t res : {1u, 2u, 20u}) {
    const Domain d = ValueDomain(t, "c", {64, res});
    EXPECT_EQ(d.values, (std::vector<Value>{Value(3.0)}));
  }
}

TEST(DomainTest, ResolutionOneIsMedian) {
  const Table t = OneColumn(ColumnKind::kFloat, {Value(5.0), Value(1.0), Value(3.0), Value(9.0)});
  const Domain d = ValueDomain(t, "c", {64, 1});
  ASSERT_EQ(d.values.size(), 1u);
  EXPECT_DOUBLE_EQ(std::get<double>(d.values[0]), testing::RefNearestRank({5, 1, 3, 9}, 0.5));
}

TEST(DomainTest, RandomGridsAgreeWithOracle) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const size_t n = 1 + rng.UniformIndex(80);
    std::vector<Value> cells;
    std::vector<double> raw;
    for (size_t i = 0; i < n; ++i) {
      const double v = std::round(rng.Normal(0, 10) * 4) / 4;
      cells.emplace_back(v);
      raw.push_back(v);
    }
    const size_t res = 1 + rng.UniformIndex(25);
    const Domain d = ValueDomain(OneColumn(ColumnKind::kFloat, cells), "c", {64, res});
    std::vector<double> expected;
    for (size_t j = 0; j < res; ++j) {
      const double q = res == 1 ? 0.5 : static_cast<double>(j) / (res - 1);
      const double v = testing::RefNearestRank(raw, q);
      if (expected.empty() || expected.back() != v) expected.push_back(v);
    }
    ASSERT_EQ(d.values.size(), expected.size());
    for (size_t j = 0; j < expected.size(); ++j) {
      EXPECT_EQ(std::get<double>(d.values[j]), expected[j]);
    }
  }
}

TEST(DomainTest, DateTimeGrid) {
  const Table t = OneColumn(ColumnKind::kDateTime,
                            {Value(*ParseDateTime("2023-01-01")), Value(*ParseDateTime("2023-03-01")),
                             Value{}});
  const Domain d = ValueDomain(t, "c", {64, 2});
  EXPECT_EQ(d.kind, DomainKind::kDateTimeGrid);
  ASSERT_EQ(d.values.size(), 2u);
  EXPECT_EQ(FormatValue(d.values[1]), "2023-03-01");
  EXPECT_THROW(ValueDomain(t, "missing"), std::out_of_range);
}

}  // namespace
}  // namespace featforge
