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

#include <gtest/gtest.h>

#include "support/oracles.h"

namespace featforge {
namespace {

Table TwoGroups() {
  return Table("R", {Column("k", ColumnKind::kText,
                            {Value(std::string("k1")), Value(std::string("k1")),
                             Value(std::string("k2"))}),
                     Column("v", ColumnKind::kFloat, {Value(1.0), Value(2.0), Value(3.0)})});
}

TEST(GroupByTest, HandSum) {
  const Table t = TwoGroups();
  const std::vector<std::string> keys = {"k"};
  const KeyedFeature f = GroupAggregate(t, {0, 1, 2}, keys, AggFunction::kSum, "v");
  ASSERT_EQ(f.rows.size(), 2u);
  EXPECT_EQ(f.rows.at({Value(std::string("k1"))}), 3.0);
  EXPECT_EQ(f.rows.at({Value(std::string("k2"))}), 3.0);
}

TEST(GroupByTest, EmptySelection) {
  const std::vector<std::string> keys = {"k"};
  EXPECT_TRUE(GroupAggregate(TwoGroups(), {}, keys, AggFunction::kCount, "v").rows.empty());
}

TEST(GroupByTest, Errors) {
  const Table t = TwoGroups();
  const std::vector<std::string> none;
  const std::vector<std::string> keys = {"k"};
  EXPECT_THROW(GroupAggregate(t, {0}, none, AggFunction::kSum, "v"), std::invalid_argument);
  EXPECT_THROW(GroupAggregate(t, {0}, keys, AggFunction::kSum, "zz"), std::invalid_argument);
  EXPECT_THROW(GroupAggregate(t, {0}, keys, AggFunction::kSum, "k"), std::invalid_argument);
  EXPECT_NO_THROW(GroupAggregate(t, {0}, keys, AggFunction::kCountDistinct, "k"));
}

TEST(GroupByTest, RandomTablesMatchNaiveScan) {
  Rng rng(4);
  const std::vector<std::vector<std::string>> key_sets = {{"k1"}, {"k2"}, {"k1", "k2"}};
  const std::vector<std::string> agg_columns = {"num", "cnt", "when", "cat"};
  for (int trial = 0; trial < 40; ++trial) {
    const Table t = testing::RandomTable(rng, 40);
    std::vector<PredicateSpec> preds;
    if (rng.Bernoulli(0.5)) preds.push_back(testing::RandomPredicate(rng, t, "num"));
    if (rng.Bernoulli(0.5)) preds.push_back(testing::RandomPredicate(rng, t, "cat"));
    const RowSelection sel = SelectRows(t, preds);
    for (const auto& keys : key_sets) {
      for (AggFunction fn : kAllAggFunctions) {
        for (const auto& a : agg_columns) {
          if (a == "cat" && IsNumericOnly(fn)) continue;
          const KeyedFeature got = GroupAggregate(t, sel, keys, fn, a);
          const auto want = testing::RefGroupBy(t, preds, keys, fn, a);
          ASSERT_EQ(got.rows.size(), want.size()) << AggName(fn) << " " << a;
          for (const auto& [key, value] : want) {
            const auto it = got.rows.find(key);
            ASSERT_NE(it, got.rows.end());
            ASSERT_TRUE(testing::NearRelative(it->second, value))
                << AggName(fn) << " " << a << ": " << it->second << " vs " << value;
          }
        }
      }
    }
  }
}

TEST(AugmentTest, MissingFractionExtremes) {
  const Table r = TwoGroups();
  const std::vector<std::string> keys = {"k"};
  const KeyedFeature f = GroupAggregate(r, {0, 1, 2}, keys, AggFunction::kSum, "v");
  const Table all("D", {Column("k", ColumnKind::kText,
                               {Value(std::string("k2")), Value(std::string("k1"))})});
  const FeatureColumn a = Augment(all, f, keys, -1.0, "f");
  EXPECT_EQ(a.values, (std::vector<double>{3.0, 3.0}));
  EXPECT_EQ(a.missing_fraction, 0.0);
  const Table none("D", {Column("k", ColumnKind::kText,
                                {Value(std::string("zz")), Value{}})});
  const FeatureColumn b = Augment(none, f, keys, -1.0, "f");
  EXPECT_EQ(b.values, (std::vector<double>{-1.0, -1.0}));
  EXPECT_EQ(b.missing_fraction, 1.0);
}

TEST(AugmentTest, KindMismatchRejected) {
  const Table r = TwoGroups();
  const std::vector<std::string> keys = {"k"};
  const KeyedFeature f = GroupAggregate(r, {0}, keys, AggFunction::kSum, "v");
  const Table d("D", {Column("k", ColumnKind::kInt, {Value(int64_t{1})})});
  EXPECT_THROW(Augment(d, f, keys, 0.0, "f"), std::invalid_argument);
}

TEST(AugmentTest, MatchesNestedLoopJoin) {
  Rng rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const Table r = testing::RandomTable(rng, 30);
    const Table d = testing::RandomTrainFor(rng, r, 25);
    const std::vector<std::string> keys = {"k1", "k2"};
    const KeyedFeature f = GroupAggregate(r, SelectRows(r, {}), keys, AggFunction::kAvg, "cnt");
    const FeatureColumn got = Augment(d, f, keys, -7.0, "f");
    const auto want = testing::RefLeftJoin(d, testing::RefGroupBy(r, {}, keys, AggFunction::kAvg, "cnt"),
                                           keys, -7.0);
    ASSERT_EQ(got.values.size(), want.size());
    size_t missing = 0;
    for (size_t i = 0; i < want.size(); ++i) {
      ASSERT_TRUE(testing::NearRelative(got.values[i], want[i]));
    }
    for (size_t i = 0; i < d.row_count(); ++i) {
      bool found = false;
      for (const auto& [key, v] : f.rows) {
        found = found || (CompareValues(key[0], d.Cell(i, "k1")) == 0 &&
                          CompareValues(key[1], d.Cell(i, "k2")) == 0);
      }
      missing += found ? 0 : 1;
    }
    EXPECT_DOUBLE_EQ(got.missing_fraction, static_cast<double>(missing) / d.row_count());
  }
}

}  // namespace
}  // namespace featforge
