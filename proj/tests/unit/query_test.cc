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

#include "featforge/query.h"

#include <gtest/gtest.h>

#include "support/oracles.h"

namespace featforge {
namespace {

using testing::UserLogs;

QueryTemplate LogsTemplate() {
  return {{AggFunction::kSum, AggFunction::kAvg, AggFunction::kMax},
          {"pprice"},
          {"department", "timestamp"},
          {"cname"}};
}

CandidateQuery GroceryQuery() {
  return {LogsTemplate(),
          AggFunction::kAvg,
          "pprice",
          {{"department", Equality{Value(std::string("Electronics"))}},
           {"timestamp", Range{Value(*ParseDateTime("2023-07-01")), std::nullopt}}},
          {"cname"}};
}

Table Customers() {
  return Table("User_Info",
               {Column("cname", ColumnKind::kText,
                       {Value(std::string("Amy")), Value(std::string("Bob")),
                        Value(std::string("Cal")), Value(std::string("Dan"))}),
                Column("age", ColumnKind::kInt,
                       {Value(int64_t{30}), Value(int64_t{41}), Value(int64_t{25}),
                        Value(int64_t{52})})});
}

TEST(RenderSqlTest, GroceryQueryText) {
  EXPECT_EQ(RenderSql(GroceryQuery(), "User_Logs"),
            "SELECT cname, AVG(pprice) AS feature FROM User_Logs WHERE department = "
            "'Electronics' AND timestamp >= '2023-07-01' GROUP BY cname");
}

TEST(RenderSqlTest, NoPredicatesNoWhere) {
  CandidateQuery q = GroceryQuery();
  q.predicates.clear();
  EXPECT_EQ(RenderSql(q, "User_Logs"),
            "SELECT cname, AVG(pprice) AS feature FROM User_Logs GROUP BY cname");
}

TEST(RenderSqlTest, TwoKeysAndBothBounds) {
  CandidateQuery q{{{AggFunction::kSum}, {"v"}, {"n"}, {"k1", "k2"}},
                   AggFunction::kSum,
                   "v",
                   {{"n", Range{Value(1.5), Value(int64_t{3})}}},
                   {"k1", "k2"}};
  EXPECT_EQ(RenderSql(q, "R"),
            "SELECT k1, k2, SUM(v) AS feature FROM R WHERE n >= 1.5 AND n <= 3 GROUP BY k1, k2");
}

TEST(RenderSqlTest, QuotesAreEscaped) {
  EXPECT_EQ(SqlLiteral(Value(std::string("O'Neil"))), "'O''Neil'");
  EXPECT_EQ(SqlLiteral(Value(*ParseDateTime("2023-07-01T08:00:00"))), "'2023-07-01T08:00:00'");
}

TEST(FeatureNameTest, StableHash) {
  const std::string sql = RenderSql(GroceryQuery(), "User_Logs");
  const std::string name = FeatureName(sql);
  EXPECT_EQ(name.size(), 18u);
  EXPECT_EQ(name.substr(0, 2), "q_");
  EXPECT_EQ(name, FeatureName(sql));
  EXPECT_NE(name, FeatureName(sql + " "));
}

TEST(ExecuteTest, GroceryQueryOnToyLogs) {
  const Table logs = UserLogs();
  const Table users = Customers();
  const CandidateQuery q = GroceryQuery();
  const FeatureColumn f = Execute(q, logs, users, -1.0);
  // Amy: row 0 (120); Bob: row 3 (40); Cal and Dan have no matching rows.
  EXPECT_EQ(f.values, (std::vector<double>{120.0, 40.0, -1.0, -1.0}));
  EXPECT_DOUBLE_EQ(f.missing_fraction, 0.5);
  const auto ref = testing::RefLeftJoin(
      users, testing::RefGroupBy(logs, q.predicates, q.keys, q.function, q.agg_column), q.keys,
      -1.0);
  EXPECT_EQ(f.values, ref);
  EXPECT_EQ(f.name, FeatureName(RenderSql(q, "User_Logs")));
  const FeatureColumn again = Execute(q, logs, users, -1.0);
  EXPECT_EQ(again.values, f.values);
}

TEST(ExecuteTest, EmptySelectionIsAllFill) {
  CandidateQuery q = GroceryQuery();
  q.predicates[0] = {"department", Equality{Value(std::string("Garden"))}};
  const FeatureColumn f = Execute(q, UserLogs(), Customers(), 0.0);
  EXPECT_EQ(f.values, (std::vector<double>(4, 0.0)));
  EXPECT_EQ(f.missing_fraction, 1.0);
}

TEST(CanonicalTemplateTest, OrdersPredicatesByTable) {
  QueryTemplate t = LogsTemplate();
  t.predicate_columns = {"timestamp", "department"};
  EXPECT_EQ(CanonicalTemplate(t, UserLogs()).predicate_columns,
            (std::vector<std::string>{"department", "timestamp"}));
}

TEST(CanonicalTemplateTest, RejectsInvalid) {
  const Table logs = UserLogs();
  const Table users = Customers();
  QueryTemplate t = LogsTemplate();
  t.functions.clear();
  EXPECT_THROW(CanonicalTemplate(t, logs), std::invalid_argument);
  t = LogsTemplate();
  t.predicate_columns = {"department", "department"};
  EXPECT_THROW(CanonicalTemplate(t, logs), std::invalid_argument);
  t = LogsTemplate();
  t.agg_columns = {"missing"};
  EXPECT_THROW(CanonicalTemplate(t, logs), std::invalid_argument);
  t = LogsTemplate();
  t.key_columns = {"department"};
  EXPECT_THROW(CanonicalTemplate(t, logs, &users), std::invalid_argument);
  t = LogsTemplate();
  t.agg_columns = {"department"};
  EXPECT_THROW(CanonicalTemplate(t, logs), std::invalid_argument);
  t.functions = {AggFunction::kCountDistinct, AggFunction::kMode};
  EXPECT_NO_THROW(CanonicalTemplate(t, logs));
}

}  // namespace
}  // namespace featforge
