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

#include "featforge/search_space.h"

#include <gtest/gtest.h>

#include "featforge/random.h"
#include "support/oracles.h"

namespace featforge {
namespace {

QueryTemplate LogsTemplate() {
  return {{AggFunction::kSum, AggFunction::kAvg, AggFunction::kMax},
          {"pprice"},
          {"department", "timestamp"},
          {"cname"}};
}

// Five departments so that the equality slot can hold 4.
Table Logs() {
  const char* depts[] = {"Books", "Clothing", "Electronics", "Grocery", "Toys", "Books"};
  const char* days[] = {"2023-03-01", "2023-04-01", "2023-05-01",
                        "2023-06-01", "2023-07-01", "2023-08-01"};
  std::vector<Value> cname, dept, ts, price;
  for (int i = 0; i < 6; ++i) {
    cname.emplace_back(std::string(i % 2 ? "Amy" : "Bob"));
    dept.emplace_back(std::string(depts[i]));
    ts.emplace_back(*ParseDateTime(days[i]));
    price.emplace_back(10.0 * (i + 1));
  }
  return Table("User_Logs", {Column("cname", ColumnKind::kText, cname),
                             Column("department", ColumnKind::kText, dept),
                             Column("timestamp", ColumnKind::kDateTime, ts),
                             Column("pprice", ColumnKind::kFloat, price)});
}

Table Mixed() {
  Rng rng(9);
  std::vector<Value> k1, k2, c1, c2, n, v;
  for (int i = 0; i < 30; ++i) {
    k1.emplace_back(static_cast<int64_t>(rng.UniformIndex(4)));
    k2.emplace_back(static_cast<int64_t>(rng.UniformIndex(3)));
    c1.emplace_back(std::string(1, static_cast<char>('a' + rng.UniformIndex(5))));
    c2.emplace_back(std::string(1, static_cast<char>('p' + rng.UniformIndex(3))));
    n.emplace_back(std::round(rng.Normal(0, 10)));
    v.emplace_back(rng.Normal(0, 1));
  }
  return Table("R", {Column("k1", ColumnKind::kInt, k1), Column("k2", ColumnKind::kInt, k2),
                     Column("c1", ColumnKind::kText, c1), Column("c2", ColumnKind::kText, c2),
                     Column("n", ColumnKind::kFloat, n), Column("v", ColumnKind::kFloat, v)});
}

size_t IndexOf(const Dimension& d, const Value& v) {
  for (size_t i = 0; i < d.values.size(); ++i) {
    if (CompareValues(d.values[i], v) == 0) return i;
  }
  return d.values.size();
}

TEST(BuildSpaceTest, DimensionCounts) {
  EXPECT_EQ(BuildSpace(LogsTemplate(), Logs()).size(), 6u);
  QueryTemplate t = LogsTemplate();
  t.predicate_columns.clear();
  EXPECT_EQ(BuildSpace(t, Logs()).size(), 3u);
  const QueryTemplate mixed{{AggFunction::kSum}, {"v"}, {"c1", "c2", "n"}, {"k1", "k2"}};
  EXPECT_EQ(BuildSpace(mixed, Mixed()).size(), 8u);
}

TEST(BuildSpaceTest, Layout) {
  const SearchSpace s = BuildSpace(LogsTemplate(), Logs());
  EXPECT_EQ(s.dim(0).role, DimRole::kFunction);
  EXPECT_EQ(s.dim(0).cardinality(), 3u);
  EXPECT_EQ(s.dim(1).role, DimRole::kAggColumn);
  EXPECT_EQ(s.dim(2).role, DimRole::kEquality);
  EXPECT_EQ(s.dim(2).cardinality(), 6u);  // five departments plus None
  EXPECT_EQ(s.dim(3).role, DimRole::kRangeLower);
  EXPECT_EQ(s.dim(4).role, DimRole::kRangeUpper);
  EXPECT_EQ(s.dim(5).kind, DimKind::kBinary);
  for (size_t i = 2; i < 5; ++i) EXPECT_EQ(s.dim(i).kind, DimKind::kOptionalCategorical);
}

TEST(DecodeTest, GroceryVector) {
  const SearchSpace s = BuildSpace(LogsTemplate(), Logs());
  const Value may = Value(*ParseDateTime("2023-05-01"));
  const int lower = static_cast<int>(IndexOf(s.dim(3), may)) + 1;
  const QueryVector v{{1, 0, 4, lower, 0, 0}};
  const CandidateQuery q = Decode(s, v);
  EXPECT_EQ(q.function, AggFunction::kAvg);
  EXPECT_EQ(q.agg_column, "pprice");
  ASSERT_EQ(q.predicates.size(), 2u);
  // Slot 4 is the fourth department in ascending order.
  EXPECT_EQ(q.predicates[0],
            (PredicateSpec{"department", Equality{Value(std::string("Grocery"))}}));
  EXPECT_EQ(q.predicates[1], (PredicateSpec{"timestamp", Range{may, std::nullopt}}));
  EXPECT_EQ(q.keys, (std::vector<std::string>{"cname"}));
  const QueryVector enc = Encode(q, s);
  EXPECT_EQ(enc, Repair(s, v));
  EXPECT_EQ(enc.slots.back(), 1);
  EXPECT_EQ(Decode(s, enc), q);
}

TEST(DecodeTest, AllNoneGivesNoPredicates) {
  const SearchSpace s = BuildSpace(LogsTemplate(), Logs());
  const CandidateQuery q = Decode(s, QueryVector{{0, 0, 0, 0, 0, 1}});
  EXPECT_TRUE(q.predicates.empty());
  EXPECT_EQ(Encode(q, s).slots, (std::vector<int>{0, 0, 0, 0, 0, 1}));
}

TEST(DecodeTest, InvertedRangeSwapped) {
  const QueryTemplate t{{AggFunction::kSum}, {"v"}, {"n"}, {"k1"}};
  const SearchSpace s = BuildSpace(t, Mixed());
  ASSERT_GE(s.dim(2).cardinality(), 10u);
  const CandidateQuery q = Decode(s, QueryVector{{0, 0, 9, 3, 1}});
  const auto& r = std::get<Range>(q.predicates.at(0).form);
  EXPECT_TRUE(CompareValues(*r.lower, s.dim(2).values[2]) == 0);
  EXPECT_TRUE(CompareValues(*r.upper, s.dim(3).values[8]) == 0);
  EXPECT_EQ(Repair(s, QueryVector{{0, 0, 9, 3, 1}}).slots, (std::vector<int>{0, 0, 3, 9, 1}));
}

TEST(DecodeTest, OutOfDomainThrows) {
  const SearchSpace s = BuildSpace(LogsTemplate(), Logs());
  EXPECT_THROW(Decode(s, QueryVector{{3, 0, 0, 0, 0, 1}}), std::out_of_range);
  EXPECT_THROW(Decode(s, QueryVector{{0, 0, 0, 0, 1}}), std::out_of_range);
}

TEST(EncodeTest, RejectsForeignQueries) {
  const SearchSpace s = BuildSpace(LogsTemplate(), Logs());
  CandidateQuery q = Decode(s, QueryVector{{0, 0, 1, 0, 0, 1}});
  CandidateQuery bad = q;
  bad.predicates[0] = {"department", Equality{Value(std::string("Garden"))}};
  EXPECT_THROW(Encode(bad, s), std::invalid_argument);
  bad = q;
  bad.function = AggFunction::kMedian;
  EXPECT_THROW(Encode(bad, s), std::invalid_argument);
  bad = q;
  bad.keys.clear();
  EXPECT_THROW(Encode(bad, s), std::invalid_argument);
  bad = q;
  bad.tmpl.functions.pop_back();
  EXPECT_THROW(Encode(bad, s), std::invalid_argument);
}

TEST(CodecTest, RandomRoundTrip) {
  Rng rng(10);
  const Table t = Mixed();
  const std::vector<std::string> attrs = {"c1", "c2", "n", "v"};
  for (int trial = 0; trial < 20; ++trial) {
    QueryTemplate tmpl{{AggFunction::kSum, AggFunction::kMode}, {"v", "n"}, {}, {"k1", "k2"}};
    for (const auto& a : attrs) {
      if (rng.Bernoulli(0.5)) tmpl.predicate_columns.push_back(a);
    }
    const SearchSpace s = BuildSpace(tmpl, t, {64, 1 + rng.UniformIndex(8)});
    for (int i = 0; i < 500; ++i) {
      QueryVector v;
      for (const auto& d : s.dims()) v.slots.push_back(static_cast<int>(rng.UniformIndex(d.cardinality())));
      ASSERT_TRUE(s.Conforms(v));
      const QueryVector repaired = Repair(s, v);
      ASSERT_EQ(Encode(Decode(s, v), s), repaired);
      ASSERT_EQ(Repair(s, repaired), repaired);
    }
  }
}

}  // namespace
}  // namespace featforge
