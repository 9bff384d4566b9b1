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

#ifndef FEATFORGE_QUERY_H_
#define FEATFORGE_QUERY_H_

#include <string>
#include <vector>

#include "featforge/aggregate.h"
#include "featforge/group_by.h"
#include "featforge/predicate.h"
#include "featforge/table.h"

namespace featforge {

// (F, A, P, K): candidate aggregation functions, aggregation columns,
// predicate columns and foreign-key columns of the relevant table.
struct QueryTemplate {
  std::vector<AggFunction> functions;
  std::vector<std::string> agg_columns;
  std::vector<std::string> predicate_columns;
  std::vector<std::string> key_columns;

  friend bool operator==(const QueryTemplate&, const QueryTemplate&) = default;
};

// Checks the template against the relevant table (and the training table
// when given) and returns it with predicate columns in the relevant table's
// column order. Throws std::invalid_argument on empty F/A/K, unknown or
// duplicate columns, keys missing from `train`, or a text aggregation column
// paired with a numeric-only function.
QueryTemplate CanonicalTemplate(QueryTemplate tmpl, const Table& relevant,
                                const Table* train = nullptr);

// One member of a template's query pool.
struct CandidateQuery {
  QueryTemplate tmpl;
  AggFunction function = AggFunction::kCount;
  std::string agg_column;
  // In the template's predicate column order; absent columns are omitted.
  std::vector<PredicateSpec> predicates;
  // Non-empty subset of the template keys, in template order.
  std::vector<std::string> keys;

  friend bool operator==(const CandidateQuery&, const CandidateQuery&) = default;
};

// Literal as it appears in rendered SQL: quoted text and datetimes,
// shortest round-trip decimals for floats.
std::string SqlLiteral(const Value& v);

// SELECT <keys>, <FN>(<a>) AS feature FROM <R> [WHERE <conj>] GROUP BY <keys>
std::string RenderSql(const CandidateQuery& query,
                      const std::string& relevant_name);

// Stable column name derived from the rendered SQL ("q_" + 16 hex digits
// of its 64-bit FNV-1a hash).
std::string FeatureName(const std::string& sql);

// Filter and group: the query's result table q(R).
KeyedFeature EvaluateQuery(const CandidateQuery& query, const Table& relevant);

// Filter, group and left-join in one call.
FeatureColumn Execute(const CandidateQuery& query, const Table& relevant,
                      const Table& train, double fill);

}  // namespace featforge

#endif  // FEATFORGE_QUERY_H_
