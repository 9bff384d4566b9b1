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

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <unordered_set>

namespace featforge {
namespace {

void RequireColumn(const Table& table, const std::string& column,
                   const char* role) {
  if (!table.HasColumn(column)) {
    throw std::invalid_argument(std::string(role) + " column '" + column +
                                "' is not in table '" + table.name() + "'");
  }
}

template <typename T>
void RequireUnique(const std::vector<T>& items, const char* role) {
  for (size_t i = 0; i < items.size(); ++i) {
    for (size_t j = i + 1; j < items.size(); ++j) {
      if (items[i] == items[j]) {
        throw std::invalid_argument(std::string("duplicate ") + role);
      }
    }
  }
}

std::string JoinKeys(const std::vector<std::string>& keys) {
  std::string out;
  for (size_t i = 0; i < keys.size(); ++i) {
    if (i) out += ", ";
    out += keys[i];
  }
  return out;
}

}  // namespace

QueryTemplate CanonicalTemplate(QueryTemplate tmpl, const Table& relevant,
                                const Table* train) {
  if (tmpl.functions.empty()) throw std::invalid_argument("template has no functions");
  if (tmpl.agg_columns.empty()) {
    throw std::invalid_argument("template has no aggregation columns");
  }
  if (tmpl.key_columns.empty()) throw std::invalid_argument("template has no keys");
  RequireUnique(tmpl.functions, "aggregation function");
  RequireUnique(tmpl.agg_columns, "aggregation column");
  RequireUnique(tmpl.predicate_columns, "predicate column");
  RequireUnique(tmpl.key_columns, "key column");

  const bool numeric_only = std::any_of(tmpl.functions.begin(), tmpl.functions.end(),
                                        [](AggFunction f) { return IsNumericOnly(f); });
  for (const auto& a : tmpl.agg_columns) {
    RequireColumn(relevant, a, "aggregation");
    if (numeric_only && !relevant.column(a).is_numeric()) {
      throw std::invalid_argument("aggregation column '" + a +
                                  "' is text but the template has numeric-only functions");
    }
  }
  for (const auto& p : tmpl.predicate_columns) RequireColumn(relevant, p, "predicate");
  for (const auto& k : tmpl.key_columns) {
    RequireColumn(relevant, k, "key");
    if (train) RequireColumn(*train, k, "key");
  }
  std::stable_sort(tmpl.predicate_columns.begin(), tmpl.predicate_columns.end(),
                   [&](const std::string& a, const std::string& b) {
                     return relevant.ColumnIndex(a) < relevant.ColumnIndex(b);
                   });
  return tmpl;
}

std::string SqlLiteral(const Value& v) {
  if (const auto* s = std::get_if<std::string>(&v)) {
    std::string out = "'";
    for (char c : *s) {
      if (c == '\'') out += '\'';
      out += c;
    }
    return out + "'";
  }
  if (const auto* t = std::get_if<DateTime>(&v)) {
    return "'" + FormatDateTime(*t) + "'";
  }
  if (IsNull(v)) return "NULL";
  return FormatValue(v);
}

std::string RenderSql(const CandidateQuery& query,
                      const std::string& relevant_name) {
  const std::string keys = JoinKeys(query.keys);
  std::string sql = "SELECT " + keys + ", " + std::string(AggName(query.function)) +
                    "(" + query.agg_column + ") AS feature FROM " + relevant_name;
  std::vector<std::string> terms;
  for (const PredicateSpec& p : query.predicates) {
    if (const auto* eq = std::get_if<Equality>(&p.form)) {
      terms.push_back(p.column + " = " + SqlLiteral(eq->value));
      continue;
    }
    const Range& r = std::get<Range>(p.form);
    if (r.lower) terms.push_back(p.column + " >= " + SqlLiteral(*r.lower));
    if (r.upper) terms.push_back(p.column + " <= " + SqlLiteral(*r.upper));
  }
  for (size_t i = 0; i < terms.size(); ++i) {
    sql += i == 0 ? " WHERE " : " AND ";
    sql += terms[i];
  }
  return sql + " GROUP BY " + keys;
}

std::string FeatureName(const std::string& sql) {
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : sql) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[24];
  std::snprintf(buf, sizeof buf, "q_%016llx", static_cast<unsigned long long>(h));
  return buf;
}

KeyedFeature EvaluateQuery(const CandidateQuery& query, const Table& relevant) {
  const RowSelection rows = SelectRows(relevant, query.predicates);
  return GroupAggregate(relevant, rows, query.keys, query.function, query.agg_column);
}

FeatureColumn Execute(const CandidateQuery& query, const Table& relevant,
                      const Table& train, double fill) {
  const KeyedFeature feature = EvaluateQuery(query, relevant);
  return Augment(train, feature, query.keys, fill,
                 FeatureName(RenderSql(query, relevant.name())));
}

}  // namespace featforge
