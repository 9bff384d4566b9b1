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

#include <algorithm>
#include <stdexcept>

namespace featforge {
namespace {

int IndexOf(const std::vector<Value>& values, const Value& v) {
  for (size_t i = 0; i < values.size(); ++i) {
    if (CompareValues(values[i], v) == std::partial_ordering::equivalent) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

template <typename T>
int IndexOf(const std::vector<T>& items, const T& item) {
  auto it = std::find(items.begin(), items.end(), item);
  return it == items.end() ? -1 : static_cast<int>(it - items.begin());
}

}  // namespace

size_t Dimension::cardinality() const {
  switch (kind) {
    case DimKind::kCategorical: return categorical_size;
    case DimKind::kOptionalCategorical: return values.size() + 1;
    case DimKind::kBinary: return 2;
  }
  return 0;
}

bool SearchSpace::Conforms(const QueryVector& v) const {
  if (v.slots.size() != dims_.size()) return false;
  for (size_t i = 0; i < dims_.size(); ++i) {
    if (v.slots[i] < 0 ||
        static_cast<size_t>(v.slots[i]) >= dims_[i].cardinality()) {
      return false;
    }
  }
  return true;
}

SearchSpace BuildSpace(const QueryTemplate& raw, const Table& relevant,
                       const DomainConfig& config) {
  QueryTemplate tmpl = CanonicalTemplate(raw, relevant);
  std::vector<Dimension> dims;
  dims.push_back({DimKind::kCategorical, DimRole::kFunction, "", {},
                  tmpl.functions.size()});
  dims.push_back({DimKind::kCategorical, DimRole::kAggColumn, "", {},
                  tmpl.agg_columns.size()});
  for (const std::string& p : tmpl.predicate_columns) {
    Domain domain = ValueDomain(relevant, p, config);
    if (domain.kind == DomainKind::kCategorical) {
      dims.push_back({DimKind::kOptionalCategorical, DimRole::kEquality, p,
                      std::move(domain.values), 0});
    } else {
      dims.push_back({DimKind::kOptionalCategorical, DimRole::kRangeLower, p,
                      domain.values, 0});
      dims.push_back({DimKind::kOptionalCategorical, DimRole::kRangeUpper, p,
                      std::move(domain.values), 0});
    }
  }
  for (const std::string& k : tmpl.key_columns) {
    dims.push_back({DimKind::kBinary, DimRole::kKey, k, {}, 0});
  }
  return SearchSpace(std::move(tmpl), std::move(dims));
}

QueryVector Repair(const SearchSpace& space, QueryVector v) {
  bool any_key = false;
  int first_key = -1;
  for (size_t i = 0; i < space.size(); ++i) {
    const Dimension& d = space.dim(i);
    if (d.role == DimRole::kRangeLower && i + 1 < space.size()) {
      int& lo = v.slots[i];
      int& hi = v.slots[i + 1];
      // Grid values ascend, so slot order is value order.
      if (lo != 0 && hi != 0 && lo > hi) std::swap(lo, hi);
    } else if (d.role == DimRole::kKey) {
      if (first_key < 0) first_key = static_cast<int>(i);
      any_key = any_key || v.slots[i] != 0;
    }
  }
  if (!any_key && first_key >= 0) v.slots[first_key] = 1;
  return v;
}

CandidateQuery Decode(const SearchSpace& space, const QueryVector& raw) {
  if (!space.Conforms(raw)) {
    throw std::out_of_range("query vector does not conform to the search space");
  }
  const QueryVector v = Repair(space, raw);
  const QueryTemplate& tmpl = space.tmpl();
  CandidateQuery q;
  q.tmpl = tmpl;
  for (size_t i = 0; i < space.size(); ++i) {
    const Dimension& d = space.dim(i);
    const int slot = v.slots[i];
    switch (d.role) {
      case DimRole::kFunction:
        q.function = tmpl.functions[slot];
        break;
      case DimRole::kAggColumn:
        q.agg_column = tmpl.agg_columns[slot];
        break;
      case DimRole::kEquality:
        if (slot != 0) q.predicates.push_back({d.column, Equality{d.values[slot - 1]}});
        break;
      case DimRole::kRangeLower: {
        const int hi = v.slots[i + 1];
        if (slot == 0 && hi == 0) break;
        Range r;
        if (slot != 0) r.lower = d.values[slot - 1];
        if (hi != 0) r.upper = space.dim(i + 1).values[hi - 1];
        q.predicates.push_back({d.column, std::move(r)});
        break;
      }
      case DimRole::kRangeUpper:
        break;
      case DimRole::kKey:
        if (slot != 0) q.keys.push_back(d.column);
        break;
    }
  }
  return q;
}

QueryVector Encode(const CandidateQuery& query, const SearchSpace& space) {
  const QueryTemplate& tmpl = space.tmpl();
  if (!(query.tmpl == tmpl)) {
    throw std::invalid_argument("query belongs to a different template");
  }
  QueryVector v;
  v.slots.assign(space.size(), 0);

  // Predicates must follow the template's predicate order, one per column.
  size_t next_pred = 0;
  for (const PredicateSpec& p : query.predicates) {
    const int pos = IndexOf(tmpl.predicate_columns, p.column);
    if (pos < 0 || static_cast<size_t>(pos) < next_pred) {
      throw std::invalid_argument("predicate column '" + p.column +
                                  "' is not in template order");
    }
    next_pred = static_cast<size_t>(pos) + 1;
  }
  if (query.keys.empty()) throw std::invalid_argument("query has no keys");
  for (const std::string& k : query.keys) {
    if (IndexOf(tmpl.key_columns, k) < 0) {
      throw std::invalid_argument("key '" + k + "' is not a template key");
    }
  }

  auto find_predicate = [&](const std::string& column) -> const PredicateSpec* {
    for (const PredicateSpec& p : query.predicates) {
      if (p.column == column) return &p;
    }
    return nullptr;
  };
  auto slot_of = [](const Dimension& d, const Value& value) {
    const int idx = IndexOf(d.values, value);
    if (idx < 0) {
      throw std::invalid_argument("value '" + FormatValue(value) +
                                  "' is outside the domain of '" + d.column + "'");
    }
    return idx + 1;
  };

  for (size_t i = 0; i < space.size(); ++i) {
    const Dimension& d = space.dim(i);
    switch (d.role) {
      case DimRole::kFunction: {
        const int idx = IndexOf(tmpl.functions, query.function);
        if (idx < 0) throw std::invalid_argument("function not in template");
        v.slots[i] = idx;
        break;
      }
      case DimRole::kAggColumn: {
        const int idx = IndexOf(tmpl.agg_columns, query.agg_column);
        if (idx < 0) throw std::invalid_argument("aggregation column not in template");
        v.slots[i] = idx;
        break;
      }
      case DimRole::kEquality:
        if (const PredicateSpec* p = find_predicate(d.column)) {
          const auto* eq = std::get_if<Equality>(&p->form);
          if (!eq) throw std::invalid_argument("expected equality on '" + d.column + "'");
          v.slots[i] = slot_of(d, eq->value);
        }
        break;
      case DimRole::kRangeLower:
        if (const PredicateSpec* p = find_predicate(d.column)) {
          const auto* r = std::get_if<Range>(&p->form);
          if (!r || (!r->lower && !r->upper)) {
            throw std::invalid_argument("expected a bounded range on '" + d.column + "'");
          }
          if (r->lower) v.slots[i] = slot_of(d, *r->lower);
          if (r->upper) v.slots[i + 1] = slot_of(space.dim(i + 1), *r->upper);
          if (r->lower && r->upper && v.slots[i] > v.slots[i + 1]) {
            throw std::invalid_argument("range on '" + d.column + "' is inverted");
          }
        }
        break;
      case DimRole::kRangeUpper:
        break;
      case DimRole::kKey:
        v.slots[i] = IndexOf(query.keys, d.column) >= 0 ? 1 : 0;
        break;
    }
  }
  return v;
}

}  // namespace featforge
