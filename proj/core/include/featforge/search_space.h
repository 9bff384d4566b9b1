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

#ifndef FEATFORGE_SEARCH_SPACE_H_
#define FEATFORGE_SEARCH_SPACE_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "featforge/domain.h"
#include "featforge/query.h"

namespace featforge {

enum class DimKind { kCategorical, kOptionalCategorical, kBinary };

// What a dimension controls in the decoded query.
enum class DimRole {
  kFunction,
  kAggColumn,
  kEquality,
  kRangeLower,
  kRangeUpper,
  kKey,
};

// Every dimension is finite. A slot is an ordinal in [0, cardinality):
//   kCategorical         index into F or A;
//   kOptionalCategorical 0 means None, i >= 1 means values[i - 1];
//   kBinary              0 or 1.
struct Dimension {
  DimKind kind = DimKind::kCategorical;
  DimRole role = DimRole::kFunction;
  // Predicate or key column; empty for the function and agg-column dims.
  std::string column;
  // Candidate predicate values (kOptionalCategorical only), ascending.
  std::vector<Value> values;
  size_t categorical_size = 0;

  size_t cardinality() const;
};

struct QueryVector {
  std::vector<int> slots;
  friend auto operator<=>(const QueryVector&, const QueryVector&) = default;
};

// The query pool of one template as a product of finite dimensions, laid out
// as [function, agg column, predicate part, key bits]. The predicate part has
// one dim per categorical column and a (lower, upper) pair per numeric or
// datetime column, in the template's predicate order.
class SearchSpace {
 public:
  SearchSpace(QueryTemplate tmpl, std::vector<Dimension> dims)
      : tmpl_(std::move(tmpl)), dims_(std::move(dims)) {}

  const QueryTemplate& tmpl() const { return tmpl_; }
  const std::vector<Dimension>& dims() const { return dims_; }
  size_t size() const { return dims_.size(); }
  const Dimension& dim(size_t i) const { return dims_[i]; }

  bool Conforms(const QueryVector& v) const;

 private:
  QueryTemplate tmpl_;
  std::vector<Dimension> dims_;
};

// Builds the space for a template over `relevant`, drawing predicate values
// from ValueDomain. The template is canonicalised first.
SearchSpace BuildSpace(const QueryTemplate& tmpl, const Table& relevant,
                       const DomainConfig& config = {});

// Canonical form of a conforming vector: range pairs with lower > upper are
// swapped and an all-zero key part gets its first bit set.
QueryVector Repair(const SearchSpace& space, QueryVector v);

// Maps a conforming vector to its query (repairing on the way). Throws
// std::out_of_range when a slot is outside its dimension.
CandidateQuery Decode(const SearchSpace& space, const QueryVector& v);

// Inverse of Decode on repaired vectors. Throws std::invalid_argument when
// the query does not belong to the space's template or uses predicate
// values outside the space's domains.
QueryVector Encode(const CandidateQuery& query, const SearchSpace& space);

}  // namespace featforge

#endif  // FEATFORGE_SEARCH_SPACE_H_
