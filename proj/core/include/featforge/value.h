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

#ifndef FEATFORGE_VALUE_H_
#define FEATFORGE_VALUE_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace featforge {

enum class ColumnKind { kInt, kFloat, kText, kDateTime };

std::string_view KindName(ColumnKind kind);
std::optional<ColumnKind> ParseKind(std::string_view name);

// Seconds since 1970-01-01T00:00:00 (UTC, no leap seconds).
struct DateTime {
  int64_t seconds = 0;
  friend auto operator<=>(const DateTime&, const DateTime&) = default;
};

// Parses "YYYY-MM-DD", "YYYY-MM-DDTHH:MM:SS" or "YYYY-MM-DD HH:MM:SS".
std::optional<DateTime> ParseDateTime(std::string_view text);
// Renders a date only when the time of day is midnight, so values loaded
// from date-only cells render back unchanged.
std::string FormatDateTime(DateTime value);

// A single cell. std::monostate is Null.
using Value = std::variant<std::monostate, int64_t, double, std::string, DateTime>;

inline bool IsNull(const Value& v) {
  return std::holds_alternative<std::monostate>(v);
}

// Numeric view of Int, Float and DateTime values. Text and Null are nullopt.
std::optional<double> AsNumber(const Value& v);

// Three-way comparison of two non-null values of compatible kinds. Int and
// Float compare numerically with each other; DateTime only with DateTime;
// Text only with Text.
std::partial_ordering CompareValues(const Value& a, const Value& b);

// Shortest decimal text that parses back to the same double.
std::string FormatDouble(double v);

// Plain rendering used for CSV cells and diagnostics. Null renders empty.
std::string FormatValue(const Value& v);

// Parses one CSV cell into a value of the given kind; empty text is Null.
// Returns nullopt when the text does not parse.
std::optional<Value> ParseValue(std::string_view text, ColumnKind kind);

}  // namespace featforge

#endif  // FEATFORGE_VALUE_H_
