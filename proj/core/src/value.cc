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

#include "featforge/value.h"

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>

namespace featforge {
namespace {

bool ParseFixedDigits(std::string_view text, size_t pos, size_t width,
                      int& out) {
  if (pos + width > text.size()) return false;
  int value = 0;
  for (size_t i = pos; i < pos + width; ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  out = value;
  return true;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view KindName(ColumnKind kind) {
  switch (kind) {
    case ColumnKind::kInt: return "int";
    case ColumnKind::kFloat: return "float";
    case ColumnKind::kText: return "text";
    case ColumnKind::kDateTime: return "datetime";
  }
  return "unknown";
}

std::optional<ColumnKind> ParseKind(std::string_view name) {
  if (name == "int") return ColumnKind::kInt;
  if (name == "float") return ColumnKind::kFloat;
  if (name == "text") return ColumnKind::kText;
  if (name == "datetime") return ColumnKind::kDateTime;
  return std::nullopt;
}

std::optional<DateTime> ParseDateTime(std::string_view text) {
  using namespace std::chrono;
  text = Trim(text);
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
  if (text.size() != 10 && text.size() != 19) return std::nullopt;
  if (!ParseFixedDigits(text, 0, 4, y) || text[4] != '-' ||
      !ParseFixedDigits(text, 5, 2, mo) || text[7] != '-' ||
      !ParseFixedDigits(text, 8, 2, d)) {
    return std::nullopt;
  }
  if (text.size() == 19) {
    if ((text[10] != 'T' && text[10] != ' ') ||
        !ParseFixedDigits(text, 11, 2, h) || text[13] != ':' ||
        !ParseFixedDigits(text, 14, 2, mi) || text[16] != ':' ||
        !ParseFixedDigits(text, 17, 2, s)) {
      return std::nullopt;
    }
    if (h > 23 || mi > 59 || s > 59) return std::nullopt;
  }
  const year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)},
                           day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) return std::nullopt;
  const int64_t days = sys_days{ymd}.time_since_epoch().count();
  return DateTime{days * 86400 + h * 3600 + mi * 60 + s};
}

std::string FormatDateTime(DateTime value) {
  using namespace std::chrono;
  int64_t days = value.seconds / 86400;
  int64_t rem = value.seconds % 86400;
  if (rem < 0) {
    rem += 86400;
    --days;
  }
  const year_month_day ymd{sys_days{std::chrono::days{days}}};
  std::array<char, 32> buf{};
  if (rem == 0) {
    std::snprintf(buf.data(), buf.size(), "%04d-%02u-%02u",
                  static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()),
                  static_cast<unsigned>(ymd.day()));
  } else {
    std::snprintf(buf.data(), buf.size(), "%04d-%02u-%02uT%02d:%02d:%02d",
                  static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()),
                  static_cast<unsigned>(ymd.day()), static_cast<int>(rem / 3600),
                  static_cast<int>(rem / 60 % 60), static_cast<int>(rem % 60));
  }
  return std::string(buf.data());
}

std::optional<double> AsNumber(const Value& v) {
  if (const auto* i = std::get_if<int64_t>(&v)) return static_cast<double>(*i);
  if (const auto* f = std::get_if<double>(&v)) return *f;
  if (const auto* t = std::get_if<DateTime>(&v)) {
    return static_cast<double>(t->seconds);
  }
  return std::nullopt;
}

std::partial_ordering CompareValues(const Value& a, const Value& b) {
  if (const auto* sa = std::get_if<std::string>(&a)) {
    if (const auto* sb = std::get_if<std::string>(&b)) return *sa <=> *sb;
    return std::partial_ordering::unordered;
  }
  if (const auto* da = std::get_if<DateTime>(&a)) {
    if (const auto* db = std::get_if<DateTime>(&b)) return *da <=> *db;
    return std::partial_ordering::unordered;
  }
  const auto* ia = std::get_if<int64_t>(&a);
  const auto* ib = std::get_if<int64_t>(&b);
  if (ia && ib) return *ia <=> *ib;
  const auto na = AsNumber(a);
  const auto nb = AsNumber(b);
  if (!na || !nb || std::holds_alternative<DateTime>(b)) {
    return std::partial_ordering::unordered;
  }
  return *na <=> *nb;
}

std::string FormatDouble(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string FormatValue(const Value& v) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const { return FormatDouble(d); }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(DateTime t) const { return FormatDateTime(t); }
  };
  return std::visit(Visitor{}, v);
}

std::optional<Value> ParseValue(std::string_view text, ColumnKind kind) {
  if (text.empty()) return Value{};
  switch (kind) {
    case ColumnKind::kText:
      return Value{std::string(text)};
    case ColumnKind::kInt: {
      const std::string_view t = Trim(text);
      int64_t out = 0;
      const char* begin = t.data();
      if (!t.empty() && t.front() == '+') ++begin;
      auto [ptr, ec] = std::from_chars(begin, t.data() + t.size(), out);
      if (ec != std::errc() || ptr != t.data() + t.size() || begin == ptr) {
        return std::nullopt;
      }
      return Value{out};
    }
    case ColumnKind::kFloat: {
      const std::string_view t = Trim(text);
      double out = 0;
      const char* begin = t.data();
      if (!t.empty() && t.front() == '+') ++begin;
      auto [ptr, ec] = std::from_chars(begin, t.data() + t.size(), out);
      if (ec != std::errc() || ptr != t.data() + t.size() || begin == ptr ||
          !std::isfinite(out)) {
        return std::nullopt;
      }
      return Value{out};
    }
    case ColumnKind::kDateTime: {
      auto dt = ParseDateTime(text);
      if (!dt) return std::nullopt;
      return Value{*dt};
    }
  }
  return std::nullopt;
}

}  // namespace featforge
