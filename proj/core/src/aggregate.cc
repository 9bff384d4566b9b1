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

#include "featforge/aggregate.h"

#include <algorithm>
#include <cmath>
#include <vector>

namespace featforge {
namespace {

constexpr std::array<std::string_view, 15> kNames = {
    "SUM",        "MIN",     "MAX",      "COUNT",    "AVG",
    "COUNT_DISTINCT", "VAR", "VAR_SAMPLE", "STD",    "STD_SAMPLE",
    "ENTROPY",    "KURTOSIS", "MODE",    "MAD",      "MEDIAN",
};

double Mean(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

// Sum of squared deviations from the mean (two-pass).
double CentralSumSquares(std::span<const double> v) {
  const double mean = Mean(v);
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return ss;
}

double MedianOfSorted(std::span<const double> sorted) {
  const size_t n = sorted.size();
  if (n % 2 == 1) return sorted[n / 2];
  return 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
}

std::vector<double> Sorted(std::span<const double> v) {
  std::vector<double> out(v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string_view AggName(AggFunction fn) {
  return kNames[static_cast<size_t>(fn)];
}

std::optional<AggFunction> ParseAggFunction(std::string_view name) {
  for (size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<AggFunction>(i);
  }
  return std::nullopt;
}

bool IsNumericOnly(AggFunction fn) {
  switch (fn) {
    case AggFunction::kCount:
    case AggFunction::kCountDistinct:
    case AggFunction::kEntropy:
    case AggFunction::kMode:
      return false;
    default:
      return true;
  }
}

std::optional<double> Aggregate(std::span<const double> values, AggFunction fn) {
  const size_t n = values.size();
  if (fn == AggFunction::kCount) return static_cast<double>(n);
  if (fn == AggFunction::kCountDistinct) {
    std::vector<double> s = Sorted(values);
    return static_cast<double>(std::unique(s.begin(), s.end()) - s.begin());
  }
  if (n == 0) return std::nullopt;

  // Accumulating in sorted order makes every function exactly invariant to
  // the order rows arrive in, floating-point sums included.
  const std::vector<double> sorted = Sorted(values);
  values = sorted;
  // A rounded mean can sit off a constant sample; spread is exactly zero.
  const bool constant = sorted.front() == sorted.back();

  switch (fn) {
    case AggFunction::kSum: {
      double sum = 0.0;
      for (double x : values) sum += x;
      return sum;
    }
    case AggFunction::kMin:
      return sorted.front();
    case AggFunction::kMax:
      return sorted.back();
    case AggFunction::kAvg:
      return constant ? sorted.front() : Mean(values);
    case AggFunction::kVar:
      if (constant) return 0.0;
      return CentralSumSquares(values) / static_cast<double>(n);
    case AggFunction::kStd:
      if (constant) return 0.0;
      return std::sqrt(CentralSumSquares(values) / static_cast<double>(n));
    case AggFunction::kVarSample:
      if (n < 2) return std::nullopt;
      if (constant) return 0.0;
      return CentralSumSquares(values) / static_cast<double>(n - 1);
    case AggFunction::kStdSample:
      if (n < 2) return std::nullopt;
      if (constant) return 0.0;
      return std::sqrt(CentralSumSquares(values) / static_cast<double>(n - 1));
    case AggFunction::kKurtosis: {
      if (n < 2 || constant) return std::nullopt;
      const double mean = Mean(values);
      double m2 = 0.0, m4 = 0.0;
      for (double x : values) {
        const double d2 = (x - mean) * (x - mean);
        m2 += d2;
        m4 += d2 * d2;
      }
      m2 /= static_cast<double>(n);
      m4 /= static_cast<double>(n);
      if (!(m2 > 0.0)) return std::nullopt;
      const double k = m4 / (m2 * m2) - 3.0;
      if (!std::isfinite(k)) return std::nullopt;
      return k;
    }
    case AggFunction::kEntropy: {
      const auto& s = sorted;
      double h = 0.0;
      for (size_t i = 0; i < n;) {
        size_t j = i;
        while (j < n && s[j] == s[i]) ++j;
        const double p = static_cast<double>(j - i) / static_cast<double>(n);
        h -= p * std::log(p);
        i = j;
      }
      // -0.0 for a single distinct value.
      return h + 0.0;
    }
    case AggFunction::kMode: {
      const auto& s = sorted;
      double best = s[0];
      size_t best_count = 0;
      for (size_t i = 0; i < n;) {
        size_t j = i;
        while (j < n && s[j] == s[i]) ++j;
        // Strict > keeps the smallest value among equally frequent ones.
        if (j - i > best_count) {
          best_count = j - i;
          best = s[i];
        }
        i = j;
      }
      return best;
    }
    case AggFunction::kMedian:
      return MedianOfSorted(sorted);
    case AggFunction::kMad: {
      const double median = MedianOfSorted(sorted);
      std::vector<double> dev;
      dev.reserve(n);
      for (double x : values) dev.push_back(std::abs(x - median));
      std::sort(dev.begin(), dev.end());
      return MedianOfSorted(dev);
    }
    default:
      break;
  }
  return std::nullopt;
}

}  // namespace featforge
