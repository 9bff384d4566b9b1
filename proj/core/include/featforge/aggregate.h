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

#ifndef FEATFORGE_AGGREGATE_H_
#define FEATFORGE_AGGREGATE_H_

#include <array>
#include <optional>
#include <span>
#include <string_view>

namespace featforge {

enum class AggFunction {
  kSum,
  kMin,
  kMax,
  kCount,
  kAvg,
  kCountDistinct,
  kVar,
  kVarSample,
  kStd,
  kStdSample,
  kEntropy,
  kKurtosis,
  kMode,
  kMad,
  kMedian,
};

inline constexpr std::array<AggFunction, 15> kAllAggFunctions = {
    AggFunction::kSum,       AggFunction::kMin,       AggFunction::kMax,
    AggFunction::kCount,     AggFunction::kAvg,       AggFunction::kCountDistinct,
    AggFunction::kVar,       AggFunction::kVarSample, AggFunction::kStd,
    AggFunction::kStdSample, AggFunction::kEntropy,   AggFunction::kKurtosis,
    AggFunction::kMode,      AggFunction::kMad,       AggFunction::kMedian,
};

// SQL spelling, e.g. "COUNT_DISTINCT".
std::string_view AggName(AggFunction fn);
std::optional<AggFunction> ParseAggFunction(std::string_view name);

// COUNT, COUNT_DISTINCT, ENTROPY and MODE accept any column kind (text is
// fed in as dictionary codes); everything else needs a numeric column.
bool IsNumericOnly(AggFunction fn);

// Aggregates one group's non-null values. Returns nullopt when the result is
// undefined and the group must be dropped:
//   - empty input, for everything except COUNT and COUNT_DISTINCT (0);
//   - a single value for VAR_SAMPLE, STD_SAMPLE and KURTOSIS;
//   - KURTOSIS of a zero-variance group.
// VAR/STD are population statistics, ENTROPY is in nats, KURTOSIS is excess
// kurtosis from population moments, MODE breaks ties to the smallest value,
// MAD is the median absolute deviation from the median, MEDIAN averages the
// two middle values of an even-sized group.
std::optional<double> Aggregate(std::span<const double> values, AggFunction fn);

}  // namespace featforge

#endif  // FEATFORGE_AGGREGATE_H_
