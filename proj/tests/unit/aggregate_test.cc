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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "support/oracles.h"

namespace featforge {
namespace {

std::optional<double> Agg(std::vector<double> v, AggFunction fn) { return Aggregate(v, fn); }

TEST(AggregateTest, ClosedFormValues) {
  EXPECT_NEAR(*Agg({1, 2, 3, 4}, AggFunction::kMedian), 2.5, 1e-12);
  EXPECT_NEAR(*Agg({0, 1, 2, 3}, AggFunction::kEntropy), std::log(4.0), 1e-12);
  EXPECT_NEAR(*Agg({1, 2, 3, 4, 5}, AggFunction::kMad), 1.0, 1e-12);
  EXPECT_NEAR(*Agg({1, 2, 3, 4}, AggFunction::kVar), 1.25, 1e-12);
  EXPECT_NEAR(*Agg({1, 2, 3, 4}, AggFunction::kVarSample), 5.0 / 3.0, 1e-12);
  EXPECT_NEAR(*Agg({2, 2, 1}, AggFunction::kMode), 2.0, 0);
  EXPECT_NEAR(*Agg({3, 1, 3, 1}, AggFunction::kMode), 1.0, 0);
  EXPECT_EQ(*Agg({1, 1, 2}, AggFunction::kCountDistinct), 2.0);
}

TEST(AggregateTest, KurtosisMatchesMomentOracle) {
  // mean 2, deviations (-1, 0, 0, 1): m2 = 0.5, m4 = 0.5, excess = 0.5/0.25 - 3.
  EXPECT_NEAR(*Agg({1, 2, 2, 3}, AggFunction::kKurtosis), -1.0, 1e-12);
  EXPECT_NEAR(*Agg({1, 2, 2, 3}, AggFunction::kKurtosis),
              *testing::RefAggregate({1, 2, 2, 3}, AggFunction::kKurtosis), 1e-12);
}

TEST(AggregateTest, DegenerateRules) {
  EXPECT_EQ(*Agg({}, AggFunction::kCount), 0.0);
  EXPECT_EQ(*Agg({}, AggFunction::kCountDistinct), 0.0);
  for (AggFunction fn : kAllAggFunctions) {
    if (fn == AggFunction::kCount || fn == AggFunction::kCountDistinct) continue;
    EXPECT_FALSE(Agg({}, fn)) << AggName(fn);
  }
  EXPECT_FALSE(Agg({4}, AggFunction::kVarSample));
  EXPECT_FALSE(Agg({4}, AggFunction::kStdSample));
  EXPECT_FALSE(Agg({4}, AggFunction::kKurtosis));
  EXPECT_FALSE(Agg({0.1, 0.1, 0.1}, AggFunction::kKurtosis));
  EXPECT_EQ(*Agg({0.1, 0.1, 0.1}, AggFunction::kVar), 0.0);
  EXPECT_EQ(*Agg({0.1, 0.1, 0.1}, AggFunction::kAvg), 0.1);
  EXPECT_EQ(*Agg({4}, AggFunction::kVar), 0.0);
}

TEST(AggregateTest, NamesRoundTrip) {
  for (AggFunction fn : kAllAggFunctions) EXPECT_EQ(ParseAggFunction(AggName(fn)), fn);
  EXPECT_FALSE(ParseAggFunction("avg"));
  EXPECT_FALSE(IsNumericOnly(AggFunction::kMode));
  EXPECT_TRUE(IsNumericOnly(AggFunction::kMedian));
}

TEST(AggregateTest, RandomSamplesMatchOracleAndIgnoreOrder) {
  Rng rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> v(rng.UniformIndex(30));
    for (double& x : v) {
      x = rng.Bernoulli(0.3) ? static_cast<double>(rng.UniformIndex(4))
                             : std::round(rng.Normal(0, 100) * 100) / 100;
    }
    std::vector<double> shuffled = v;
    rng.Shuffle(shuffled);
    for (AggFunction fn : kAllAggFunctions) {
      const auto got = Aggregate(v, fn);
      const auto want = testing::RefAggregate(v, fn);
      ASSERT_EQ(got.has_value(), want.has_value()) << AggName(fn);
      if (got) {
        ASSERT_TRUE(testing::NearRelative(*got, *want)) << AggName(fn) << " " << *got << " vs " << *want;
      }
      const auto perm = Aggregate(shuffled, fn);
      ASSERT_EQ(got.has_value(), perm.has_value());
      if (got) {
        ASSERT_EQ(*got, *perm) << AggName(fn);
      }
    }
  }
}

}  // namespace
}  // namespace featforge
