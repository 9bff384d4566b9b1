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

#include "featforge/proxy.h"

#include <cmath>
#include <map>
#include <numeric>

#include <gtest/gtest.h>

#include "featforge/random.h"
#include "support/oracles.h"

namespace featforge {
namespace {

constexpr auto kBinary = TaskKind::kBinaryClassification;

TEST(MutualInformationTest, ConstantFeatureIsZeroAndDegenerate) {
  const std::vector<double> f = {3, 3, 3, 3};
  const std::vector<double> y = {0, 1, 0, 1};
  const ProxyScore s = MutualInformation(f, y, kBinary);
  EXPECT_EQ(s.value, 0.0);
  EXPECT_TRUE(s.degenerate);
}

TEST(MutualInformationTest, IdentityIsLn2) {
  const std::vector<double> y = {0, 0, 1, 1};
  const ProxyScore s = MutualInformation(y, y, kBinary, 2);
  EXPECT_NEAR(s.value, std::log(2.0), 1e-12);
  EXPECT_FALSE(s.degenerate);
}

TEST(MutualInformationTest, ContingencyTableOracle) {
  // Joint counts over x in {0,1,2}, y in {0,1}.
  const int counts[3][2] = {{4, 1}, {2, 3}, {1, 5}};
  std::vector<int> x, y;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int c = 0; c < counts[i][j]; ++c) {
        x.push_back(i);
        y.push_back(j);
      }
    }
  }
  const double n = static_cast<double>(x.size());
  double hx = 0.0, hx_given_y = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double pi = (counts[i][0] + counts[i][1]) / n;
    hx -= pi * std::log(pi);
  }
  for (int j = 0; j < 2; ++j) {
    const double nj = counts[0][j] + counts[1][j] + counts[2][j];
    for (int i = 0; i < 3; ++i) {
      const double p = counts[i][j] / nj;
      hx_given_y -= (nj / n) * p * std::log(p);
    }
  }
  EXPECT_NEAR(DiscreteMutualInformation(x, y), hx - hx_given_y, 1e-12);
}

TEST(MutualInformationTest, EqualFrequencyBinsGroupTies) {
  const std::vector<double> v = {5, 1, 1, 1, 2, 3, 4, 6, 7, 8};
  const std::vector<int> bins = EqualFrequencyBins(v, 5);
  // Sorted: 1,1,1,2,3,4,5,6,7,8 -> ties at positions 0..2 share bin 0.
  EXPECT_EQ(bins[1], 0);
  EXPECT_EQ(bins[2], 0);
  EXPECT_EQ(bins[3], 0);
  EXPECT_EQ(bins[4], 1);  // value 2 at position 3
  EXPECT_EQ(bins[0], 3);  // value 5 at position 6
  EXPECT_EQ(bins[9], 4);
}

TEST(SpearmanTest, UnitValues) {
  double rho = 0.0;
  EXPECT_NEAR(Spearman(std::vector<double>{1, 2, 3}, std::vector<double>{10, 20, 30}, &rho).value,
              1.0, 1e-12);
  EXPECT_NEAR(rho, 1.0, 1e-12);
  EXPECT_NEAR(Spearman(std::vector<double>{1, 2, 3}, std::vector<double>{30, 20, 10}, &rho).value,
              1.0, 1e-12);
  EXPECT_NEAR(rho, -1.0, 1e-12);
  EXPECT_NEAR(Spearman(std::vector<double>{1, 2, 3, 4}, std::vector<double>{1, 2, 4, 3}, &rho).value,
              0.8, 1e-12);
  EXPECT_NEAR(rho, 0.8, 1e-12);
}

TEST(SpearmanTest, TiesUsePearsonOnAverageRanks) {
  const std::vector<double> f = {1, 1, 2, 3};
  const std::vector<double> y = {1, 2, 3, 4};
  // Average ranks of f: 1.5, 1.5, 3, 4; Pearson against 1..4.
  const std::vector<double> rf = {1.5, 1.5, 3, 4};
  const std::vector<double> ry = {1, 2, 3, 4};
  const double mf = 2.5, my = 2.5;
  double sxy = 0, sxx = 0, syy = 0;
  for (int i = 0; i < 4; ++i) {
    sxy += (rf[i] - mf) * (ry[i] - my);
    sxx += (rf[i] - mf) * (rf[i] - mf);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  double rho = 0;
  Spearman(f, y, &rho);
  EXPECT_NEAR(rho, sxy / std::sqrt(sxx * syy), 1e-12);
}

TEST(SpearmanTest, ConstantIsDegenerate) {
  const ProxyScore s = Spearman(std::vector<double>{2, 2, 2}, std::vector<double>{1, 2, 3});
  EXPECT_TRUE(s.degenerate);
  EXPECT_EQ(s.value, 0.0);
}

TEST(LrProxyTest, SeparatingFeatureScoresOne) {
  std::vector<double> f, y;
  for (int i = 0; i < 40; ++i) {
    f.push_back(i);
    y.push_back(i >= 20 ? 1 : 0);
  }
  EXPECT_NEAR(LrProxy(f, y, kBinary, 3).value, 1.0, 1e-12);
}

TEST(LrProxyTest, ConstantFeatureIsWorst) {
  std::vector<double> f(20, 1.0), y;
  for (int i = 0; i < 20; ++i) y.push_back(i % 2);
  const ProxyScore s = LrProxy(f, y, kBinary, 3);
  EXPECT_TRUE(s.degenerate);
  EXPECT_EQ(s.value, 0.5);
}

// Independent single-feature logistic fit on the same 70/30 split.
double ReferenceLrAuc(const std::vector<double>& f, const std::vector<double>& y,
                      uint64_t seed) {
  std::vector<size_t> order(f.size());
  std::iota(order.begin(), order.end(), size_t{0});
  Rng rng(seed);
  rng.Shuffle(order);
  const size_t n_fit = f.size() * 7 / 10;
  std::vector<double> xf, yf, xh, yh;
  for (size_t i = 0; i < order.size(); ++i) {
    (i < n_fit ? xf : xh).push_back(f[order[i]]);
    (i < n_fit ? yf : yh).push_back(y[order[i]]);
  }
  double mean = 0, var = 0;
  for (double v : xf) mean += v;
  mean /= xf.size();
  for (double v : xf) var += (v - mean) * (v - mean);
  const double sd = std::sqrt(var / xf.size());
  double w = 0, b = 0;
  for (int e = 0; e < 300; ++e) {
    double gw = 0, gb = 0;
    for (size_t i = 0; i < xf.size(); ++i) {
      const double z = (xf[i] - mean) / sd;
      const double p = 1.0 / (1.0 + std::exp(-(w * z + b)));
      gw += (p - yf[i]) * z;
      gb += p - yf[i];
    }
    w -= 0.1 * (gw / xf.size() + 1e-4 * w);
    b -= 0.1 * gb / xf.size();
  }
  std::vector<double> scores;
  for (double v : xh) scores.push_back(1.0 / (1.0 + std::exp(-(w * (v - mean) / sd + b))));
  return testing::RefAuc(scores, yh);
}

TEST(LrProxyTest, MatchesReferenceGradientDescent) {
  Rng rng(12);
  std::vector<double> f, y;
  for (int i = 0; i < 200; ++i) {
    const bool pos = rng.Bernoulli(0.5);
    y.push_back(pos ? 1 : 0);
    f.push_back(rng.Normal(pos ? 1.0 : -1.0, 1.2));
  }
  EXPECT_NEAR(LrProxy(f, y, kBinary, 77).value, ReferenceLrAuc(f, y, 77), 1e-3);
}

TEST(LrProxyTest, RegressionIsNegativeRmse) {
  std::vector<double> f, y;
  for (int i = 0; i < 50; ++i) {
    f.push_back(i);
    y.push_back(3.0 * i + 2.0);
  }
  const ProxyScore s = LrProxy(f, y, TaskKind::kRegression, 5);
  EXPECT_LE(s.value, 0.0);
  EXPECT_GT(s.value, -1.0);
  EXPECT_THROW(LrProxy(std::vector<double>(5, 1.0), std::vector<double>(5, 1.0),
                       TaskKind::kRegression, 5),
               std::invalid_argument);
}

TEST(ScoreProxyTest, AllFilledFeatureIsDegenerate) {
  FeatureColumn f{"f", {1, 2, 3, 4}, 1.0};
  const std::vector<double> y = {0, 1, 0, 1};
  EXPECT_TRUE(ScoreProxy(f, y, kBinary, {}).degenerate);
  EXPECT_EQ(ScoreProxy(f, y, kBinary, {}).value, 0.0);
}

TEST(ProxyNamesTest, RoundTrip) {
  for (ProxyKind k : {ProxyKind::kMutualInformation, ProxyKind::kSpearman, ProxyKind::kLrProxy}) {
    EXPECT_EQ(ParseProxy(ProxyName(k)), k);
  }
}

}  // namespace
}  // namespace featforge
