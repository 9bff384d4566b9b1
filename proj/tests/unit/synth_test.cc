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

#include "featforge/synth.h"

#include <map>

#include <gtest/gtest.h>

#include "featforge/csv.h"
#include "featforge/errors.h"

namespace featforge {
namespace {

TEST(SynthTest, ShapesAndDeterminism) {
  const SynthData a = GenerateSynthetic({100, 1000, 5, 3});
  const SynthData b = GenerateSynthetic({100, 1000, 5, 3});
  EXPECT_EQ(a.train.row_count(), 100u);
  EXPECT_EQ(a.relevant.row_count(), 1000u);
  EXPECT_EQ(a.config.attrs, (std::vector<std::string>{"dept", "ts", "channel", "discount", "region"}));
  EXPECT_EQ(FormatCsv(a.train), FormatCsv(b.train));
  EXPECT_EQ(FormatCsv(a.relevant), FormatCsv(b.relevant));
  const SynthData c = GenerateSynthetic({100, 1000, 5, 4});
  EXPECT_NE(FormatCsv(a.relevant), FormatCsv(c.relevant));
  EXPECT_NO_THROW(ValidateConfig(a.config));
}

TEST(SynthTest, LabelFollowsHiddenAggregate) {
  const SynthData d = GenerateSynthetic({200, 3000, 2, 5});
  const DateTime from = *ParseDateTime("2023-07-01");
  std::map<int64_t, std::pair<double, int>> hidden;
  const Table& r = d.relevant;
  for (size_t i = 0; i < r.row_count(); ++i) {
    if (std::get<std::string>(r.Cell(i, "dept")) != "electronics") continue;
    if (std::get<DateTime>(r.Cell(i, "ts")) < from) continue;
    auto& [sum, n] = hidden[std::get<int64_t>(r.Cell(i, "cid"))];
    sum += std::get<double>(r.Cell(i, "amount"));
    ++n;
  }
  size_t checked = 0;
  for (size_t i = 0; i < d.train.row_count(); ++i) {
    const auto it = hidden.find(std::get<int64_t>(d.train.Cell(i, "cid")));
    if (it == hidden.end()) continue;
    const int64_t want = it->second.first / it->second.second > 100.0 ? 1 : 0;
    EXPECT_EQ(std::get<int64_t>(d.train.Cell(i, "label")), want);
    ++checked;
  }
  EXPECT_GT(checked, 100u);
}

TEST(SynthTest, RejectsBadOptions) {
  EXPECT_THROW(GenerateSynthetic({5, 100, 4, 0}), ConfigError);
  EXPECT_THROW(GenerateSynthetic({100, 100, 1, 0}), ConfigError);
  EXPECT_THROW(GenerateSynthetic({100, 100, 9, 0}), ConfigError);
}

}  // namespace
}  // namespace featforge
