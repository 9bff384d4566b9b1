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

#include <array>
#include <cmath>
#include <fstream>

#include "featforge/csv.h"
#include "featforge/errors.h"
#include "featforge/random.h"

namespace featforge {
namespace {

constexpr int64_t kYearStart = 1672531200;  // 2023-01-01
constexpr int64_t kYearSeconds = 365 * 86400;
constexpr int64_t kHiddenFrom = 1688169600;  // 2023-07-01

const std::array<std::string, 4> kDepts = {"books", "electronics", "grocery", "toys"};
const std::array<std::string, 3> kChannels = {"app", "store", "web"};
const std::array<std::string, 4> kRegions = {"east", "north", "south", "west"};
const std::array<std::string, 3> kDevices = {"desktop", "mobile", "tablet"};

struct AttrDef {
  const char* name;
  ColumnKind kind;
};
const std::array<AttrDef, 8> kAttrs = {{{"dept", ColumnKind::kText},
                                        {"ts", ColumnKind::kDateTime},
                                        {"channel", ColumnKind::kText},
                                        {"discount", ColumnKind::kFloat},
                                        {"region", ColumnKind::kText},
                                        {"rating", ColumnKind::kInt},
                                        {"hour", ColumnKind::kInt},
                                        {"device", ColumnKind::kText}}};

double Cents(double x) { return std::round(x * 100.0) / 100.0; }

template <size_t N>
Value Pick(const std::array<std::string, N>& options, Rng& rng) {
  return Value(options[rng.UniformIndex(N)]);
}

}  // namespace

SynthData GenerateSynthetic(const SynthOptions& o) {
  if (o.rows < 10) throw ConfigError("synth needs at least 10 rows");
  if (o.relevant_rows < 1) throw ConfigError("synth needs at least one relevant row");
  if (o.attrs < 2 || o.attrs > kAttrs.size()) {
    throw ConfigError("synth attrs must lie in [2, 8]");
  }
  Rng rng(MixSeed(o.seed, {100}));

  // Per-customer latent level of the planted purchases.
  std::vector<double> latent(o.rows);
  for (double& z : latent) z = rng.Normal(0.0, 1.0);

  std::vector<Value> r_cid, amount, qty, price;
  std::vector<std::vector<Value>> attr_cells(o.attrs);
  std::vector<double> hidden_sum(o.rows, 0.0);
  std::vector<size_t> hidden_count(o.rows, 0);
  for (size_t i = 0; i < o.relevant_rows; ++i) {
    const size_t cid = rng.UniformIndex(o.rows);
    const Value dept = Pick(kDepts, rng);
    const int64_t ts = kYearStart + static_cast<int64_t>(rng.UniformIndex(kYearSeconds));
    const bool hidden = std::get<std::string>(dept) == "electronics" && ts >= kHiddenFrom;
    const double a = hidden ? Cents(100.0 + 30.0 * latent[cid] + rng.Normal(0.0, 10.0))
                            : Cents(rng.Normal(100.0, 30.0));
    if (hidden) {
      hidden_sum[cid] += a;
      ++hidden_count[cid];
    }
    r_cid.emplace_back(static_cast<int64_t>(cid));
    amount.emplace_back(a);
    qty.emplace_back(static_cast<int64_t>(1 + rng.UniformIndex(5)));
    price.emplace_back(Cents(5.0 + 495.0 * rng.Uniform01()));
    for (size_t k = 0; k < o.attrs; ++k) {
      Value v;
      switch (k) {
        case 0: v = dept; break;
        case 1: v = DateTime{ts}; break;
        case 2: v = Pick(kChannels, rng); break;
        case 3: v = Cents(0.5 * rng.Uniform01()); break;
        case 4: v = Pick(kRegions, rng); break;
        case 5: v = static_cast<int64_t>(1 + rng.UniformIndex(5)); break;
        case 6: v = static_cast<int64_t>(rng.UniformIndex(24)); break;
        default: v = Pick(kDevices, rng); break;
      }
      attr_cells[k].push_back(std::move(v));
    }
  }

  std::vector<Value> d_cid, age, tenure, label;
  for (size_t c = 0; c < o.rows; ++c) {
    const bool positive = hidden_count[c] > 0
                              ? hidden_sum[c] / static_cast<double>(hidden_count[c]) > 100.0
                              : rng.Bernoulli(0.5);
    d_cid.emplace_back(static_cast<int64_t>(c));
    age.emplace_back(static_cast<int64_t>(18 + rng.UniformIndex(63)));
    tenure.emplace_back(Cents(10.0 * rng.Uniform01()));
    label.emplace_back(static_cast<int64_t>(positive ? 1 : 0));
  }

  SynthData out;
  out.train = Table("D", {Column("cid", ColumnKind::kInt, std::move(d_cid)),
                          Column("age", ColumnKind::kInt, std::move(age)),
                          Column("tenure", ColumnKind::kFloat, std::move(tenure)),
                          Column("label", ColumnKind::kInt, std::move(label))});
  std::vector<Column> r_columns;
  r_columns.emplace_back("cid", ColumnKind::kInt, std::move(r_cid));
  for (size_t k = 0; k < o.attrs; ++k) {
    r_columns.emplace_back(kAttrs[k].name, kAttrs[k].kind, std::move(attr_cells[k]));
  }
  r_columns.emplace_back("amount", ColumnKind::kFloat, std::move(amount));
  r_columns.emplace_back("qty", ColumnKind::kInt, std::move(qty));
  r_columns.emplace_back("price", ColumnKind::kFloat, std::move(price));
  out.relevant = Table("R", std::move(r_columns));

  RunConfig& c = out.config;
  c.train_path = "train.csv";
  c.relevant_path = "relevant.csv";
  for (const auto& spec : out.train.Schema()) c.train_schema.emplace(spec.name, spec.kind);
  for (const auto& spec : out.relevant.Schema()) {
    c.relevant_schema.emplace(spec.name, spec.kind);
  }
  c.label = "label";
  c.keys = {"cid"};
  c.agg_columns = {"amount", "qty", "price"};
  for (size_t k = 0; k < o.attrs; ++k) c.attrs.push_back(kAttrs[k].name);
  c.task = TaskKind::kBinaryClassification;
  c.model.kind = ModelKind::kLogisticRegression;
  c.seed = o.seed;
  return out;
}

void WriteSynthetic(const SynthData& data, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw DataError("cannot create '" + out_dir.string() + "': " + ec.message());
  WriteCsv(data.train, out_dir / data.config.train_path);
  WriteCsv(data.relevant, out_dir / data.config.relevant_path);
  const std::filesystem::path path = out_dir / "config.json";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open '" + path.string() + "' for writing");
  out << ConfigToJson(data.config).dump(2) << "\n";
  if (!out.flush()) throw DataError("failed writing '" + path.string() + "'");
}

}  // namespace featforge
