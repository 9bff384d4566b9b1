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

#ifndef FEATFORGE_SYNTH_H_
#define FEATFORGE_SYNTH_H_

#include <cstdint>
#include <filesystem>

#include "featforge/config.h"
#include "featforge/table.h"

namespace featforge {

struct SynthOptions {
  size_t rows = 2000;
  size_t relevant_rows = 20000;
  // Candidate predicate attributes in the relevant table, 2..8. The first two
  // (dept, ts) carry the planted predicate.
  size_t attrs = 6;
  uint64_t seed = 0;
};

// Customers in D (cid, age, tenure, label) and their purchases in R. The
// label is 1 when a customer's mean amount over purchases with
// dept = 'electronics' and ts >= 2023-07-01 exceeds 100; customers without
// such purchases get a coin flip. Every other column is noise.
struct SynthData {
  Table train;
  Table relevant;
  // Binary task over the two tables with default search settings; data
  // paths are train.csv and relevant.csv.
  RunConfig config;
};

// Throws ConfigError for out-of-range options.
SynthData GenerateSynthetic(const SynthOptions& options);

// train.csv, relevant.csv and config.json under `out_dir`.
void WriteSynthetic(const SynthData& data, const std::filesystem::path& out_dir);

}  // namespace featforge

#endif  // FEATFORGE_SYNTH_H_
