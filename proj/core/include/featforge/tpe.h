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

#ifndef FEATFORGE_TPE_H_
#define FEATFORGE_TPE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "featforge/random.h"
#include "featforge/search_space.h"

namespace featforge {

// Lower is better throughout; maximised proxies are negated by the caller.
using Objective = std::function<double(const QueryVector&)>;

struct TrialRecord {
  QueryVector vector;
  double objective = 0.0;
  int iteration = 0;
  // True when the value was reused from an identical earlier vector rather
  // than evaluated.
  bool cached = false;
};

class TrialHistory {
 public:
  // Appends with the next iteration number.
  void Add(QueryVector vector, double objective, bool cached = false);

  const std::vector<TrialRecord>& trials() const { return trials_; }
  const TrialRecord& operator[](size_t i) const { return trials_[i]; }
  size_t size() const { return trials_.size(); }
  bool empty() const { return trials_.empty(); }
  // Index of the minimum objective, earliest on ties. History must be
  // non-empty.
  size_t best() const { return best_; }
  const TrialRecord& best_trial() const { return trials_[best_]; }
  // Indices ordered by (objective, iteration).
  std::vector<size_t> Ranked() const;

 private:
  std::vector<TrialRecord> trials_;
  size_t best_ = 0;
};

struct TpeConfig {
  double gamma = 0.15;
  size_t n_startup = 10;
  size_t n_ei_candidates = 24;
  double prior_weight = 1.0;
  uint64_t seed = 0;
  // Recorded for evaluations that throw or return a non-finite value.
  double worst_objective = 1e9;
  // Uniform redraws attempted when a proposal repeats a known vector.
  size_t max_redraws = 16;
};

QueryVector SampleUniform(const SearchSpace& space, Rng& rng);

struct GoodBadSplit {
  std::vector<size_t> good;  // indices into the history
  std::vector<size_t> bad;
};

// The ceil(gamma * N) lowest-objective trials (earlier iteration first on
// ties) are good; the rest are bad.
GoodBadSplit SplitGoodBad(const TrialHistory& history, double gamma);

// Smoothed categorical Parzen density over a dimension:
// p(v) = (prior + count(v)) / (cardinality * prior + total).
std::vector<double> ParzenDensity(std::span<const size_t> counts, double prior);

// Draws n_ei_candidates vectors from the per-dimension good densities and
// returns the one maximising prod_d p_good / p_bad (first drawn on ties).
QueryVector Propose(const SearchSpace& space, const TrialHistory& history,
                    const TpeConfig& cfg, Rng& rng);

// Runs `budget` new iterations after seeding the history with `init`. The
// first max(0, n_startup - |init|) iterations sample uniformly, the rest
// propose. A vector whose repaired form was already evaluated is redrawn
// uniformly up to max_redraws times, then recorded with the cached value.
TrialHistory TpeRun(const Objective& objective, const SearchSpace& space,
                    size_t budget, const TpeConfig& cfg,
                    std::span<const TrialRecord> init = {});

struct WarmStartBudget {
  size_t warmup_iterations = 200;     // proxy round
  size_t top_k = 50;                  // distinct proxy winners re-evaluated
  size_t generation_iterations = 40;  // real-objective round
};

// Two-round search: TPE on the proxy objective, the top_k distinct proxy
// winners re-scored with the real objective to seed a second TPE round on
// the real objective. Returns the second round's history (top_k +
// generation_iterations records when enough distinct vectors exist).
// `proxy_round`, when non-null, receives the first round's history.
TrialHistory WarmStartRun(const Objective& proxy_objective,
                          const Objective& real_objective,
                          const SearchSpace& space, const WarmStartBudget& budget,
                          const TpeConfig& cfg, size_t workers = 1,
                          TrialHistory* proxy_round = nullptr);

// `budget` uniform samples, each evaluated (identical repaired vectors reuse
// their first value).
TrialHistory RandomRun(const Objective& objective, const SearchSpace& space,
                       size_t budget, uint64_t seed, double worst_objective = 1e9);

}  // namespace featforge

#endif  // FEATFORGE_TPE_H_
