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

#include "featforge/tpe.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "featforge/parallel.h"

namespace featforge {
namespace {

double SafeEvaluate(const Objective& objective, const QueryVector& v, double worst) {
  try {
    const double value = objective(v);
    return std::isfinite(value) ? value : worst;
  } catch (const std::exception&) {
    return worst;
  }
}

// Evaluation cache keyed by the repaired vector, so vectors that decode to
// the same query share one evaluation.
class Memo {
 public:
  explicit Memo(const SearchSpace& space) : space_(space) {}

  const double* Find(const QueryVector& v) const {
    auto it = values_.find(Repair(space_, v));
    return it == values_.end() ? nullptr : &it->second;
  }
  void Insert(const QueryVector& v, double value) {
    values_.emplace(Repair(space_, v), value);
  }

 private:
  const SearchSpace& space_;
  std::map<QueryVector, double> values_;
};

}  // namespace

void TrialHistory::Add(QueryVector vector, double objective, bool cached) {
  const int iteration = static_cast<int>(trials_.size());
  trials_.push_back({std::move(vector), objective, iteration, cached});
  if (trials_.size() == 1 || objective < trials_[best_].objective) {
    best_ = trials_.size() - 1;
  }
}

std::vector<size_t> TrialHistory::Ranked() const {
  std::vector<size_t> idx(trials_.size());
  std::iota(idx.begin(), idx.end(), size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    return trials_[a].objective < trials_[b].objective;
  });
  return idx;
}

QueryVector SampleUniform(const SearchSpace& space, Rng& rng) {
  QueryVector v;
  v.slots.reserve(space.size());
  for (const Dimension& d : space.dims()) {
    v.slots.push_back(static_cast<int>(rng.UniformIndex(d.cardinality())));
  }
  return v;
}

GoodBadSplit SplitGoodBad(const TrialHistory& history, double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("gamma must lie in (0, 1]");
  }
  const std::vector<size_t> ranked = history.Ranked();
  const double raw = gamma * static_cast<double>(ranked.size());
  // Guard products like 0.15 * 20 landing a hair above an integer.
  size_t n_good = static_cast<size_t>(std::ceil(raw - 1e-9));
  n_good = std::min(n_good, ranked.size());
  GoodBadSplit split;
  split.good.assign(ranked.begin(), ranked.begin() + n_good);
  split.bad.assign(ranked.begin() + n_good, ranked.end());
  return split;
}

std::vector<double> ParzenDensity(std::span<const size_t> counts, double prior) {
  double total = 0.0;
  for (size_t c : counts) total += static_cast<double>(c);
  const double denom = static_cast<double>(counts.size()) * prior + total;
  std::vector<double> p(counts.size());
  for (size_t i = 0; i < counts.size(); ++i) {
    p[i] = (prior + static_cast<double>(counts[i])) / denom;
  }
  return p;
}

QueryVector Propose(const SearchSpace& space, const TrialHistory& history,
                    const TpeConfig& cfg, Rng& rng) {
  if (history.empty()) return SampleUniform(space, rng);
  const GoodBadSplit split = SplitGoodBad(history, cfg.gamma);

  const size_t dims = space.size();
  std::vector<std::vector<double>> good(dims), log_ratio(dims);
  for (size_t d = 0; d < dims; ++d) {
    const size_t card = space.dim(d).cardinality();
    std::vector<size_t> good_counts(card, 0), bad_counts(card, 0);
    for (size_t i : split.good) ++good_counts[history[i].vector.slots[d]];
    for (size_t i : split.bad) ++bad_counts[history[i].vector.slots[d]];
    good[d] = ParzenDensity(good_counts, cfg.prior_weight);
    const std::vector<double> bad = ParzenDensity(bad_counts, cfg.prior_weight);
    log_ratio[d].resize(card);
    for (size_t v = 0; v < card; ++v) log_ratio[d][v] = std::log(good[d][v] / bad[v]);
  }

  QueryVector best;
  double best_score = -std::numeric_limits<double>::infinity();
  const size_t n_candidates = std::max<size_t>(1, cfg.n_ei_candidates);
  for (size_t c = 0; c < n_candidates; ++c) {
    QueryVector cand;
    cand.slots.resize(dims);
    double score = 0.0;
    for (size_t d = 0; d < dims; ++d) {
      const size_t v = rng.Categorical(good[d]);
      cand.slots[d] = static_cast<int>(v);
      score += log_ratio[d][v];
    }
    if (score > best_score) {
      best_score = score;
      best = std::move(cand);
    }
  }
  return best;
}

TrialHistory TpeRun(const Objective& objective, const SearchSpace& space,
                    size_t budget, const TpeConfig& cfg,
                    std::span<const TrialRecord> init) {
  Rng rng(cfg.seed);
  TrialHistory history;
  Memo memo(space);
  for (const TrialRecord& r : init) {
    history.Add(r.vector, r.objective, r.cached);
    if (!memo.Find(r.vector)) memo.Insert(r.vector, r.objective);
  }
  const size_t startup =
      cfg.n_startup > init.size() ? cfg.n_startup - init.size() : 0;

  for (size_t it = 0; it < budget; ++it) {
    QueryVector v = it < startup ? SampleUniform(space, rng)
                                 : Propose(space, history, cfg, rng);
    for (size_t attempt = 0; attempt < cfg.max_redraws && memo.Find(v); ++attempt) {
      v = SampleUniform(space, rng);
    }
    if (const double* cached = memo.Find(v)) {
      history.Add(std::move(v), *cached, /*cached=*/true);
      continue;
    }
    const double value = SafeEvaluate(objective, v, cfg.worst_objective);
    memo.Insert(v, value);
    history.Add(std::move(v), value);
  }
  return history;
}

TrialHistory WarmStartRun(const Objective& proxy_objective,
                          const Objective& real_objective,
                          const SearchSpace& space, const WarmStartBudget& budget,
                          const TpeConfig& cfg, size_t workers,
                          TrialHistory* proxy_round) {
  if (budget.top_k < 1 || budget.generation_iterations < 1 ||
      budget.warmup_iterations < budget.top_k) {
    throw std::invalid_argument("warm start needs W >= k >= 1 and G >= 1");
  }
  TpeConfig first = cfg;
  first.seed = MixSeed(cfg.seed, {1});
  TrialHistory round1 = TpeRun(proxy_objective, space, budget.warmup_iterations, first);

  // Top-k distinct (after repair) vectors by proxy objective.
  std::vector<QueryVector> winners;
  std::map<QueryVector, bool> seen;
  for (size_t i : round1.Ranked()) {
    if (winners.size() == budget.top_k) break;
    const QueryVector key = Repair(space, round1[i].vector);
    if (seen.emplace(key, true).second) winners.push_back(round1[i].vector);
  }

  std::vector<double> values(winners.size());
  ParallelFor(winners.size(), workers, [&](size_t i) {
    values[i] = SafeEvaluate(real_objective, winners[i], cfg.worst_objective);
  });
  std::vector<TrialRecord> init;
  for (size_t i = 0; i < winners.size(); ++i) {
    init.push_back({winners[i], values[i], static_cast<int>(i), false});
  }

  TpeConfig second = cfg;
  second.seed = MixSeed(cfg.seed, {2});
  if (proxy_round) *proxy_round = std::move(round1);
  return TpeRun(real_objective, space, budget.generation_iterations, second, init);
}

TrialHistory RandomRun(const Objective& objective, const SearchSpace& space,
                       size_t budget, uint64_t seed, double worst_objective) {
  Rng rng(seed);
  TrialHistory history;
  Memo memo(space);
  for (size_t it = 0; it < budget; ++it) {
    QueryVector v = SampleUniform(space, rng);
    if (const double* cached = memo.Find(v)) {
      history.Add(std::move(v), *cached, /*cached=*/true);
      continue;
    }
    const double value = SafeEvaluate(objective, v, worst_objective);
    memo.Insert(v, value);
    history.Add(std::move(v), value);
  }
  return history;
}

}  // namespace featforge
