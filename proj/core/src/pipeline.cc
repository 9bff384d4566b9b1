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

#include "featforge/pipeline.h"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <stdexcept>

#include "featforge/csv.h"
#include "featforge/errors.h"
#include "featforge/parallel.h"
#include "featforge/random.h"
#include "featforge/search_space.h"

namespace featforge {
namespace {

std::string Prefixed(Stage stage, const char* what) {
  return std::string(StageName(stage)) + ": " + what;
}

// Runs one stage, keeping the error category and naming the stage.
template <typename Fn>
auto InStage(Stage stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    throw ConfigError(Prefixed(stage, e.what()));
  } catch (const DataError& e) {
    throw DataError(Prefixed(stage, e.what()));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(Prefixed(stage, e.what()));
  } catch (const std::out_of_range& e) {
    throw ConfigError(Prefixed(stage, e.what()));
  } catch (const std::exception& e) {
    throw std::runtime_error(Prefixed(stage, e.what()));
  }
}

std::string_view MetricName(TaskKind task) {
  switch (task) {
    case TaskKind::kBinaryClassification: return "auc";
    case TaskKind::kMulticlassClassification: return "macro_f1";
    case TaskKind::kRegression: return "rmse";
  }
  return "unknown";
}

void CheckInputs(const RunConfig& c, const Table& d, const Table& r) {
  if (!d.HasColumn(c.label)) throw DataError("label '" + c.label + "' not in " + d.name());
  for (const auto& k : c.keys) {
    if (!d.HasColumn(k) || !r.HasColumn(k)) {
      throw DataError("key '" + k + "' missing from the loaded tables");
    }
    if (d.column(k).kind() != r.column(k).kind()) {
      throw ConfigError("key '" + k + "' has different kinds in the two tables");
    }
  }
  for (const auto& a : c.agg_columns) {
    if (!r.HasColumn(a)) throw DataError("aggregation column '" + a + "' not in " + r.name());
    if (r.column(a).kind() == ColumnKind::kText) {
      for (AggFunction fn : c.agg_functions) {
        if (IsNumericOnly(fn)) {
          throw ConfigError("text aggregation column '" + a + "' cannot take " +
                            std::string(AggName(fn)));
        }
      }
    }
  }
  for (const auto& a : c.attrs) {
    if (!r.HasColumn(a)) throw DataError("attribute '" + a + "' not in " + r.name());
  }
  if (d.row_count() < 10) throw DataError("training table needs at least 10 rows");
}

bool IsConstant(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

uint64_t AttrSalt(const std::vector<size_t>& attrs) {
  uint64_t salt = attrs.size();
  for (size_t a : attrs) salt = MixSeed(salt, {a + 1});
  return salt;
}

std::vector<std::string> AttrNames(const RunConfig& c, const std::vector<size_t>& attrs) {
  std::vector<std::string> out;
  for (size_t a : attrs) out.push_back(c.attrs[a]);
  return out;
}

struct Kept {
  CandidateQuery query;
  size_t template_index = 0;
  std::vector<int> vector;
  double validation_loss = 0.0;
};

struct SearchOutcome {
  std::optional<SearchSpace> space;
  TrialHistory history;
  size_t proxy_evaluations = 0;
};

// Everything the search and evaluation stages share.
struct Workspace {
  const RunConfig& config;
  const Table& relevant;
  const Table& train;
  const Table& valid;
  std::vector<std::string> exclude{};
  std::vector<double> train_labels{};
  std::vector<double> valid_labels{};
  FeatureMatrix base_train{};
  FeatureMatrix base_valid{};
  ProxyContext proxy{};
  ObjectiveContext objective{};
};

Objective RealObjective(const SearchSpace& space, const ObjectiveContext& ctx) {
  return [&space, &ctx](const QueryVector& v) {
    return QueryObjective(Decode(space, v), ctx).value;
  };
}

// Walks each history best-first and keeps up to queries_per_template queries
// whose SQL is new and whose training feature is not constant.
std::vector<Kept> SelectQueries(const Workspace& ws,
                                const std::vector<SearchOutcome>& outcomes,
                                std::set<std::string>& seen) {
  std::vector<Kept> kept;
  for (size_t t = 0; t < outcomes.size(); ++t) {
    const SearchSpace& space = *outcomes[t].space;
    const TrialHistory& h = outcomes[t].history;
    size_t taken = 0;
    for (size_t idx : h.Ranked()) {
      if (taken == ws.config.queries_per_template) break;
      const TrialRecord& trial = h[idx];
      if (!(trial.objective < ws.config.tpe.worst_objective)) break;
      CandidateQuery q = Decode(space, trial.vector);
      const std::string sql = RenderSql(q, ws.relevant.name());
      if (seen.count(sql)) continue;
      const FeatureColumn f = Execute(q, ws.relevant, ws.train, ws.config.fill);
      if (IsConstant(f.values)) continue;
      seen.insert(sql);
      kept.push_back({q, t, Encode(q, space).slots, trial.objective});
      ++taken;
    }
  }
  return kept;
}

std::vector<SearchOutcome> SearchTemplates(const Workspace& ws,
                                           const std::vector<QueryTemplate>& templates,
                                           bool warm_start, size_t workers) {
  const RunConfig& c = ws.config;
  std::vector<SearchOutcome> outcomes(templates.size());
  ParallelFor(templates.size(), workers, [&](size_t i) {
    SearchOutcome& out = outcomes[i];
    out.space.emplace(BuildSpace(templates[i], ws.relevant, c.domains));
    const SearchSpace& space = *out.space;
    const uint64_t seed = MixSeed(c.seed, {2, i});
    if (warm_start) {
      TpeConfig tpe = c.tpe;
      tpe.seed = seed;
      TrialHistory proxy_round;
      out.history = WarmStartRun(MakeProxyObjective(space, ws.proxy),
                                 RealObjective(space, ws.objective), space, c.budget, tpe,
                                 1, &proxy_round);
      out.proxy_evaluations = proxy_round.size();
    } else {
      out.history = RandomRun(RealObjective(space, ws.objective), space,
                              c.budget.top_k + c.budget.generation_iterations, seed,
                              c.tpe.worst_objective);
    }
  });
  return outcomes;
}

QueryTemplate MakeTemplate(const RunConfig& c, std::vector<std::string> predicate_columns) {
  return {c.agg_functions, c.agg_columns, std::move(predicate_columns), c.keys};
}

// Distinct random attribute subsets of size 1..max_depth.
std::vector<std::vector<size_t>> RandomSubsets(size_t attr_count, size_t max_depth,
                                               size_t wanted, uint64_t seed) {
  const size_t max_size = std::min(max_depth, attr_count);
  // Number of available subsets, saturating at `wanted`.
  size_t available = 0;
  {
    double binom = 1.0;
    for (size_t k = 1; k <= max_size && available < wanted; ++k) {
      binom = binom * static_cast<double>(attr_count - k + 1) / static_cast<double>(k);
      available += static_cast<size_t>(std::min(binom + 0.5, static_cast<double>(wanted)));
    }
  }
  const size_t target = std::min(wanted, available);
  Rng rng(seed);
  std::set<std::vector<size_t>> chosen;
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> pool(attr_count);
  for (size_t i = 0; i < attr_count; ++i) pool[i] = i;
  while (out.size() < target) {
    const size_t size = 1 + rng.UniformIndex(max_size);
    rng.Shuffle(pool);
    std::vector<size_t> subset(pool.begin(), pool.begin() + size);
    std::sort(subset.begin(), subset.end());
    if (chosen.insert(subset).second) out.push_back(std::move(subset));
  }
  return out;
}

SplitMetrics Evaluate(const FeatureMatrix& train, const FeatureMatrix& valid,
                      const FeatureMatrix& test, std::span<const double> train_labels,
                      std::span<const double> valid_labels,
                      std::span<const double> test_labels, const RunConfig& c) {
  const Model model = Fit(train, train_labels, c.model);
  const LossValue v = Loss(model, valid, valid_labels, c.task);
  const LossValue t = Loss(model, test, test_labels, c.task);
  return {v.value, v.metric_raw, t.value, t.metric_raw};
}

void WriteText(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out.flush()) throw DataError("failed writing '" + path.string() + "'");
}

}  // namespace

std::string_view StageName(Stage stage) {
  switch (stage) {
    case Stage::kLoad: return "load";
    case Stage::kSplit: return "split";
    case Stage::kIdentify: return "identify";
    case Stage::kSearch: return "search";
    case Stage::kFinalEvaluation: return "final_evaluation";
    case Stage::kOutput: return "output";
  }
  return "unknown";
}

void AuditLog::Record(Stage stage, SplitPart part) {
  std::lock_guard<std::mutex> lock(mu_);
  events_.push_back({stage, part});
}

std::vector<SplitAccess> AuditLog::events() const {
  std::lock_guard<std::mutex> lock(mu_);
  return events_;
}

const Table& GuardedSplit::train(Stage stage) const {
  log_->Record(stage, SplitPart::kTrain);
  return split_.train;
}

const Table& GuardedSplit::valid(Stage stage) const {
  log_->Record(stage, SplitPart::kValid);
  return split_.valid;
}

const Table& GuardedSplit::test(Stage stage) const {
  log_->Record(stage, SplitPart::kTest);
  return split_.test;
}

std::vector<Value> LabelClasses(const Column& label) {
  std::vector<Value> out;
  for (size_t i = 0; i < label.size(); ++i) {
    if (!label.IsNull(i)) out.push_back(label.Cell(i));
  }
  auto less = [](const Value& a, const Value& b) { return CompareValues(a, b) < 0; };
  std::sort(out.begin(), out.end(), less);
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Value& a, const Value& b) { return CompareValues(a, b) == 0; }),
            out.end());
  return out;
}

std::vector<double> EncodeLabels(const Column& label, TaskKind task,
                                 const std::vector<Value>& classes) {
  std::vector<double> out(label.size());
  if (task == TaskKind::kRegression) {
    if (!label.is_numeric()) throw DataError("regression label '" + label.name() + "' is text");
    for (size_t i = 0; i < label.size(); ++i) {
      if (label.IsNull(i)) throw DataError("label '" + label.name() + "' has an empty cell");
      out[i] = label.Number(i);
    }
    return out;
  }
  if (task == TaskKind::kBinaryClassification && classes.size() != 2) {
    throw DataError("binary label '" + label.name() + "' has " +
                    std::to_string(classes.size()) + " distinct values");
  }
  if (classes.size() < 2) throw DataError("label '" + label.name() + "' has one class");
  auto less = [](const Value& a, const Value& b) { return CompareValues(a, b) < 0; };
  for (size_t i = 0; i < label.size(); ++i) {
    if (label.IsNull(i)) throw DataError("label '" + label.name() + "' has an empty cell");
    const Value v = label.Cell(i);
    const auto it = std::lower_bound(classes.begin(), classes.end(), v, less);
    if (it == classes.end() || CompareValues(*it, v) != 0) {
      throw DataError("label value " + FormatValue(v) + " is not a known class");
    }
    out[i] = static_cast<double>(it - classes.begin());
  }
  return out;
}

RunResult RunPipeline(const RunConfig& config, size_t workers) {
  ValidateConfig(config);
  const auto [d, r] = InStage(Stage::kLoad, [&] {
    return std::pair{LoadCsv(config.ResolvedTrainPath(), config.train_schema, config.train_name),
                     LoadCsv(config.ResolvedRelevantPath(), config.relevant_schema,
                             config.relevant_name)};
  });
  return RunPipeline(config, d, r, workers);
}

RunResult RunPipeline(const RunConfig& c, const Table& d, const Table& r, size_t workers) {
  ValidateConfig(c);
  workers = std::max<size_t>(1, workers);
  AuditLog log;

  const std::vector<Value> classes = InStage(Stage::kLoad, [&] {
    CheckInputs(c, d, r);
    return IsClassification(c.task) ? LabelClasses(d.column(c.label)) : std::vector<Value>{};
  });

  const GuardedSplit split = InStage(Stage::kSplit, [&] {
    return GuardedSplit(Split(d, c.split, MixSeed(c.seed, {0})), &log);
  });

  Workspace ws{c, r, split.train(Stage::kSplit), split.valid(Stage::kSplit)};
  InStage(Stage::kSplit, [&] {
    if (ws.train.row_count() < 2 || ws.valid.row_count() < 1) {
      throw DataError("split leaves too few training or validation rows");
    }
    ws.exclude = c.keys;
    ws.exclude.push_back(c.label);
    ws.train_labels = EncodeLabels(ws.train.column(c.label), c.task, classes);
    ws.valid_labels = EncodeLabels(ws.valid.column(c.label), c.task, classes);
    ws.base_train = NumericFeatures(ws.train, ws.exclude, c.fill);
    ws.base_valid = NumericFeatures(ws.valid, ws.exclude, c.fill);
    ws.proxy = ProxyContext{&r, &ws.train, ws.train_labels, c.task,
                            ProxyOptions{c.proxy, c.mi_bins, MixSeed(c.seed, {3})}, c.fill};
    ws.objective = ObjectiveContext{&r,
                                    &ws.train,
                                    &ws.valid,
                                    ws.train_labels,
                                    ws.valid_labels,
                                    &ws.base_train,
                                    &ws.base_valid,
                                    c.model,
                                    c.task,
                                    c.fill};
  });

  RunReport report;
  report.config = ConfigToJson(c);
  report.seed = c.seed;
  report.metrics.metric = MetricName(c.task);

  // Template choice.
  std::vector<QueryTemplate> templates = InStage(Stage::kIdentify, [&] {
    std::vector<QueryTemplate> out;
    if (c.mode == RunMode::kFeatAug) {
      (void)split.train(Stage::kIdentify);
      const TemplateIngredients ingredients{c.agg_functions, c.agg_columns, c.keys};
      IdentConfig ident = c.ident;
      ident.n_out = c.n_templates;
      ident.seed = MixSeed(c.seed, {1});
      const NodeScorer scorer = [&](const TemplateNode& node) {
        TpeConfig tpe = c.tpe;
        tpe.seed = MixSeed(ident.seed, {AttrSalt(node.attrs)});
        return NodeProxyEffectiveness(AttrNames(c, node.attrs), ingredients, ws.proxy,
                                      c.domains, ident.inner_budget, tpe);
      };
      const IdentResult result = Identify(c.attrs.size(), scorer, ident, workers);
      report.cost_ledger.ident = result.ledger;
      for (size_t i = 0; i < result.top.size(); ++i) {
        const TemplateNode& node = result.top[i];
        QueryTemplate t = CanonicalTemplate(MakeTemplate(c, AttrNames(c, node.attrs)), r);
        report.templates.push_back({AttrNames(c, node.attrs), t, node.proxy_value, i});
        out.push_back(std::move(t));
      }
    } else if (c.mode == RunMode::kRandom) {
      const auto subsets = RandomSubsets(c.attrs.size(), c.ident.max_depth, c.n_templates,
                                         MixSeed(c.seed, {1}));
      for (size_t i = 0; i < subsets.size(); ++i) {
        QueryTemplate t = CanonicalTemplate(MakeTemplate(c, AttrNames(c, subsets[i])), r);
        report.templates.push_back({AttrNames(c, subsets[i]), t, std::nullopt, i});
        out.push_back(std::move(t));
      }
    } else {
      QueryTemplate t = CanonicalTemplate(MakeTemplate(c, {}), r);
      report.templates.push_back({{}, t, std::nullopt, 0});
      out.push_back(std::move(t));
    }
    return out;
  });

  // Query search and selection.
  std::vector<Kept> kept;
  std::vector<SearchOutcome> outcomes;
  InStage(Stage::kSearch, [&] {
    (void)split.train(Stage::kSearch);
    (void)split.valid(Stage::kSearch);
    std::set<std::string> seen;
    if (c.mode == RunMode::kFeaturetools) {
      outcomes.resize(1);
      outcomes[0].space.emplace(BuildSpace(templates[0], r, c.domains));
      const SearchSpace& space = *outcomes[0].space;
      // Every (function, agg column) pair with the full key set.
      std::vector<QueryVector> pool;
      for (size_t f = 0; f < space.dim(0).cardinality(); ++f) {
        for (size_t a = 0; a < space.dim(1).cardinality(); ++a) {
          QueryVector v{std::vector<int>(space.size(), 1)};
          v.slots[0] = static_cast<int>(f);
          v.slots[1] = static_cast<int>(a);
          pool.push_back(std::move(v));
        }
      }
      std::vector<double> scores(pool.size());
      ParallelFor(pool.size(), workers, [&](size_t i) {
        scores[i] = ScoreQuery(Decode(space, pool[i]), ws.proxy).value;
      });
      std::vector<size_t> order(pool.size());
      for (size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::stable_sort(order.begin(), order.end(),
                       [&](size_t a, size_t b) { return scores[a] > scores[b]; });
      const size_t wanted = c.n_templates * c.queries_per_template;
      for (size_t i : order) {
        if (kept.size() == wanted) break;
        CandidateQuery q = Decode(space, pool[i]);
        const std::string sql = RenderSql(q, r.name());
        if (seen.count(sql)) continue;
        if (IsConstant(Execute(q, r, ws.train, c.fill).values)) continue;
        seen.insert(sql);
        kept.push_back({q, 0, pool[i].slots, 0.0});
      }
      ParallelFor(kept.size(), workers, [&](size_t i) {
        kept[i].validation_loss = QueryObjective(kept[i].query, ws.objective).value;
      });
      report.cost_ledger.search_proxy_evaluations = pool.size();
      report.cost_ledger.search_real_evaluations = kept.size();
    } else {
      outcomes = SearchTemplates(ws, templates, c.mode == RunMode::kFeatAug, workers);
      for (const auto& o : outcomes) {
        report.cost_ledger.search_proxy_evaluations += o.proxy_evaluations;
        report.cost_ledger.search_real_evaluations += o.history.size();
      }
      kept = SelectQueries(ws, outcomes, seen);
    }
  });

  std::vector<FeatureColumn> train_features(kept.size());
  InStage(Stage::kSearch, [&] {
    std::vector<double> proxy_scores(kept.size());
    ParallelFor(kept.size(), workers, [&](size_t i) {
      train_features[i] = Execute(kept[i].query, r, ws.train, c.fill);
      proxy_scores[i] =
          ScoreProxy(train_features[i], ws.train_labels, c.task, ws.proxy.proxy).value;
    });
    for (size_t i = 0; i < kept.size(); ++i) {
      const Kept& k = kept[i];
      report.queries.push_back({k.template_index, RenderSql(k.query, r.name()), k.vector,
                                proxy_scores[i], k.validation_loss,
                                train_features[i].missing_fraction,
                                "feat_" + std::to_string(i)});
    }
    report.metrics.no_features = kept.empty();
  });

  // The test part is read here and nowhere earlier.
  InStage(Stage::kFinalEvaluation, [&] {
    (void)split.train(Stage::kFinalEvaluation);
    const Table& valid = split.valid(Stage::kFinalEvaluation);
    const Table& test = split.test(Stage::kFinalEvaluation);
    const std::vector<double> test_labels =
        EncodeLabels(test.column(c.label), c.task, classes);
    FeatureMatrix base_test = NumericFeatures(test, ws.exclude, c.fill);
    FeatureMatrix aug_train = ws.base_train;
    FeatureMatrix aug_valid = ws.base_valid;
    FeatureMatrix aug_test = base_test;
    for (size_t i = 0; i < kept.size(); ++i) {
      aug_train.AddColumn(train_features[i].values);
      aug_valid.AddColumn(Execute(kept[i].query, r, valid, c.fill).values);
      aug_test.AddColumn(Execute(kept[i].query, r, test, c.fill).values);
    }
    report.metrics.base = Evaluate(ws.base_train, ws.base_valid, base_test, ws.train_labels,
                                   ws.valid_labels, test_labels, c);
    report.metrics.augmented = Evaluate(aug_train, aug_valid, aug_test, ws.train_labels,
                                        ws.valid_labels, test_labels, c);
  });

  RunResult result;
  result.augmented = InStage(Stage::kOutput, [&] {
    std::vector<Column> extra;
    for (size_t i = 0; i < kept.size(); ++i) {
      const FeatureColumn f = Execute(kept[i].query, r, d, c.fill);
      std::vector<Value> cells(f.values.begin(), f.values.end());
      extra.emplace_back("feat_" + std::to_string(i), ColumnKind::kFloat, std::move(cells));
    }
    return d.WithColumns(std::move(extra));
  });
  result.report = std::move(report);
  result.audit = log.events();
  return result;
}

void WriteOutputs(const RunReport& report, const Table& augmented,
                  const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw DataError("cannot create '" + out_dir.string() + "': " + ec.message());
  WriteText(out_dir / "augmented.csv", FormatCsv(augmented));
  WriteText(out_dir / "report.json", ReportToJson(report).dump(2) + "\n");
  std::string sql;
  for (const auto& q : report.queries) sql += q.sql + "\n";
  WriteText(out_dir / "queries.sql", sql);
}

}  // namespace featforge
