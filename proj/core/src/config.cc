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

#include "featforge/config.h"

#include <fstream>
#include <set>

#include "featforge/errors.h"

namespace featforge {
namespace {

using nlohmann::json;

void RejectUnknown(const json& obj, const std::set<std::string>& known,
                   const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!known.count(key)) {
      throw ConfigError("unknown config key '" + where + key + "'");
    }
  }
}

const json& RequireObject(const json& doc, const std::string& key) {
  if (!doc.contains(key)) throw ConfigError("missing config key '" + key + "'");
  const json& v = doc.at(key);
  if (!v.is_object()) throw ConfigError("config key '" + key + "' must be an object");
  return v;
}

template <typename T>
T Get(const json& obj, const std::string& key, const std::string& where) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config key '" + where + key + "' has the wrong type");
  }
}

template <typename T>
void Maybe(const json& obj, const std::string& key, const std::string& where, T& out) {
  if (obj.contains(key)) out = Get<T>(obj, key, where);
}

void MaybeSize(const json& obj, const std::string& key, const std::string& where,
               size_t& out) {
  if (!obj.contains(key)) return;
  const json& v = obj.at(key);
  if (!v.is_number_integer() || v.get<int64_t>() < 0) {
    throw ConfigError("config key '" + where + key + "' must be a non-negative integer");
  }
  out = v.get<size_t>();
}

Schema ParseSchema(const json& obj, const std::string& where) {
  if (!obj.is_object()) throw ConfigError("'" + where + "schema' must be an object");
  Schema out;
  for (const auto& [name, kind] : obj.items()) {
    const auto parsed = kind.is_string() ? ParseKind(kind.get<std::string>()) : std::nullopt;
    if (!parsed) {
      throw ConfigError("column '" + name + "' in '" + where +
                        "schema' needs a kind of int|float|text|datetime");
    }
    out.emplace(name, *parsed);
  }
  return out;
}

json SchemaToJson(const Schema& schema) {
  json out = json::object();
  for (const auto& [name, kind] : schema) out[name] = std::string(KindName(kind));
  return out;
}

void ParseTable(const json& doc, const std::string& key, std::string& path,
                std::string& name, Schema& schema) {
  const json& t = RequireObject(doc, key);
  RejectUnknown(t, {"path", "name", "schema"}, key + ".");
  if (!t.contains("path")) throw ConfigError("missing config key '" + key + ".path'");
  path = Get<std::string>(t, "path", key + ".");
  Maybe(t, "name", key + ".", name);
  if (!t.contains("schema")) throw ConfigError("missing config key '" + key + ".schema'");
  schema = ParseSchema(t.at("schema"), key + ".");
}

}  // namespace

std::string_view ModeName(RunMode mode) {
  switch (mode) {
    case RunMode::kFeatAug: return "feataug";
    case RunMode::kRandom: return "random";
    case RunMode::kFeaturetools: return "featuretools";
  }
  return "unknown";
}

std::optional<RunMode> ParseMode(std::string_view name) {
  if (name == "feataug") return RunMode::kFeatAug;
  if (name == "random") return RunMode::kRandom;
  if (name == "featuretools") return RunMode::kFeaturetools;
  return std::nullopt;
}

RunConfig ParseConfig(const json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  RejectUnknown(doc,
                {"train", "relevant", "label", "keys", "agg_columns", "agg_functions",
                 "attrs", "task", "model", "proxy", "mi_bins", "n_templates",
                 "queries_per_template", "tpe", "budgets", "ident", "domains", "fill",
                 "split", "seed", "mode"},
                "");
  RunConfig c;
  c.base_dir = base_dir;
  ParseTable(doc, "train", c.train_path, c.train_name, c.train_schema);
  ParseTable(doc, "relevant", c.relevant_path, c.relevant_name, c.relevant_schema);

  if (!doc.contains("label")) throw ConfigError("missing config key 'label'");
  c.label = Get<std::string>(doc, "label", "");
  Maybe(doc, "keys", "", c.keys);
  Maybe(doc, "agg_columns", "", c.agg_columns);
  Maybe(doc, "attrs", "", c.attrs);
  if (doc.contains("agg_functions")) {
    c.agg_functions.clear();
    for (const auto& name : Get<std::vector<std::string>>(doc, "agg_functions", "")) {
      const auto fn = ParseAggFunction(name);
      if (!fn) throw ConfigError("unknown aggregation function '" + name + "'");
      c.agg_functions.push_back(*fn);
    }
  }
  if (doc.contains("task")) {
    const auto task = ParseTask(Get<std::string>(doc, "task", ""));
    if (!task) throw ConfigError("task must be binary|multiclass|regression");
    c.task = *task;
  }
  c.model.kind = DefaultModelFor(c.task);
  if (doc.contains("model")) {
    const json& m = RequireObject(doc, "model");
    RejectUnknown(m, {"kind", "learning_rate", "epochs", "l2"}, "model.");
    if (m.contains("kind")) {
      const auto kind = ParseModel(Get<std::string>(m, "kind", "model."));
      if (!kind) throw ConfigError("model.kind must be logistic|linear|ovr_logistic");
      c.model.kind = *kind;
    }
    Maybe(m, "learning_rate", "model.", c.model.learning_rate);
    Maybe(m, "epochs", "model.", c.model.epochs);
    Maybe(m, "l2", "model.", c.model.l2);
  }
  if (doc.contains("proxy")) {
    const auto proxy = ParseProxy(Get<std::string>(doc, "proxy", ""));
    if (!proxy) throw ConfigError("proxy must be mi|spearman|lr");
    c.proxy = *proxy;
  }
  MaybeSize(doc, "mi_bins", "", c.mi_bins);
  MaybeSize(doc, "n_templates", "", c.n_templates);
  MaybeSize(doc, "queries_per_template", "", c.queries_per_template);
  if (doc.contains("tpe")) {
    const json& t = RequireObject(doc, "tpe");
    RejectUnknown(t, {"gamma", "n_startup", "n_ei_candidates", "prior_weight",
                      "worst_objective", "max_redraws"},
                  "tpe.");
    Maybe(t, "gamma", "tpe.", c.tpe.gamma);
    MaybeSize(t, "n_startup", "tpe.", c.tpe.n_startup);
    MaybeSize(t, "n_ei_candidates", "tpe.", c.tpe.n_ei_candidates);
    Maybe(t, "prior_weight", "tpe.", c.tpe.prior_weight);
    Maybe(t, "worst_objective", "tpe.", c.tpe.worst_objective);
    MaybeSize(t, "max_redraws", "tpe.", c.tpe.max_redraws);
  }
  if (doc.contains("budgets")) {
    const json& b = RequireObject(doc, "budgets");
    RejectUnknown(b, {"W", "k", "G"}, "budgets.");
    MaybeSize(b, "W", "budgets.", c.budget.warmup_iterations);
    MaybeSize(b, "k", "budgets.", c.budget.top_k);
    MaybeSize(b, "G", "budgets.", c.budget.generation_iterations);
  }
  if (doc.contains("ident")) {
    const json& i = RequireObject(doc, "ident");
    RejectUnknown(i, {"beam_width", "max_depth", "inner_budget", "predictor",
                      "include_empty_template"},
                  "ident.");
    MaybeSize(i, "beam_width", "ident.", c.ident.beam_width);
    MaybeSize(i, "max_depth", "ident.", c.ident.max_depth);
    MaybeSize(i, "inner_budget", "ident.", c.ident.inner_budget);
    Maybe(i, "predictor", "ident.", c.ident.predictor_on);
    Maybe(i, "include_empty_template", "ident.", c.ident.include_empty_template);
  }
  if (doc.contains("domains")) {
    const json& d = RequireObject(doc, "domains");
    RejectUnknown(d, {"categorical_cap", "grid_resolution"}, "domains.");
    MaybeSize(d, "categorical_cap", "domains.", c.domains.categorical_cap);
    MaybeSize(d, "grid_resolution", "domains.", c.domains.grid_resolution);
  }
  Maybe(doc, "fill", "", c.fill);
  if (doc.contains("split")) {
    const auto r = Get<std::vector<double>>(doc, "split", "");
    if (r.size() != 3) throw ConfigError("split must hold three ratios");
    c.split = {r[0], r[1], r[2]};
  }
  Maybe(doc, "seed", "", c.seed);
  if (doc.contains("mode")) {
    const auto mode = ParseMode(Get<std::string>(doc, "mode", ""));
    if (!mode) throw ConfigError("mode must be feataug|random|featuretools");
    c.mode = *mode;
  }
  ValidateConfig(c);
  return c;
}

RunConfig LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ConfigError("config '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return ParseConfig(doc, path.parent_path());
}

void ValidateConfig(const RunConfig& c) {
  auto in_schema = [](const Schema& s, const std::string& col) { return s.count(col) > 0; };
  if (!in_schema(c.train_schema, c.label)) {
    throw ConfigError("label '" + c.label + "' is not in the train schema");
  }
  if (c.keys.empty()) throw ConfigError("keys must not be empty");
  for (const auto& k : c.keys) {
    if (!in_schema(c.train_schema, k) || !in_schema(c.relevant_schema, k)) {
      throw ConfigError("key '" + k + "' must be in both schemas");
    }
  }
  if (c.agg_columns.empty()) throw ConfigError("agg_columns must not be empty");
  for (const auto& a : c.agg_columns) {
    if (!in_schema(c.relevant_schema, a)) {
      throw ConfigError("aggregation column '" + a + "' is not in the relevant schema");
    }
  }
  for (const auto& a : c.attrs) {
    if (!in_schema(c.relevant_schema, a)) {
      throw ConfigError("attribute '" + a + "' is not in the relevant schema");
    }
  }
  if (c.agg_functions.empty()) throw ConfigError("agg_functions must not be empty");
  if (c.mode != RunMode::kFeaturetools && c.attrs.empty()) {
    throw ConfigError("attrs must not be empty in feataug and random modes");
  }
  if (c.n_templates < 1 || c.queries_per_template < 1) {
    throw ConfigError("n_templates and queries_per_template must be positive");
  }
  if (!(c.tpe.gamma > 0.0 && c.tpe.gamma <= 0.5)) {
    throw ConfigError("tpe.gamma must lie in (0, 0.5]");
  }
  if (c.tpe.n_startup < 1 || c.tpe.n_ei_candidates < 1 || !(c.tpe.prior_weight > 0)) {
    throw ConfigError("tpe.n_startup, n_ei_candidates and prior_weight must be positive");
  }
  if (c.budget.top_k < 1 || c.budget.generation_iterations < 1 ||
      c.budget.warmup_iterations < c.budget.top_k) {
    throw ConfigError("budgets need W >= k >= 1 and G >= 1");
  }
  if (c.ident.beam_width < 1 || c.ident.max_depth < 1 || c.ident.inner_budget < 1) {
    throw ConfigError("ident.beam_width, max_depth and inner_budget must be positive");
  }
  if (c.domains.categorical_cap < 1 || c.domains.grid_resolution < 1) {
    throw ConfigError("domains.categorical_cap and grid_resolution must be positive");
  }
  if (c.mi_bins < 2) throw ConfigError("mi_bins must be at least 2");
  if (!(c.model.learning_rate > 0) || c.model.epochs < 1 || c.model.l2 < 0) {
    throw ConfigError("model needs learning_rate > 0, epochs >= 1, l2 >= 0");
  }
  const double total = c.split.train + c.split.valid + c.split.test;
  if (c.split.train < 0 || c.split.valid < 0 || c.split.test < 0 ||
      std::abs(total - 1.0) > 1e-9) {
    throw ConfigError("split ratios must be non-negative and sum to 1");
  }
}

json ConfigToJson(const RunConfig& c) {
  json functions = json::array();
  for (AggFunction fn : c.agg_functions) functions.push_back(std::string(AggName(fn)));
  return json{
      {"train", {{"path", c.train_path}, {"name", c.train_name},
                 {"schema", SchemaToJson(c.train_schema)}}},
      {"relevant", {{"path", c.relevant_path}, {"name", c.relevant_name},
                    {"schema", SchemaToJson(c.relevant_schema)}}},
      {"label", c.label},
      {"keys", c.keys},
      {"agg_columns", c.agg_columns},
      {"agg_functions", functions},
      {"attrs", c.attrs},
      {"task", std::string(TaskName(c.task))},
      {"model", {{"kind", std::string(ModelName(c.model.kind))},
                 {"learning_rate", c.model.learning_rate},
                 {"epochs", c.model.epochs},
                 {"l2", c.model.l2}}},
      {"proxy", std::string(ProxyName(c.proxy))},
      {"mi_bins", c.mi_bins},
      {"n_templates", c.n_templates},
      {"queries_per_template", c.queries_per_template},
      {"tpe", {{"gamma", c.tpe.gamma},
               {"n_startup", c.tpe.n_startup},
               {"n_ei_candidates", c.tpe.n_ei_candidates},
               {"prior_weight", c.tpe.prior_weight},
               {"worst_objective", c.tpe.worst_objective},
               {"max_redraws", c.tpe.max_redraws}}},
      {"budgets", {{"W", c.budget.warmup_iterations},
                   {"k", c.budget.top_k},
                   {"G", c.budget.generation_iterations}}},
      {"ident", {{"beam_width", c.ident.beam_width},
                 {"max_depth", c.ident.max_depth},
                 {"inner_budget", c.ident.inner_budget},
                 {"predictor", c.ident.predictor_on},
                 {"include_empty_template", c.ident.include_empty_template}}},
      {"domains", {{"categorical_cap", c.domains.categorical_cap},
                   {"grid_resolution", c.domains.grid_resolution}}},
      {"fill", c.fill},
      {"split", {c.split.train, c.split.valid, c.split.test}},
      {"seed", c.seed},
      {"mode", std::string(ModeName(c.mode))},
  };
}

}  // namespace featforge
