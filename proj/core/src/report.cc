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

#include "featforge/report.h"

#include "featforge/errors.h"

namespace featforge {
namespace {

using nlohmann::json;

json TemplateToJson(const QueryTemplate& t) {
  json functions = json::array();
  for (AggFunction fn : t.functions) functions.push_back(std::string(AggName(fn)));
  return json{{"functions", functions},
              {"agg_columns", t.agg_columns},
              {"predicate_columns", t.predicate_columns},
              {"key_columns", t.key_columns}};
}

QueryTemplate TemplateFromJson(const json& doc) {
  QueryTemplate t;
  for (const auto& name : doc.at("functions").get<std::vector<std::string>>()) {
    const auto fn = ParseAggFunction(name);
    if (!fn) throw DataError("report names unknown function '" + name + "'");
    t.functions.push_back(*fn);
  }
  t.agg_columns = doc.at("agg_columns").get<std::vector<std::string>>();
  t.predicate_columns = doc.at("predicate_columns").get<std::vector<std::string>>();
  t.key_columns = doc.at("key_columns").get<std::vector<std::string>>();
  return t;
}

json SplitToJson(const SplitMetrics& m) {
  return json{{"validation_loss", m.validation_loss},
              {"validation_metric", m.validation_metric},
              {"test_loss", m.test_loss},
              {"test_metric", m.test_metric}};
}

SplitMetrics SplitFromJson(const json& doc) {
  return {doc.at("validation_loss").get<double>(),
          doc.at("validation_metric").get<double>(), doc.at("test_loss").get<double>(),
          doc.at("test_metric").get<double>()};
}

}  // namespace

json ReportToJson(const RunReport& r) {
  json templates = json::array();
  for (const auto& t : r.templates) {
    templates.push_back({{"attrs", t.attrs},
                         {"template", TemplateToJson(t.tmpl)},
                         {"proxy_effectiveness", t.proxy_effectiveness
                                                     ? json(*t.proxy_effectiveness)
                                                     : json(nullptr)},
                         {"rank", t.rank}});
  }
  json queries = json::array();
  for (const auto& q : r.queries) {
    queries.push_back({{"template_index", q.template_index},
                       {"sql", q.sql},
                       {"vector", q.vector},
                       {"proxy_score", q.proxy_score},
                       {"validation_loss", q.validation_loss},
                       {"missing_fraction", q.missing_fraction},
                       {"feature", q.feature}});
  }
  const auto& l = r.cost_ledger;
  return json{
      {"config", r.config},
      {"templates", templates},
      {"queries", queries},
      {"cost_ledger", {{"proxy_evaluations", l.ident.proxy_evaluations},
                       {"predictions", l.ident.predictions},
                       {"empty_template_evaluations", l.ident.empty_template_evaluations},
                       {"search_proxy_evaluations", l.search_proxy_evaluations},
                       {"search_real_evaluations", l.search_real_evaluations}}},
      {"metrics", {{"metric", r.metrics.metric},
                   {"base", SplitToJson(r.metrics.base)},
                   {"augmented", SplitToJson(r.metrics.augmented)},
                   {"no_features", r.metrics.no_features}}},
      {"seed", r.seed},
  };
}

RunReport ReportFromJson(const json& doc) {
  try {
    RunReport r;
    r.config = doc.at("config");
    for (const auto& t : doc.at("templates")) {
      TemplateRecord rec;
      rec.attrs = t.at("attrs").get<std::vector<std::string>>();
      rec.tmpl = TemplateFromJson(t.at("template"));
      if (!t.at("proxy_effectiveness").is_null()) {
        rec.proxy_effectiveness = t.at("proxy_effectiveness").get<double>();
      }
      rec.rank = t.at("rank").get<size_t>();
      r.templates.push_back(std::move(rec));
    }
    for (const auto& q : doc.at("queries")) {
      r.queries.push_back({q.at("template_index").get<size_t>(),
                           q.at("sql").get<std::string>(),
                           q.at("vector").get<std::vector<int>>(),
                           q.at("proxy_score").get<double>(),
                           q.at("validation_loss").get<double>(),
                           q.at("missing_fraction").get<double>(),
                           q.at("feature").get<std::string>()});
    }
    const json& l = doc.at("cost_ledger");
    r.cost_ledger.ident.proxy_evaluations = l.at("proxy_evaluations").get<size_t>();
    r.cost_ledger.ident.predictions = l.at("predictions").get<size_t>();
    r.cost_ledger.ident.empty_template_evaluations =
        l.at("empty_template_evaluations").get<size_t>();
    r.cost_ledger.search_proxy_evaluations = l.at("search_proxy_evaluations").get<size_t>();
    r.cost_ledger.search_real_evaluations = l.at("search_real_evaluations").get<size_t>();
    const json& m = doc.at("metrics");
    r.metrics.metric = m.at("metric").get<std::string>();
    r.metrics.base = SplitFromJson(m.at("base"));
    r.metrics.augmented = SplitFromJson(m.at("augmented"));
    r.metrics.no_features = m.at("no_features").get<bool>();
    r.seed = doc.at("seed").get<uint64_t>();
    return r;
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace featforge
