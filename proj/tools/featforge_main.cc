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

#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "featforge/config.h"
#include "featforge/errors.h"
#include "featforge/parallel.h"
#include "featforge/pipeline.h"
#include "featforge/synth.h"

namespace {

constexpr int kConfigExit = 2;
constexpr int kDataExit = 3;

struct RunFlags {
  std::string config;
  std::optional<std::string> mode;
  std::optional<uint64_t> seed;
  std::optional<std::string> proxy;
  std::string out = "featforge_out";
};

int Run(const RunFlags& flags) {
  featforge::RunConfig config = featforge::LoadConfig(flags.config);
  if (flags.mode) {
    const auto mode = featforge::ParseMode(*flags.mode);
    if (!mode) throw featforge::ConfigError("--mode must be feataug|random|featuretools");
    config.mode = *mode;
  }
  if (flags.seed) config.seed = *flags.seed;
  if (flags.proxy) {
    const auto proxy = featforge::ParseProxy(*flags.proxy);
    if (!proxy) throw featforge::ConfigError("--proxy must be mi|spearman|lr");
    config.proxy = *proxy;
  }
  featforge::ValidateConfig(config);
  const featforge::RunResult result =
      featforge::RunPipeline(config, featforge::DefaultWorkers());
  featforge::WriteOutputs(result.report, result.augmented, flags.out);
  const auto& m = result.report.metrics;
  std::printf("mode %s: %zu features, validation %s base %.6f augmented %.6f\n",
              std::string(featforge::ModeName(config.mode)).c_str(),
              result.report.queries.size(), m.metric.c_str(), m.base.validation_metric,
              m.augmented.validation_metric);
  if (m.no_features) std::printf("no usable features were found\n");
  return 0;
}

int Synth(const featforge::SynthOptions& options, const std::string& out) {
  featforge::WriteSynthetic(featforge::GenerateSynthetic(options), out);
  std::printf("wrote %s/{train.csv,relevant.csv,config.json}\n", out.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Predicate-aware SQL feature search over a relevant table"};
  app.require_subcommand(1);

  RunFlags run;
  CLI::App* run_cmd = app.add_subcommand("run", "Search queries and augment the table");
  run_cmd->add_option("--config", run.config, "JSON config file")->required();
  run_cmd->add_option("--mode", run.mode, "feataug|random|featuretools");
  run_cmd->add_option("--seed", run.seed, "Master seed");
  run_cmd->add_option("--proxy", run.proxy, "mi|spearman|lr");
  run_cmd->add_option("--out", run.out, "Output directory");

  featforge::SynthOptions synth;
  std::string synth_out = "synth";
  CLI::App* synth_cmd = app.add_subcommand("synth", "Write the planted-signal benchmark");
  synth_cmd->add_option("--rows", synth.rows, "Rows of the training table");
  synth_cmd->add_option("--relevant-rows", synth.relevant_rows, "Rows of the relevant table");
  synth_cmd->add_option("--attrs", synth.attrs, "Predicate attributes (2..8)");
  synth_cmd->add_option("--seed", synth.seed, "Generator seed");
  synth_cmd->add_option("--out", synth_out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigExit;
  }

  try {
    if (run_cmd->parsed()) return Run(run);
    return Synth(synth, synth_out);
  } catch (const featforge::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kConfigExit;
  } catch (const featforge::DataError& e) {
    std::fprintf(stderr, "data error: %s\n", e.what());
    return kDataExit;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
