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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;

int RunCli(const std::string& args) {
  const std::string cmd = std::string("'") + FEATFORGE_CLI_PATH + "' " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("featforge_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    ASSERT_EQ(RunCli("synth --rows 200 --relevant-rows 2000 --attrs 3 --seed 4 --out '" +
                     (dir_ / "data").string() + "'"),
              0);
  }
  void TearDown() override { fs::remove_all(dir_); }

  nlohmann::json ReadConfig() const {
    std::ifstream in(dir_ / "data" / "config.json");
    return nlohmann::json::parse(in);
  }
  fs::path WriteConfig(const nlohmann::json& doc, const std::string& name) const {
    const fs::path p = dir_ / "data" / name;
    std::ofstream(p) << doc.dump(2);
    return p;
  }

  fs::path dir_;
};

TEST_F(CliTest, RunWritesOutputs) {
  nlohmann::json doc = ReadConfig();
  doc["n_templates"] = 2;
  doc["queries_per_template"] = 2;
  doc["budgets"] = {{"W", 20}, {"k", 5}, {"G", 5}};
  doc["ident"]["inner_budget"] = 10;
  const fs::path cfg = WriteConfig(doc, "small.json");
  const fs::path out = dir_ / "out";
  EXPECT_EQ(RunCli("run --config '" + cfg.string() + "' --mode featuretools --proxy spearman --out '" +
                   out.string() + "'"),
            0);
  for (const char* f : {"augmented.csv", "report.json", "queries.sql"}) {
    EXPECT_TRUE(fs::exists(out / f)) << f;
  }
  std::ifstream in(out / "report.json");
  const nlohmann::json report = nlohmann::json::parse(in);
  EXPECT_EQ(report["config"]["mode"], "featuretools");
  EXPECT_EQ(report["config"]["proxy"], "spearman");
}

TEST_F(CliTest, ConfigErrorsExitTwo) {
  EXPECT_EQ(RunCli("run --config '" + (dir_ / "missing.json").string() + "'"), 2);
  nlohmann::json doc = ReadConfig();
  doc["label"] = "nope";
  EXPECT_EQ(RunCli("run --config '" + WriteConfig(doc, "bad.json").string() + "'"), 2);
  EXPECT_EQ(RunCli("run --config '" + (dir_ / "data" / "config.json").string() + "' --mode bogus"), 2);
  EXPECT_EQ(RunCli("synth --rows 10 --relevant-rows 10 --attrs 40 --seed 1 --out '" +
                   (dir_ / "x").string() + "'"),
            2);
}

TEST_F(CliTest, DataErrorsExitThree) {
  std::ofstream(dir_ / "data" / "train.csv") << "cid,age,tenure,label\n1,notanumber,0.5,1\n";
  EXPECT_EQ(RunCli("run --config '" + (dir_ / "data" / "config.json").string() + "'"), 3);
}

}  // namespace
