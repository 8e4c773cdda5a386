// Copyright 2026 The EECS Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "eecs/cli.h"
#include "eecs/errors.h"
#include "eecs/model_io.h"
#include "fixtures.h"

namespace eecs {
namespace {

using testing::ReadFile;
using testing::TempDir;
using testing::WriteFile;

const std::string kMicro = EECS_MICRO_DIR;

std::string Micro(const std::string &name) { return kMicro + "/" + name; }

int Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "eecs");
  std::vector<const char *> argv;
  for (const std::string &a : args) argv.push_back(a.c_str());
  return RunCli(static_cast<int>(argv.size()), argv.data());
}

// Runs with stdout captured.
int Cli(std::vector<std::string> args, std::string *out) {
  ::testing::internal::CaptureStdout();
  const int code = Cli(std::move(args));
  *out = ::testing::internal::GetCapturedStdout();
  return code;
}

std::vector<std::string> TrainArgs(const std::string &out_dir) {
  return {"train",         "--corpus",    Micro("corpus.jsonl"),
          "--instances",   Micro("instances.tsv"),
          "--subclass",    Micro("subclass.tsv"),
          "--triples",     Micro("triples.tsv"),
          "--dim",         "8",
          "--epochs",      "2",
          "--min-count",   "1",
          "--min-mentions", "1",
          "--out",         out_dir};
}

TEST(ConfigTest, ReadsKeyValueLines) {
  TempDir dir;
  WriteFile(dir.File("c.conf"), "# comment\n\n  dim = 16 \nalpha=0.25\nvariant = no_rel\n");
  const std::map<std::string, std::string> c = ReadConfigFile(dir.File("c.conf"));
  EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(c.at("dim"), "16");
  EXPECT_EQ(c.at("alpha"), "0.25");
  EXPECT_EQ(c.at("variant"), "no_rel");

  WriteFile(dir.File("bad.conf"), "dim = 3\njust words\n");
  try {
    ReadConfigFile(dir.File("bad.conf"));
    FAIL() << "expected a parse error";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(ReadConfigFile(dir.File("absent.conf")), ValidationError);
}

TEST(ConfigTest, FlagsWin) {
  const std::vector<std::string> args = {"train", "--dim=4", "--alpha", "0.1"};
  const std::map<std::string, std::string> config = {
      {"dim", "16"}, {"alpha", "0.9"}, {"beta", "2"}, {"config", "loop.conf"}};
  const std::vector<std::string> merged = MergeConfig(args, config);
  EXPECT_EQ(merged, (std::vector<std::string>{"train", "--dim=4", "--alpha", "0.1",
                                              "--beta=2"}));
}

TEST(CliTest, UsageErrorsExitOne) {
  std::string out;
  EXPECT_EQ(Cli({}, &out), 1);
  EXPECT_EQ(Cli({"frobnicate"}, &out), 1);
  EXPECT_EQ(Cli({"train", "--corpus", "/nonexistent/corpus.jsonl", "--out", "x"}, &out), 1);
  EXPECT_EQ(Cli({"eval", "nonsense", "--model", Micro("corpus.jsonl")}, &out), 1);
  EXPECT_EQ(Cli({"--config", "/nonexistent.conf", "train"}, &out), 1);
}

TEST(CliTest, HelpExitsZero) {
  std::string out;
  EXPECT_EQ(Cli({"--help"}, &out), 0);
  EXPECT_NE(out.find("train"), std::string::npos);
  EXPECT_EQ(Cli({"train", "--help"}, &out), 0);
  EXPECT_NE(out.find("--corpus"), std::string::npos);
}

TEST(CliTest, ForeignModelFileExitsOne) {
  std::string out;
  EXPECT_EQ(Cli({"inspect", "--model", Micro("corpus.jsonl")}, &out), 1);
}

TEST(CliTest, VariantNeedsItsInputs) {
  TempDir dir;
  std::string out;
  EXPECT_EQ(Cli({"train", "--corpus", Micro("corpus.jsonl"), "--variant", "full",
                 "--out", dir.path()},
                &out),
            1);
  EXPECT_EQ(Cli({"train", "--corpus", Micro("corpus.jsonl"), "--variant", "bogus",
                 "--out", dir.path()},
                &out),
            1);
}

class TrainedModelTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = std::make_unique<TempDir>();
    std::string out;
    ASSERT_EQ(Cli(TrainArgs(dir_->File("run")), &out), 0);
    train_stdout_ = out;
  }
  static void TearDownTestSuite() { dir_.reset(); }

  static std::string ModelPath() { return dir_->File("run/model.eecs"); }

  static std::unique_ptr<TempDir> dir_;
  static std::string train_stdout_;
};

std::unique_ptr<TempDir> TrainedModelTest::dir_;
std::string TrainedModelTest::train_stdout_;

TEST_F(TrainedModelTest, TrainWritesModelAndLog) {
  EXPECT_NE(train_stdout_.find("final_total\t"), std::string::npos);
  const SavedModel m = LoadModel(ModelPath());
  EXPECT_EQ(m.hp.dim, 8);
  EXPECT_EQ(m.hp.epochs, 2);
  std::istringstream log(ReadFile(dir_->File("run/train_log.jsonl")));
  std::string line;
  int n = 0;
  while (std::getline(log, line)) {
    EXPECT_TRUE(nlohmann::json::parse(line).contains("total"));
    ++n;
  }
  EXPECT_EQ(n, 2);
}

TEST_F(TrainedModelTest, InspectPrintsTsv) {
  std::string out;
  ASSERT_EQ(Cli({"inspect", "--model", ModelPath()}, &out), 0);
  std::istringstream lines(out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "type_id\tnum_entities\teffective_dim\tsingular_values");
  std::string row;
  int rows = 0;
  while (std::getline(lines, row)) {
    ++rows;
    EXPECT_EQ(std::count(row.begin(), row.end(), '\t'), 3) << row;
  }
  EXPECT_GT(rows, 0);

  ASSERT_EQ(Cli({"inspect", "--model", ModelPath(), "--type", "city"}, &out), 0);
  EXPECT_NE(out.find("\ncity\t"), std::string::npos);
  ASSERT_EQ(Cli({"inspect", "--model", ModelPath(), "--source", "points", "--instances",
                 Micro("instances.tsv"), "--subclass", Micro("subclass.tsv"), "--type",
                 "person"},
                &out),
            0);
  EXPECT_NE(out.find("\nperson\t"), std::string::npos);
}

TEST_F(TrainedModelTest, UnknownTypeExitsOne) {
  std::string out;
  EXPECT_EQ(Cli({"inspect", "--model", ModelPath(), "--type", "no_such_type"}, &out), 1);
}

TEST_F(TrainedModelTest, CorruptedModelExitsTwo) {
  std::string bytes = ReadFile(ModelPath());
  bytes[bytes.size() / 2] ^= 0x40;
  const std::string path = dir_->File("corrupt.eecs");
  WriteFile(path, bytes);
  std::string out;
  EXPECT_EQ(Cli({"inspect", "--model", path}, &out), 2);
}

TEST_F(TrainedModelTest, EvalWritesResults) {
  std::string out;
  const std::string results = dir_->File("link.json");
  ASSERT_EQ(Cli({"eval", "link", "--model", ModelPath(), "--test", Micro("link_test.tsv"),
                 "--out", results},
                &out),
            0);
  EXPECT_EQ(out.rfind("task\tlink\n", 0), 0u);
  const nlohmann::json j = nlohmann::json::parse(ReadFile(results));
  EXPECT_TRUE(j.at("aggregate").contains("mean_rank"));
  EXPECT_TRUE(j.at("aggregate").contains("hits_at_10"));

  // A task without its inputs is a usage error.
  EXPECT_EQ(Cli({"eval", "ranking", "--model", ModelPath()}, &out), 1);
}

TEST_F(TrainedModelTest, ExportWritesVectors) {
  std::string out;
  const std::string path = dir_->File("entities.txt");
  ASSERT_EQ(Cli({"export", "--model", ModelPath(), "--out", path, "--what", "entities"}, &out),
            0);
  const SavedModel m = LoadModel(ModelPath());
  std::istringstream lines(ReadFile(path));
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) ++n;
  EXPECT_EQ(n, m.params.model.num_entities());
}

TEST(CliConfigTest, ConfigFileSuppliesFlags) {
  TempDir dir;
  WriteFile(dir.File("train.conf"), "dim = 4\nepochs = 1\nvariant = text\nmin-count = 1\n"
                                    "min-mentions = 1\n");
  std::string out;
  ASSERT_EQ(Cli({"train", "--config", dir.File("train.conf"), "--corpus", Micro("corpus.jsonl"),
                 "--epochs", "3", "--out", dir.File("run")},
                &out),
            0);
  const SavedModel m = LoadModel(dir.File("run/model.eecs"));
  EXPECT_EQ(m.hp.dim, 4);
  EXPECT_EQ(m.hp.epochs, 3);  // the flag wins over the file
  EXPECT_EQ(m.hp.variant, Variant::kText);
}

TEST(CliConfigTest, ThreadsFromEnvironment) {
  TempDir dir;
  std::string out;
  const std::vector<std::string> args = {"train",  "--corpus",      Micro("corpus.jsonl"),
                                         "--variant", "text",       "--dim", "4",
                                         "--epochs", "1",           "--min-count", "1",
                                         "--min-mentions", "1",     "--out", dir.File("run")};
  ::setenv("EECS_THREADS", "0", 1);
  const int invalid = Cli(args, &out);
  ::setenv("EECS_THREADS", "2", 1);
  const int racy = Cli(args, &out);
  ::unsetenv("EECS_THREADS");
  EXPECT_EQ(invalid, 1);
  EXPECT_EQ(racy, 0);
}

}  // namespace
}  // namespace eecs
