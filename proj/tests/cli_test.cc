// Copyright 2026 The verbpattern Authors.
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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"
#include "test_util.h"
#include "verbpattern/pattern_store.h"

namespace verbpattern::cli {
namespace {

namespace fs = std::filesystem;
using testing::DataPath;

std::string Slurp(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ =
        fs::temp_directory_path() /
        ("verbpattern_cli_" +
         std::string(
             ::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int Call(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::Run(args, out_, err_);
  }

  std::vector<std::string> ExtractArgs(const std::string &out) {
    return {"extract",
            "--corpus",
            DataPath("fixture_eat/corpus.tsv"),
            "--taxonomy",
            DataPath("fixture_eat/taxonomy.tsv"),
            "--idioms",
            DataPath("fixture_eat/idioms.tsv"),
            "--out",
            (dir_ / out).string()};
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, ExtractFixture) {
  ASSERT_EQ(Call(ExtractArgs("p.jsonl")), 0) << err_.str();
  PatternStore store = ReadPatternsJsonlFile((dir_ / "p.jsonl").string());
  EXPECT_EQ(*store.Lookup("eat", "hot_dog"),
            VerbPattern::Concept("eat", "food"));
  EXPECT_EQ(*store.Lookup("eat", "humble_pie"),
            VerbPattern::Idiom("eat", "humble_pie"));

  auto manifest = nlohmann::json::parse(Slurp(dir_ / "p.jsonl.manifest.json"));
  EXPECT_EQ(manifest["config"]["theta"], 0.25);
  EXPECT_EQ(manifest["inputs"]["corpus"]["sha256"],
            FileSha256(DataPath("fixture_eat/corpus.tsv")));
  EXPECT_EQ(manifest["output"]["sha256"],
            FileSha256((dir_ / "p.jsonl").string()));
  EXPECT_NEAR(manifest["verbs"][0]["total"].get<double>(), 1.6368840289396402,
              1e-12);
}

TEST_F(CliTest, FromManifestReproducesOutput) {
  ASSERT_EQ(Call(ExtractArgs("a.jsonl")), 0) << err_.str();
  ASSERT_EQ(Call({"extract", "--from-manifest",
                  (dir_ / "a.jsonl.manifest.json").string(), "--out",
                  (dir_ / "b.jsonl").string()}),
            0)
      << err_.str();
  EXPECT_EQ(Slurp(dir_ / "a.jsonl"), Slurp(dir_ / "b.jsonl"));
  // Config flags cannot be mixed with a manifest.
  EXPECT_NE(Call({"extract", "--from-manifest",
                  (dir_ / "a.jsonl.manifest.json").string(), "--theta", "0.5",
                  "--out", (dir_ / "c.jsonl").string()}),
            0);
}

TEST_F(CliTest, StaleManifestIsRejected) {
  fs::copy_file(DataPath("fixture_eat/corpus.tsv"), dir_ / "corpus.tsv");
  auto args = ExtractArgs("a.jsonl");
  args[2] = (dir_ / "corpus.tsv").string();
  ASSERT_EQ(Call(args), 0) << err_.str();
  std::ofstream(dir_ / "corpus.tsv", std::ios::app) << "eat\tcake\t9\n";
  EXPECT_EQ(Call({"extract", "--from-manifest",
                  (dir_ / "a.jsonl.manifest.json").string(), "--out",
                  (dir_ / "b.jsonl").string()}),
            1);
  EXPECT_NE(err_.str().find("manifest"), std::string::npos);
}

TEST_F(CliTest, NegativeThetaFails) {
  auto args = ExtractArgs("p.jsonl");
  args.push_back("--theta");
  args.push_back("-1");
  EXPECT_NE(Call(args), 0);
  EXPECT_NE(err_.str().find("--theta"), std::string::npos) << err_.str();
  EXPECT_FALSE(fs::exists(dir_ / "p.jsonl"));
}

TEST_F(CliTest, MissingInputFails) {
  auto args = ExtractArgs("p.jsonl");
  args[2] = (dir_ / "nope.tsv").string();
  EXPECT_NE(Call(args), 0);
  EXPECT_NE(err_.str().find("--corpus"), std::string::npos) << err_.str();
}

TEST_F(CliTest, MalformedInputFails) {
  std::ofstream(dir_ / "bad.tsv") << "eat\tapple\t5\neat\tpear\n";
  auto args = ExtractArgs("p.jsonl");
  args[2] = (dir_ / "bad.tsv").string();
  EXPECT_EQ(Call(args), 1);
  EXPECT_EQ(err_.str().rfind("verbpattern: error:", 0), 0u) << err_.str();
  EXPECT_NE(err_.str().find(":2"), std::string::npos) << err_.str();
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_NE(Call({}), 0);
  EXPECT_NE(Call({"frobnicate"}), 0);
  EXPECT_NE(Call({"extract", "--corpus", "x"}), 0);
}

TEST_F(CliTest, Stats) {
  ASSERT_EQ(Call(ExtractArgs("p.jsonl")), 0);
  ASSERT_EQ(Call({"stats", "--patterns", (dir_ / "p.jsonl").string()}), 0);
  EXPECT_EQ(out_.str(),
            "verb\tphrases\tpatterns\tconceptualized_fraction\n"
            "eat\t6\t3\t0.833333\n"
            "*mean*\t6.0\t3.0\t0.833333\n");
}

TEST_F(CliTest, Eval) {
  ASSERT_EQ(Call(ExtractArgs("p.jsonl")), 0);
  ASSERT_EQ(Call({"eval", "--patterns", (dir_ / "p.jsonl").string(), "--test",
                  DataPath("fixture_eat/test.tsv"), "--gold",
                  DataPath("fixture_eat/gold.tsv")}),
            0)
      << err_.str();
  EXPECT_NE(out_.str().find("coverage\t0.700000"), std::string::npos);
  EXPECT_NE(out_.str().find("precision\t0.800000"), std::string::npos);

  ASSERT_EQ(Call({"eval", "--baseline", "ib", "--corpus",
                  DataPath("fixture_eat/corpus.tsv"), "--taxonomy",
                  DataPath("fixture_eat/taxonomy.tsv"), "--test",
                  DataPath("fixture_eat/test.tsv"), "--gold",
                  DataPath("fixture_eat/gold.tsv")}),
            0)
      << err_.str();
  EXPECT_NE(out_.str().find("method\tIB"), std::string::npos);
  // IB matches gold only on humble_pie.
  EXPECT_NE(out_.str().find("precision\t0.200000"), std::string::npos);
}

TEST_F(CliTest, Conceptualize) {
  ASSERT_EQ(Call(ExtractArgs("p.jsonl")), 0);
  ASSERT_EQ(Call({"conceptualize", "--patterns", (dir_ / "p.jsonl").string(),
                  "--taxonomy", DataPath("fixture_eat/taxonomy_pitaya.tsv"),
                  "--entity", "pitaya", "--verb", "eat"}),
            0)
      << err_.str();
  auto j = nlohmann::json::parse(out_.str());
  ASSERT_EQ(j["ranking"].size(), 1u);
  EXPECT_EQ(j["ranking"][0]["concept"], "food");
  EXPECT_EQ(j["model"], "verb_aware");
  EXPECT_EQ(j["known_phrase"]["result"], "unknown");

  ASSERT_EQ(
      Call({"conceptualize", "--taxonomy",
            DataPath("fixture_eat/taxonomy_pitaya.tsv"), "--entity", "pitaya"}),
      0)
      << err_.str();
  j = nlohmann::json::parse(out_.str());
  EXPECT_EQ(j["ranking"][0]["concept"], "company");
  EXPECT_TRUE(j["verb"].is_null());
}

}  // namespace
}  // namespace verbpattern::cli
