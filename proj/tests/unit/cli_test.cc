// Copyright 2026 The oraclekit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli/cli.h"
#include "cli/config.h"
#include "oraclekit/common/error.h"
#include "oraclekit/common/text.h"
#include "oraclekit/integrate/suite.h"
#include "oraclekit/verdict/verdict.h"
#include "support/test_util.h"

namespace oraclekit::cli {
namespace {

using testing::CliRun;
using testing::RunTool;
using testing::TempDir;
using testing::TestdataPath;

// Verdicts and a manifest encoding T=100 with 5 compile errors, 25 false
// positives and 10 empty oracles.
void WriteScoreInputs(const TempDir& dir) {
  std::vector<verdict::Verdict> verdicts;
  std::vector<integrate::ManifestRow> manifest;
  for (int i = 0; i < 100; ++i) {
    char id[32];
    std::snprintf(id, sizeof(id), "proj:C:t%03d:000", i);
    if (i < 10) {
      manifest.push_back({id, "", "", "empty", "no oracle generated"});
      continue;
    }
    manifest.push_back({id, "C.java", "m", "assertion", ""});
    if (i < 15) {
      verdicts.push_back({id, verdict::Phase::kCompile, verdict::Status::kFail, ""});
      continue;
    }
    verdicts.push_back({id, verdict::Phase::kCompile, verdict::Status::kPass, ""});
    verdicts.push_back({id, verdict::Phase::kExecute,
                        i < 40 ? verdict::Status::kFail : verdict::Status::kPass, ""});
  }
  WriteFile(dir.Path("verdicts.jsonl"), verdict::VerdictsToJsonl(verdicts));
  WriteFile(dir.Path("manifest.jsonl"), integrate::ManifestToJsonl(manifest));
}

TEST(CliTest, ScorePrintsSuccessRate) {
  TempDir dir;
  WriteScoreInputs(dir);
  CliRun run = RunTool({"score", "--verdicts", dir.Path("verdicts.jsonl"), "--manifest",
                        dir.Path("manifest.jsonl")});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  EXPECT_NE(run.out.find("proj,100,5,25,10,60,0,60.0%"), std::string::npos) << run.out;
  EXPECT_NE(run.out.find("ALL,100,5,25,10,60,0,60.0%"), std::string::npos) << run.out;
}

TEST(CliTest, MutantsMismatchExitsWithDataError) {
  TempDir dir;
  WriteFile(dir.Path("gen.csv"), "A.java,A,M,f,1,KILLED,t\n");
  WriteFile(dir.Path("orig.csv"), "A.java,A,M,f,2,KILLED,t\n");
  WriteFile(dir.Path("imp.csv"), "A.java,A,M,f,1,SURVIVED,none\n");
  CliRun run = RunTool({"mutants", "--gen", dir.Path("gen.csv"), "--orig", dir.Path("orig.csv"),
                        "--implicit", dir.Path("imp.csv")});
  EXPECT_EQ(run.code, kExitData);
  EXPECT_NE(run.err.find("KeyMismatch"), std::string::npos) << run.err;
}

TEST(CliTest, MutantsReport) {
  TempDir dir;
  WriteFile(dir.Path("gen.csv"),
            "A.java,A,M,f,1,KILLED,t\nA.java,A,M,f,2,KILLED,t\nA.java,A,M,f,3,SURVIVED,none\n");
  WriteFile(dir.Path("orig.csv"),
            "A.java,A,M,f,1,KILLED,t\nA.java,A,M,f,2,SURVIVED,t\nA.java,A,M,f,3,TIMED_OUT,none\n");
  WriteFile(dir.Path("imp.csv"),
            "A.java,A,M,f,1,KILLED,t\nA.java,A,M,f,2,SURVIVED,t\nA.java,A,M,f,3,SURVIVED,none\n");
  CliRun run = RunTool({"--format", "json", "mutants", "--gen", dir.Path("gen.csv"), "--orig",
                        dir.Path("orig.csv"), "--implicit", dir.Path("imp.csv")});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  EXPECT_NE(run.out.find("\"gen_total\": 1"), std::string::npos) << run.out;
  EXPECT_NE(run.out.find("\"orig_unique\": 1"), std::string::npos) << run.out;
}

TEST(CliTest, TemplateGenerateIsDeterministic) {
  TempDir dir;
  std::string config = TestdataPath("mini_corpus/config.json");
  ASSERT_EQ(RunTool({"--config", config, "decompose", "-o", dir.Path("s.jsonl")}).code, kExitOk);
  for (const char* out : {"g1.jsonl", "g2.jsonl"}) {
    CliRun run = RunTool({"--config", config, "generate", "-i", dir.Path("s.jsonl"), "--backend",
                          "template", "--parallelism", "3", "-o", dir.Path(out)});
    ASSERT_EQ(run.code, kExitOk) << run.err;
  }
  std::string a = ReadFile(dir.Path("g1.jsonl"));
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, ReadFile(dir.Path("g2.jsonl")));
}

TEST(CliTest, DiversityFromCounts) {
  CliRun run = RunTool({"diversity", "--counts", TestdataPath("diversity_counts.json")});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  EXPECT_NE(run.out.find("assertNotNull,18033,16.1%,79476,40.8%,9203,11.6%"), std::string::npos)
      << run.out;
  EXPECT_NE(run.out.find("total,112253,100.0%,194871,100.0%,18630,9.6%"), std::string::npos)
      << run.out;
}

TEST(CliTest, D4jReport) {
  std::string base = TestdataPath("d4j/togll/");
  CliRun run = RunTool({"d4j", "--buggy", base + "buggy.jsonl", "--fixed", base + "fixed.jsonl",
                        "--tests", base + "tests.jsonl"});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  EXPECT_NE(run.out.find("374,27,37,1,65,64,0.42"), std::string::npos) << run.out;
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(RunTool({}).code, kExitUsage);
  EXPECT_EQ(RunTool({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(RunTool({"score"}).code, kExitUsage);
  CliRun help = RunTool({"--help"});
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_NE(help.out.find("oraclekit"), std::string::npos);
}

TEST(CliTest, MissingInputIsDataError) {
  CliRun run = RunTool({"score", "--verdicts", "/nonexistent/verdicts.jsonl"});
  EXPECT_EQ(run.code, kExitData);
}

TEST(CliTest, HarnessFailureIsExternalError) {
  TempDir dir;
  WriteFile(dir.Path("manifest_GEN.jsonl"), "");
  WriteFile(dir.Path("config.json"), "{\"harness\": {\"compile\": \"" + testing::FakeHarnessPath() +
                                         " --mode none {suiteDir} {out}\"}}");
  CliRun run = RunTool({"--config", dir.Path("config.json"), "harness", "--suite-dir", dir.Path(),
                        "--work-dir", dir.Path("work")});
  EXPECT_EQ(run.code, kExitExternal) << run.err;
}

TEST(ConfigTest, RejectsUnknownKeysAndBadValues) {
  TempDir dir;
  auto expect_config_error = [&](const std::string& text) {
    WriteFile(dir.Path("c.json"), text);
    try {
      LoadConfig(dir.Path("c.json"));
      ADD_FAILURE() << "accepted " << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kConfigError) << text;
    }
  };
  expect_config_error("{\"bogus\": 1}");
  expect_config_error("{\"prompt\": {\"format\": \"P9\"}}");
  expect_config_error("{\"backend\": {\"kind\": \"http\"}}");
  expect_config_error("{\"backend\": {\"parallelism\": 0}}");
  expect_config_error("{\"seed\": \"seven\"}");
  expect_config_error("{\"corpus\": [{\"project\": \"p\", \"tests\": [\"missing.java\"]}]}");
  expect_config_error("not json");
}

TEST(ConfigTest, ResolvesPathsAgainstConfigDirectory) {
  PipelineConfig config = LoadConfig(TestdataPath("mini_corpus/config.json"));
  ASSERT_EQ(config.corpus.size(), 2u);
  EXPECT_EQ(config.corpus[0].project, "stack");
  EXPECT_TRUE(std::filesystem::exists(config.corpus[0].tests[0]));
  EXPECT_EQ(config.seed, 7u);
  EXPECT_EQ(config.backend.parallelism, 4);
}

}  // namespace
}  // namespace oraclekit::cli
