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

#ifndef ORACLEKIT_TOOLS_CLI_CONFIG_H_
#define ORACLEKIT_TOOLS_CLI_CONFIG_H_

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "oraclekit/jparse/parser.h"
#include "oraclekit/prompt/prompt.h"
#include "oraclekit/verdict/harness.h"
#include "oraclekit/verdict/pit.h"

namespace oraclekit::cli {

struct CorpusConfig {
  std::string project;
  std::vector<std::string> tests;  // test class sources
  std::vector<std::string> cut;    // sources of the classes under test
};

struct BackendSettings {
  std::string kind = "template";  // template | http
  std::string endpoint;
  std::string model;
  std::string auth_env;
  int parallelism = 1;
  int max_new_tokens = 64;
  double temperature = 0.0;
  int timeout_ms = 30000;
  int max_attempts = 4;
  int initial_backoff_ms = 100;
};

struct PipelineConfig {
  std::vector<CorpusConfig> corpus;
  prompt::PromptConfig prompt;
  prompt::PromptFormat format = prompt::PromptFormat::kP6;
  BackendSettings backend;
  verdict::HarnessConfig harness;
  std::set<verdict::KillStatus> detected_statuses =
      verdict::DefaultDetectedStatuses();
  std::uint64_t seed = 0;
  bool dedupe = false;
  std::string output_root = ".";
  std::vector<std::string> extra_assertions;

  jparse::ParseOptions ParseOptions() const;
};

// Parses a JSON configuration document. Relative paths resolve against
// `base_dir`. Unknown keys, wrong types and missing corpus files raise
// Error(kConfigError).
PipelineConfig ParseConfig(std::string_view json_text, const std::string& base_dir);
PipelineConfig LoadConfig(const std::string& path);

}  // namespace oraclekit::cli

#endif  // ORACLEKIT_TOOLS_CLI_CONFIG_H_
