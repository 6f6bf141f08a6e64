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

#include "cli/config.h"

#include <filesystem>
#include <initializer_list>

#include "json.hpp"
#include "oraclekit/common/error.h"
#include "oraclekit/common/text.h"

namespace oraclekit::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

[[noreturn]] void Fail(const std::string& message) {
  throw Error(ErrorCode::kConfigError, message);
}

void CheckKeys(const json& object, std::string_view where,
               std::initializer_list<std::string_view> allowed) {
  if (!object.is_object()) Fail(std::string(where) + " must be an object");
  for (const auto& [key, value] : object.items()) {
    bool ok = false;
    for (auto name : allowed) ok |= key == name;
    if (!ok) Fail("unknown key \"" + key + "\" in " + std::string(where));
  }
}

template <class T>
T Get(const json& object, std::string_view where, const char* key) {
  try {
    return object.at(key).get<T>();
  } catch (const json::exception&) {
    Fail(std::string(where) + "." + key + " has the wrong type");
  }
}

std::string ResolvePath(const std::string& base_dir, const std::string& path,
                        bool must_exist) {
  fs::path p(path);
  if (p.is_relative() && !base_dir.empty()) p = fs::path(base_dir) / p;
  std::string resolved = p.lexically_normal().string();
  if (must_exist && !fs::exists(p)) Fail("path does not exist: " + resolved);
  return resolved;
}

prompt::PromptFormat FormatOf(const std::string& name) {
  auto format = prompt::ParseFormat(name);
  if (!format) Fail("unknown prompt format " + name);
  return *format;
}

void ParsePrompt(const json& j, PipelineConfig& config) {
  constexpr std::string_view kWhere = "prompt";
  CheckKeys(j, kWhere,
            {"format", "sep_token", "max_tokens", "fallback_chain", "tokenizer",
             "over_budget"});
  if (j.contains("format")) config.format = FormatOf(Get<std::string>(j, kWhere, "format"));
  if (j.contains("sep_token")) {
    config.prompt.sep_token = Get<std::string>(j, kWhere, "sep_token");
  }
  if (j.contains("max_tokens")) {
    config.prompt.max_tokens = Get<std::int64_t>(j, kWhere, "max_tokens");
  }
  if (j.contains("fallback_chain")) {
    config.prompt.fallback_chain.clear();
    for (const auto& name : Get<std::vector<std::string>>(j, kWhere, "fallback_chain")) {
      config.prompt.fallback_chain.push_back(FormatOf(name));
    }
  }
  if (j.contains("tokenizer")) {
    std::string mode = Get<std::string>(j, kWhere, "tokenizer");
    if (mode == "heuristic") {
      config.prompt.tokenizer = prompt::TokenizerMode::kHeuristic;
    } else if (mode == "backend") {
      config.prompt.tokenizer = prompt::TokenizerMode::kBackendReported;
    } else {
      Fail("prompt.tokenizer must be heuristic or backend");
    }
  }
  if (j.contains("over_budget")) {
    std::string policy = Get<std::string>(j, kWhere, "over_budget");
    if (policy == "truncate") {
      config.prompt.over_budget = prompt::OverBudgetPolicy::kTruncate;
    } else if (policy == "skip") {
      config.prompt.over_budget = prompt::OverBudgetPolicy::kSkip;
    } else {
      Fail("prompt.over_budget must be truncate or skip");
    }
  }
  config.prompt.Validate();
}

void ParseBackend(const json& j, BackendSettings& backend) {
  constexpr std::string_view kWhere = "backend";
  CheckKeys(j, kWhere,
            {"kind", "endpoint", "model", "auth_env", "parallelism",
             "max_new_tokens", "temperature", "timeout_ms", "max_attempts",
             "initial_backoff_ms"});
  if (j.contains("kind")) backend.kind = Get<std::string>(j, kWhere, "kind");
  if (backend.kind != "template" && backend.kind != "http") {
    Fail("backend.kind must be template or http");
  }
  if (j.contains("endpoint")) backend.endpoint = Get<std::string>(j, kWhere, "endpoint");
  if (j.contains("model")) backend.model = Get<std::string>(j, kWhere, "model");
  if (j.contains("auth_env")) backend.auth_env = Get<std::string>(j, kWhere, "auth_env");
  if (j.contains("parallelism")) backend.parallelism = Get<int>(j, kWhere, "parallelism");
  if (j.contains("max_new_tokens")) {
    backend.max_new_tokens = Get<int>(j, kWhere, "max_new_tokens");
  }
  if (j.contains("temperature")) backend.temperature = Get<double>(j, kWhere, "temperature");
  if (j.contains("timeout_ms")) backend.timeout_ms = Get<int>(j, kWhere, "timeout_ms");
  if (j.contains("max_attempts")) backend.max_attempts = Get<int>(j, kWhere, "max_attempts");
  if (j.contains("initial_backoff_ms")) {
    backend.initial_backoff_ms = Get<int>(j, kWhere, "initial_backoff_ms");
  }
  if (backend.parallelism < 1) Fail("backend.parallelism must be at least 1");
  if (backend.max_attempts < 1) Fail("backend.max_attempts must be at least 1");
  if (backend.kind == "http" && backend.endpoint.empty()) {
    Fail("backend.endpoint is required for the http backend");
  }
}

}  // namespace

jparse::ParseOptions PipelineConfig::ParseOptions() const {
  return jparse::ParseOptions{jparse::AssertionSet(extra_assertions)};
}

PipelineConfig ParseConfig(std::string_view json_text, const std::string& base_dir) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    Fail(std::string("config is not valid JSON: ") + e.what());
  }
  constexpr std::string_view kWhere = "config";
  CheckKeys(j, kWhere,
            {"corpus", "prompt", "backend", "harness", "detected_statuses", "seed",
             "dedupe", "output_root", "assertions"});
  PipelineConfig config;
  if (j.contains("corpus")) {
    if (!j["corpus"].is_array()) Fail("corpus must be an array");
    for (const auto& item : j["corpus"]) {
      CheckKeys(item, "corpus entry", {"project", "tests", "cut"});
      CorpusConfig corpus;
      corpus.project = Get<std::string>(item, "corpus entry", "project");
      if (corpus.project.empty()) Fail("corpus entry needs a project name");
      for (const auto& path : Get<std::vector<std::string>>(item, "corpus entry", "tests")) {
        corpus.tests.push_back(ResolvePath(base_dir, path, true));
      }
      if (item.contains("cut")) {
        for (const auto& path : Get<std::vector<std::string>>(item, "corpus entry", "cut")) {
          corpus.cut.push_back(ResolvePath(base_dir, path, true));
        }
      }
      config.corpus.push_back(std::move(corpus));
    }
  }
  if (j.contains("prompt")) ParsePrompt(j["prompt"], config);
  if (j.contains("backend")) ParseBackend(j["backend"], config.backend);
  if (j.contains("harness")) {
    CheckKeys(j["harness"], "harness", {"compile", "execute"});
    if (j["harness"].contains("compile")) {
      config.harness.compile_command = Get<std::string>(j["harness"], "harness", "compile");
    }
    if (j["harness"].contains("execute")) {
      config.harness.execute_command = Get<std::string>(j["harness"], "harness", "execute");
    }
  }
  if (j.contains("detected_statuses")) {
    config.detected_statuses.clear();
    for (const auto& name : Get<std::vector<std::string>>(j, kWhere, "detected_statuses")) {
      auto status = verdict::ParseKillStatus(name);
      if (!status) Fail("unknown mutant status " + name);
      config.detected_statuses.insert(*status);
    }
  }
  if (j.contains("seed")) config.seed = Get<std::uint64_t>(j, kWhere, "seed");
  if (j.contains("dedupe")) config.dedupe = Get<bool>(j, kWhere, "dedupe");
  if (j.contains("output_root")) {
    config.output_root =
        ResolvePath(base_dir, Get<std::string>(j, kWhere, "output_root"), false);
  }
  if (j.contains("assertions")) {
    config.extra_assertions = Get<std::vector<std::string>>(j, kWhere, "assertions");
  }
  return config;
}

PipelineConfig LoadConfig(const std::string& path) {
  if (!fs::exists(path)) Fail("config file not found: " + path);
  std::string base = fs::path(path).parent_path().string();
  return ParseConfig(ReadFile(path), base);
}

}  // namespace oraclekit::cli
