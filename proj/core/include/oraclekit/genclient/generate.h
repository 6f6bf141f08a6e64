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

#ifndef ORACLEKIT_GENCLIENT_GENERATE_H_
#define ORACLEKIT_GENCLIENT_GENERATE_H_

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oraclekit/decompose/sample.h"
#include "oraclekit/genclient/backend.h"
#include "oraclekit/genclient/completion.h"
#include "oraclekit/jparse/parser.h"
#include "oraclekit/prompt/prompt.h"

namespace oraclekit::genclient {

struct RetryPolicy {
  int max_attempts = 4;
  std::chrono::milliseconds initial_backoff{100};
  double multiplier = 2.0;
  std::chrono::milliseconds max_backoff{5000};

  std::chrono::milliseconds BackoffBefore(int retry) const;
};

// Appends JSON lines from many threads.
class TraceSink {
 public:
  explicit TraceSink(const std::string& path);
  void Write(const std::string& json_line);

 private:
  std::mutex mu_;
  std::ofstream out_;
};

struct GenerationConfig {
  prompt::PromptConfig prompt;
  RetryPolicy retry;
  jparse::ParseOptions parse;
  TraceSink* trace = nullptr;
  // Replaceable for tests.
  std::function<void(std::chrono::milliseconds)> sleep;
};

struct GenerationResult {
  std::string sample_id;
  std::string project_id;
  prompt::PromptFormat format_used = prompt::PromptFormat::kP1;
  std::string prompt;
  std::string raw;
  ParsedOracle parsed;
  std::int64_t latency_ms = 0;  // kept out of the JSONL form
  int retries = 0;
  bool truncated = false;
  bool skipped = false;
  bool failed = false;
  std::string error;
};

// Builds the prompt through the fallback chain, calls the backend with
// exponential backoff on transient errors, and parses the completion.
// Throws Error(kBackendUnavailable) once retries are exhausted.
GenerationResult GenerateOracle(const decompose::OracleSample& sample,
                                GeneratorBackend& backend,
                                const GenerationConfig& config);

// Runs GenerateOracle with at most `parallelism` calls in flight. Backend
// failures become entries with failed=true. Output is sorted by sample id.
std::vector<GenerationResult> RunBatch(
    std::span<const decompose::OracleSample> samples, GeneratorBackend& backend,
    const GenerationConfig& config, int parallelism);

// Keys: id, project, format, prompt, raw, kind, payload, retries, truncated,
// skipped, failed, error.
std::string GenerationResultsToJsonl(std::span<const GenerationResult> results);
std::vector<GenerationResult> ParseGenerationResultsJsonl(std::string_view jsonl);
std::vector<GenerationResult> ReadGenerationResultsJsonl(const std::string& path);

}  // namespace oraclekit::genclient

#endif  // ORACLEKIT_GENCLIENT_GENERATE_H_
