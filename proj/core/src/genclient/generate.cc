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

#include "oraclekit/genclient/generate.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <utility>

#include "json.hpp"
#include "oraclekit/common/error.h"
#include "oraclekit/common/text.h"

namespace oraclekit::genclient {
namespace {

using ojson = nlohmann::ordered_json;

std::string Dump(const ojson& j) {
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

void Trace(const GenerationConfig& config, const GeneratorBackend& backend,
           const GenerationResult& result, int attempt, std::int64_t latency_ms,
           const std::string& error) {
  if (config.trace == nullptr) return;
  ojson j;
  j["sample_id"] = result.sample_id;
  j["backend"] = backend.Name();
  j["model"] = backend.Model();
  j["format"] = std::string(prompt::FormatName(result.format_used));
  j["attempt"] = attempt;
  j["request"] = result.prompt;
  j["response"] = error.empty() ? result.raw : "";
  j["error"] = error;
  j["latency_ms"] = latency_ms;
  config.trace->Write(Dump(j));
}

// Fills prompt fields and calls the backend; `result.retries` counts the
// retries spent even when this throws.
void Attempt(const decompose::OracleSample& sample, GeneratorBackend& backend,
             const GenerationConfig& config, GenerationResult& result) {
  result.sample_id = sample.id;
  result.project_id = sample.project_id;

  prompt::PromptConfig prompt_config = config.prompt;
  if (prompt_config.tokenizer == prompt::TokenizerMode::kBackendReported &&
      !prompt_config.backend_counter) {
    prompt_config.backend_counter = [&backend](std::string_view text) {
      auto count = backend.CountTokens(text);
      return count.has_value() ? *count
                               : (CountCodePoints(text) + 3) / 4;
    };
  }
  prompt::PromptChoice choice =
      prompt::SelectFormatWithFallback(sample, prompt_config);
  result.format_used = choice.format;
  result.prompt = choice.text;
  result.truncated = choice.truncated;
  result.skipped = choice.skipped;
  if (choice.skipped) {
    result.parsed = ParsedOracle{ParsedKind::kEmpty, ""};
    return;
  }

  GenerationRequest request{sample.id, choice.text, &sample};
  auto sleep = config.sleep ? config.sleep : [](std::chrono::milliseconds d) {
    std::this_thread::sleep_for(d);
  };
  const int attempts = std::max(1, config.retry.max_attempts);
  for (int attempt = 0;; ++attempt) {
    auto start = std::chrono::steady_clock::now();
    try {
      result.raw = backend.Generate(request);
      result.latency_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
      Trace(config, backend, result, attempt, result.latency_ms, "");
      break;
    } catch (const Error& e) {
      auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
      Trace(config, backend, result, attempt, elapsed, e.what());
      if (e.code() != ErrorCode::kTransientBackend) {
        throw Error(ErrorCode::kBackendUnavailable, e.what());
      }
      if (attempt + 1 >= attempts) {
        throw Error(ErrorCode::kBackendUnavailable,
                    "gave up after " + std::to_string(attempts) +
                        " attempts: " + e.what());
      }
      result.retries = attempt + 1;
      sleep(config.retry.BackoffBefore(result.retries));
    }
  }
  result.parsed = ParseCompletion(result.raw, config.parse);
}

}  // namespace

std::chrono::milliseconds RetryPolicy::BackoffBefore(int retry) const {
  double factor = std::pow(multiplier, std::max(0, retry - 1));
  auto ms = static_cast<std::int64_t>(
      static_cast<double>(initial_backoff.count()) * factor);
  return std::min(std::chrono::milliseconds(ms), max_backoff);
}

TraceSink::TraceSink(const std::string& path)
    : out_(path, std::ios::binary | std::ios::app) {
  if (!out_) throw Error(ErrorCode::kIoError, "cannot open trace file " + path);
}

void TraceSink::Write(const std::string& json_line) {
  std::lock_guard<std::mutex> lock(mu_);
  out_ << json_line << '\n';
  out_.flush();
}

GenerationResult GenerateOracle(const decompose::OracleSample& sample,
                                GeneratorBackend& backend,
                                const GenerationConfig& config) {
  GenerationResult result;
  Attempt(sample, backend, config, result);
  return result;
}

std::vector<GenerationResult> RunBatch(
    std::span<const decompose::OracleSample> samples, GeneratorBackend& backend,
    const GenerationConfig& config, int parallelism) {
  if (parallelism < 1) {
    throw Error(ErrorCode::kConfigError, "parallelism must be at least 1");
  }
  std::vector<GenerationResult> results(samples.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= samples.size()) return;
      GenerationResult& result = results[i];
      try {
        Attempt(samples[i], backend, config, result);
      } catch (const Error& e) {
        result.failed = true;
        result.error = e.what();
        result.raw.clear();
        result.parsed = ParsedOracle{ParsedKind::kEmpty, ""};
        if (e.code() == ErrorCode::kBackendUnavailable) {
          result.retries = std::max(result.retries,
                                    std::max(1, config.retry.max_attempts) - 1);
        }
      }
    }
  };
  std::size_t threads =
      std::min<std::size_t>(static_cast<std::size_t>(parallelism),
                            std::max<std::size_t>(samples.size(), 1));
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& thread : pool) thread.join();

  std::stable_sort(results.begin(), results.end(),
                   [](const GenerationResult& a, const GenerationResult& b) {
                     return a.sample_id < b.sample_id;
                   });
  return results;
}

std::string GenerationResultsToJsonl(std::span<const GenerationResult> results) {
  std::string out;
  for (const auto& r : results) {
    ojson j;
    j["id"] = r.sample_id;
    j["project"] = r.project_id;
    j["format"] = std::string(prompt::FormatName(r.format_used));
    j["prompt"] = r.prompt;
    j["raw"] = r.raw;
    j["kind"] = std::string(ParsedKindName(r.parsed.kind));
    j["payload"] = r.parsed.payload;
    j["retries"] = r.retries;
    j["truncated"] = r.truncated;
    j["skipped"] = r.skipped;
    j["failed"] = r.failed;
    j["error"] = r.error;
    out.append(Dump(j));
    out.push_back('\n');
  }
  return out;
}

std::vector<GenerationResult> ParseGenerationResultsJsonl(std::string_view jsonl) {
  std::vector<GenerationResult> out;
  long row = 0;
  for (const std::string& line : SplitLines(jsonl)) {
    ++row;
    if (Trim(line).empty()) continue;
    try {
      nlohmann::json j = nlohmann::json::parse(line);
      GenerationResult r;
      r.sample_id = j.at("id").get<std::string>();
      r.project_id = j.at("project").get<std::string>();
      auto format = prompt::ParseFormat(j.at("format").get<std::string>());
      if (!format) throw SchemaError("unknown prompt format", row);
      r.format_used = *format;
      r.prompt = j.at("prompt").get<std::string>();
      r.raw = j.at("raw").get<std::string>();
      auto kind = ParseParsedKind(j.at("kind").get<std::string>());
      if (!kind) throw SchemaError("unknown oracle kind", row);
      r.parsed = ParsedOracle{*kind, j.at("payload").get<std::string>()};
      r.retries = j.at("retries").get<int>();
      r.truncated = j.at("truncated").get<bool>();
      r.skipped = j.at("skipped").get<bool>();
      r.failed = j.at("failed").get<bool>();
      r.error = j.at("error").get<std::string>();
      out.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError(std::string("generation record: ") + e.what(), row);
    }
  }
  return out;
}

std::vector<GenerationResult> ReadGenerationResultsJsonl(const std::string& path) {
  return ParseGenerationResultsJsonl(ReadFile(path));
}

}  // namespace oraclekit::genclient
