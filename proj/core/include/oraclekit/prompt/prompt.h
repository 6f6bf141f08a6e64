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

#ifndef ORACLEKIT_PROMPT_PROMPT_H_
#define ORACLEKIT_PROMPT_PROMPT_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oraclekit/decompose/dataset.h"
#include "oraclekit/decompose/sample.h"

namespace oraclekit::prompt {

// Ordered by information content: P1 prefix; P2 +doc; P3 +signature;
// P4 +doc+signature; P5 +method body; P6 +doc+method body.
enum class PromptFormat { kP1 = 1, kP2, kP3, kP4, kP5, kP6 };

std::string_view FormatName(PromptFormat format);
// Accepts "P1".."P6" in either case.
std::optional<PromptFormat> ParseFormat(std::string_view name);

enum class TokenizerMode { kHeuristic, kBackendReported };

// What to do when even the last format in the chain is over budget.
enum class OverBudgetPolicy { kTruncate, kSkip };

using TokenCounter = std::function<std::int64_t(std::string_view)>;

struct PromptConfig {
  std::string sep_token = "\n//<sep>\n";
  std::int64_t max_tokens = 600;
  std::vector<PromptFormat> fallback_chain = {PromptFormat::kP6,
                                              PromptFormat::kP3,
                                              PromptFormat::kP1};
  TokenizerMode tokenizer = TokenizerMode::kHeuristic;
  // Consulted in kBackendReported mode; heuristic counting is used when unset.
  TokenCounter backend_counter;
  OverBudgetPolicy over_budget = OverBudgetPolicy::kTruncate;

  // Throws Error(kConfigError) if max_tokens <= 0, the chain is empty, or the
  // chain is not strictly decreasing.
  void Validate() const;
};

// Concatenates the fields of `format` with the separator. The prefix is its
// statements joined by '\n'. An empty docstring is omitted together with its
// separator. Throws Error(kMissingField) when P3-P6 lack the method record
// and Error(kSeparatorInField) when the separator occurs inside a field.
std::string BuildPrompt(const decompose::OracleSample& sample,
                        PromptFormat format, const PromptConfig& config);

// Heuristic mode: ceil(code points / 4).
std::int64_t CountTokens(std::string_view text, const PromptConfig& config);

struct PromptChoice {
  PromptFormat format = PromptFormat::kP1;
  std::string text;
  std::int64_t tokens = 0;
  bool truncated = false;
  bool skipped = false;  // only under OverBudgetPolicy::kSkip
};

// First chain format whose prompt fits max_tokens. If none fits, the last
// format is used with leading prefix statements dropped (and, if needed,
// leading characters cut) until it fits, flagged truncated.
PromptChoice SelectFormatWithFallback(const decompose::OracleSample& sample,
                                      const PromptConfig& config);

struct FinetunePair {
  std::string prompt;
  std::string completion;
};

// One pair per training sample, in id order.
std::vector<FinetunePair> ExportFinetunePairs(
    const decompose::DatasetSplit& split, PromptFormat format,
    const PromptConfig& config);

// {"prompt": ..., "completion": ...} per line.
std::string FinetunePairsToJsonl(std::span<const FinetunePair> pairs);

}  // namespace oraclekit::prompt

#endif  // ORACLEKIT_PROMPT_PROMPT_H_
