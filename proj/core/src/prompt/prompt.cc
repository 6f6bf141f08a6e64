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

#include "oraclekit/prompt/prompt.h"

#include <algorithm>

#include "json.hpp"
#include "oraclekit/common/error.h"
#include "oraclekit/common/text.h"

namespace oraclekit::prompt {
namespace {

struct Fields {
  bool doc = false;
  bool signature = false;
  bool body = false;
};

Fields FieldsOf(PromptFormat format) {
  switch (format) {
    case PromptFormat::kP1: return {false, false, false};
    case PromptFormat::kP2: return {true, false, false};
    case PromptFormat::kP3: return {false, true, false};
    case PromptFormat::kP4: return {true, true, false};
    case PromptFormat::kP5: return {false, false, true};
    case PromptFormat::kP6: return {true, false, true};
  }
  return {};
}

std::string Assemble(const std::vector<std::string>& prefix,
                     const decompose::OracleSample& sample, PromptFormat format,
                     const PromptConfig& config) {
  Fields fields = FieldsOf(format);
  std::vector<std::string> parts;
  parts.push_back(Join(prefix, "\n"));
  std::string doc = sample.mut.javadoc.value_or("");
  if (fields.doc && !doc.empty()) parts.push_back(doc);
  if (fields.signature) {
    if (sample.mut.signature.empty()) {
      throw Error(ErrorCode::kMissingField,
                  std::string(FormatName(format)) +
                      " needs the method signature of sample " + sample.id);
    }
    parts.push_back(sample.mut.signature);
  }
  if (fields.body) {
    if (sample.mut.full_text.empty()) {
      throw Error(ErrorCode::kMissingField,
                  std::string(FormatName(format)) +
                      " needs the method body of sample " + sample.id);
    }
    parts.push_back(sample.mut.full_text);
  }
  if (!config.sep_token.empty()) {
    for (const auto& part : parts) {
      if (part.find(config.sep_token) != std::string::npos) {
        throw Error(ErrorCode::kSeparatorInField,
                    "separator occurs inside a field of sample " + sample.id);
      }
    }
  }
  return Join(parts, config.sep_token);
}

// Drops `count` code points from the front of `text`.
std::string DropFrontCodePoints(const std::string& text, std::int64_t count) {
  std::size_t i = 0;
  std::int64_t seen = 0;
  while (i < text.size() && seen < count) {
    ++i;
    while (i < text.size() &&
           (static_cast<unsigned char>(text[i]) & 0xC0) == 0x80) {
      ++i;
    }
    ++seen;
  }
  return text.substr(i);
}

}  // namespace

std::string_view FormatName(PromptFormat format) {
  switch (format) {
    case PromptFormat::kP1: return "P1";
    case PromptFormat::kP2: return "P2";
    case PromptFormat::kP3: return "P3";
    case PromptFormat::kP4: return "P4";
    case PromptFormat::kP5: return "P5";
    case PromptFormat::kP6: return "P6";
  }
  return "P1";
}

std::optional<PromptFormat> ParseFormat(std::string_view name) {
  if (name.size() != 2 || (name[0] != 'P' && name[0] != 'p')) return std::nullopt;
  for (int i = 1; i <= 6; ++i) {
    auto f = static_cast<PromptFormat>(i);
    if (FormatName(f)[1] == name[1]) return f;
  }
  return std::nullopt;
}

void PromptConfig::Validate() const {
  if (max_tokens <= 0) {
    throw Error(ErrorCode::kConfigError, "max_tokens must be positive");
  }
  if (fallback_chain.empty()) {
    throw Error(ErrorCode::kConfigError, "fallback chain is empty");
  }
  for (std::size_t i = 1; i < fallback_chain.size(); ++i) {
    if (static_cast<int>(fallback_chain[i]) >=
        static_cast<int>(fallback_chain[i - 1])) {
      throw Error(ErrorCode::kConfigError,
                  "fallback chain must strictly decrease in information");
    }
  }
}

std::string BuildPrompt(const decompose::OracleSample& sample,
                        PromptFormat format, const PromptConfig& config) {
  return Assemble(sample.PrefixTexts(), sample, format, config);
}

std::int64_t CountTokens(std::string_view text, const PromptConfig& config) {
  if (config.tokenizer == TokenizerMode::kBackendReported &&
      config.backend_counter) {
    return config.backend_counter(text);
  }
  return (CountCodePoints(text) + 3) / 4;
}

PromptChoice SelectFormatWithFallback(const decompose::OracleSample& sample,
                                      const PromptConfig& config) {
  config.Validate();
  for (PromptFormat format : config.fallback_chain) {
    std::string text = BuildPrompt(sample, format, config);
    std::int64_t tokens = CountTokens(text, config);
    if (tokens <= config.max_tokens) {
      return PromptChoice{format, std::move(text), tokens, false, false};
    }
  }

  PromptChoice choice;
  choice.format = config.fallback_chain.back();
  if (config.over_budget == OverBudgetPolicy::kSkip) {
    choice.skipped = true;
    return choice;
  }
  choice.truncated = true;
  std::vector<std::string> prefix = sample.PrefixTexts();
  while (!prefix.empty()) {
    prefix.erase(prefix.begin());
    choice.text = Assemble(prefix, sample, choice.format, config);
    choice.tokens = CountTokens(choice.text, config);
    if (choice.tokens <= config.max_tokens) return choice;
  }
  // Still over budget with no prefix left: cut characters from the front.
  std::string full = Assemble(prefix, sample, choice.format, config);
  std::int64_t lo = 0;
  std::int64_t hi = CountCodePoints(full);
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (CountTokens(DropFrontCodePoints(full, mid), config) <= config.max_tokens) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  choice.text = DropFrontCodePoints(full, lo);
  choice.tokens = CountTokens(choice.text, config);
  return choice;
}

std::vector<FinetunePair> ExportFinetunePairs(
    const decompose::DatasetSplit& split, PromptFormat format,
    const PromptConfig& config) {
  std::vector<FinetunePair> pairs;
  pairs.reserve(split.train.size());
  for (const auto& sample : split.train) {
    pairs.push_back(FinetunePair{BuildPrompt(sample, format, config),
                                 sample.ground_truth.Completion()});
  }
  return pairs;
}

std::string FinetunePairsToJsonl(std::span<const FinetunePair> pairs) {
  std::string out;
  for (const auto& pair : pairs) {
    nlohmann::ordered_json j;
    j["prompt"] = pair.prompt;
    j["completion"] = pair.completion;
    out.append(j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace));
    out.push_back('\n');
  }
  return out;
}

}  // namespace oraclekit::prompt
