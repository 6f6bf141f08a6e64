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

#include "oraclekit/metrics/match.h"

#include <algorithm>
#include <map>

#include "oraclekit/common/error.h"
#include "oraclekit/common/text.h"
#include "oraclekit/jparse/lexer.h"

namespace oraclekit::metrics {
namespace {

std::size_t CategoryRank(const std::string& category) {
  static const std::vector<std::string> kOrder = {
      "assertNotNull", "assertEquals", "assertNull",  "assertSame",
      "assertFalse",   "assertNotSame", "assertTrue", "exception",
      "empty",         std::string(kSyntacticallyIncorrect)};
  auto it = std::find(kOrder.begin(), kOrder.end(), category);
  return static_cast<std::size_t>(it - kOrder.begin());
}

std::vector<DistributionRow> ToRows(const std::map<std::string, std::int64_t>& counts) {
  std::int64_t total = 0;
  for (const auto& [category, count] : counts) total += count;
  std::vector<DistributionRow> rows;
  for (const auto& [category, count] : counts) {
    if (count == 0) continue;
    rows.push_back(DistributionRow{
        category, count,
        static_cast<double>(count) / static_cast<double>(total)});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const DistributionRow& a, const DistributionRow& b) {
                     return CategoryRank(a.category) < CategoryRank(b.category);
                   });
  return rows;
}

}  // namespace

const std::vector<std::string>& DistributionCategories() {
  static const std::vector<std::string> kCategories = {
      "assertNotNull", "assertEquals",  "assertNull", "assertSame",
      "assertFalse",   "assertNotSame", "assertTrue",
      std::string(kSyntacticallyIncorrect)};
  return kCategories;
}

std::string NormalizeOracle(std::string_view text) {
  std::string_view trimmed = Trim(text);
  if (trimmed.rfind("//", 0) == 0) return CollapseWhitespace(trimmed);
  return jparse::NormalizeCode(trimmed);
}

std::string PredictionCategory(std::string_view prediction,
                               const jparse::ParseOptions& options) {
  genclient::ParsedOracle parsed = genclient::ParseCompletion(prediction, options);
  switch (parsed.kind) {
    case genclient::ParsedKind::kAssertion:
      return genclient::AssertionName(parsed, options);
    case genclient::ParsedKind::kException:
      return "exception";
    case genclient::ParsedKind::kEmpty:
      return "empty";
    case genclient::ParsedKind::kInvalid:
      break;
  }
  return std::string(kSyntacticallyIncorrect);
}

ExactMatchReport ExactMatchRate(std::span<const std::string> predictions,
                                std::span<const std::string> truths,
                                const jparse::ParseOptions& options) {
  if (predictions.size() != truths.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "predictions and truths differ in length (" +
                    std::to_string(predictions.size()) + " vs " +
                    std::to_string(truths.size()) + ")");
  }
  ExactMatchReport report;
  std::map<std::string, CategoryMatch> by_category;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    std::string category = PredictionCategory(predictions[i], options);
    CategoryMatch& bucket = by_category[category];
    bucket.category = category;
    ++bucket.total;
    ++report.total;
    bool empty = Trim(predictions[i]).empty();
    if (!empty && NormalizeOracle(predictions[i]) == NormalizeOracle(truths[i])) {
      ++bucket.matches;
      ++report.matches;
    }
  }
  report.rate = report.total == 0 ? 0.0
                                  : static_cast<double>(report.matches) /
                                        static_cast<double>(report.total);
  for (auto& [category, bucket] : by_category) {
    report.per_category.push_back(bucket);
  }
  std::stable_sort(report.per_category.begin(), report.per_category.end(),
                   [](const CategoryMatch& a, const CategoryMatch& b) {
                     return CategoryRank(a.category) < CategoryRank(b.category);
                   });
  return report;
}

std::vector<DistributionRow> DistributionFromCounts(
    std::span<const std::pair<std::string, std::int64_t>> counts) {
  const auto& known = DistributionCategories();
  std::map<std::string, std::int64_t> merged;
  for (const auto& [category, count] : counts) {
    if (std::find(known.begin(), known.end(), category) == known.end()) {
      throw Error(ErrorCode::kDomainError, "unknown category " + category);
    }
    if (count < 0) {
      throw Error(ErrorCode::kDomainError, "negative count for " + category);
    }
    merged[category] += count;
  }
  return ToRows(merged);
}

std::vector<DistributionRow> AssertionDistribution(
    std::span<const genclient::ParsedOracle> oracles,
    const jparse::ParseOptions& options) {
  std::map<std::string, std::int64_t> counts;
  for (const auto& oracle : oracles) {
    if (oracle.kind == genclient::ParsedKind::kAssertion) {
      ++counts[genclient::AssertionName(oracle, options)];
    } else if (oracle.kind == genclient::ParsedKind::kInvalid) {
      ++counts[std::string(kSyntacticallyIncorrect)];
    }
  }
  return ToRows(counts);
}

std::vector<DistributionRow> AssertionDistribution(
    std::span<const decompose::Oracle> ground_truth,
    const jparse::ParseOptions& options) {
  std::vector<genclient::ParsedOracle> parsed;
  for (const auto& oracle : ground_truth) {
    if (oracle.kind != decompose::OracleKind::kAssertion) continue;
    parsed.push_back(genclient::ParsedOracle{genclient::ParsedKind::kAssertion,
                                             oracle.text});
  }
  return AssertionDistribution(std::span<const genclient::ParsedOracle>(parsed),
                               options);
}

}  // namespace oraclekit::metrics
