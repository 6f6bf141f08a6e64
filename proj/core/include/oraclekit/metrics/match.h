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

#ifndef ORACLEKIT_METRICS_MATCH_H_
#define ORACLEKIT_METRICS_MATCH_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oraclekit/decompose/sample.h"
#include "oraclekit/genclient/completion.h"
#include "oraclekit/jparse/parser.h"

namespace oraclekit::metrics {

inline constexpr std::string_view kSyntacticallyIncorrect = "syntacticallyIncorrect";

// The seven assertion names in reporting order, then kSyntacticallyIncorrect.
const std::vector<std::string>& DistributionCategories();

// Whitespace-insensitive form of an oracle text: token spacing for code,
// collapsed whitespace for "// throws" markers.
std::string NormalizeOracle(std::string_view text);

struct CategoryMatch {
  std::string category;
  std::int64_t total = 0;
  std::int64_t matches = 0;
};

struct ExactMatchReport {
  std::int64_t total = 0;
  std::int64_t matches = 0;
  double rate = 0.0;  // matches / total, 0 for empty input
  // Grouped by the predicted oracle's category; assertion names first in
  // reporting order, then "exception", "empty", kSyntacticallyIncorrect.
  std::vector<CategoryMatch> per_category;
};

// Category of a raw prediction: assertion name, "exception", "empty" or
// kSyntacticallyIncorrect.
std::string PredictionCategory(std::string_view prediction,
                               const jparse::ParseOptions& options = {});

// Throws Error(kLengthMismatch) when the lists differ in length.
ExactMatchReport ExactMatchRate(std::span<const std::string> predictions,
                                std::span<const std::string> truths,
                                const jparse::ParseOptions& options = {});

struct DistributionRow {
  std::string category;
  std::int64_t count = 0;
  double share = 0.0;
  friend bool operator==(const DistributionRow&, const DistributionRow&) = default;
};

// Rows for the non-zero categories, in DistributionCategories() order.
// Throws Error(kDomainError) for a negative count or unknown category.
std::vector<DistributionRow> DistributionFromCounts(
    std::span<const std::pair<std::string, std::int64_t>> counts);

// Assertions bucket by simple name, invalid completions under
// kSyntacticallyIncorrect; exception and empty oracles are not assertions and
// are left out.
std::vector<DistributionRow> AssertionDistribution(
    std::span<const genclient::ParsedOracle> oracles,
    const jparse::ParseOptions& options = {});
std::vector<DistributionRow> AssertionDistribution(
    std::span<const decompose::Oracle> ground_truth,
    const jparse::ParseOptions& options = {});

}  // namespace oraclekit::metrics

#endif  // ORACLEKIT_METRICS_MATCH_H_
