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

#ifndef ORACLEKIT_METRICS_BUGS_H_
#define ORACLEKIT_METRICS_BUGS_H_

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oraclekit/metrics/success.h"
#include "oraclekit/verdict/verdict.h"

namespace oraclekit::metrics {

// True iff the test fails on the buggy version and passes on the fixed one.
// Throws Error(kPhaseMismatch) unless both are execute verdicts of one test.
bool BugDetected(const verdict::Verdict& buggy, const verdict::Verdict& fixed);

enum class DetectionMethod { kExceptionOracle, kAssertionOracle, kPrefixOnly };

std::string_view DetectionMethodName(DetectionMethod method);
std::optional<DetectionMethod> ParseDetectionMethod(std::string_view name);

struct BugDetectionRecord {
  std::string bug_id;
  std::set<DetectionMethod> detected_by;  // empty: undetected
};

// One test run against a buggy/fixed pair.
struct BugTestRun {
  std::string test_id;
  std::string bug_id;
  DetectionMethod method = DetectionMethod::kAssertionOracle;
  verdict::Verdict buggy;
  verdict::Verdict fixed;
};

// One record per bug id (sorted), listing the methods with at least one
// detecting test.
std::vector<BugDetectionRecord> BuildDetectionRecords(std::span<const BugTestRun> runs);

struct Defects4jSummary {
  std::int64_t by_exception = 0;   // bugs with the exception oracle among detectors
  std::int64_t by_assertion = 0;
  std::int64_t by_prefix_only = 0; // bugs a bare prefix detects
  std::int64_t prefix_only_exclusive = 0;  // detected by the prefix and nothing else
  std::int64_t total_unique = 0;
  std::int64_t total_excluding_prefix_only = 0;
  // total_unique when prefix-only detections are credited, else
  // total_excluding_prefix_only.
  std::int64_t headline = 0;
  friend bool operator==(const Defects4jSummary&, const Defects4jSummary&) = default;
};

Defects4jSummary Defects4jAccounting(std::span<const BugDetectionRecord> records,
                                     bool include_prefix_only);

// Failing oracles on the fixed versions over all oracles run.
Ratio FalsePositiveRatio(std::int64_t false_positives, std::int64_t total_oracles);

}  // namespace oraclekit::metrics

#endif  // ORACLEKIT_METRICS_BUGS_H_
