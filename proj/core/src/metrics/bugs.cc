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

#include "oraclekit/metrics/bugs.h"

#include <map>

#include "oraclekit/common/error.h"

namespace oraclekit::metrics {

using verdict::Phase;
using verdict::Status;

bool BugDetected(const verdict::Verdict& buggy, const verdict::Verdict& fixed) {
  if (buggy.phase != Phase::kExecute || fixed.phase != Phase::kExecute) {
    throw Error(ErrorCode::kPhaseMismatch,
                "bug detection needs execute verdicts for " + buggy.test_id);
  }
  if (buggy.test_id != fixed.test_id) {
    throw Error(ErrorCode::kPhaseMismatch,
                "verdicts belong to different tests: " + buggy.test_id + " vs " +
                    fixed.test_id);
  }
  return buggy.status == Status::kFail && fixed.status == Status::kPass;
}

std::string_view DetectionMethodName(DetectionMethod method) {
  switch (method) {
    case DetectionMethod::kExceptionOracle: return "exceptionOracle";
    case DetectionMethod::kAssertionOracle: return "assertionOracle";
    case DetectionMethod::kPrefixOnly: return "prefixOnly";
  }
  return "prefixOnly";
}

std::optional<DetectionMethod> ParseDetectionMethod(std::string_view name) {
  if (name == "exceptionOracle" || name == "exception") {
    return DetectionMethod::kExceptionOracle;
  }
  if (name == "assertionOracle" || name == "assertion") {
    return DetectionMethod::kAssertionOracle;
  }
  if (name == "prefixOnly") return DetectionMethod::kPrefixOnly;
  return std::nullopt;
}

std::vector<BugDetectionRecord> BuildDetectionRecords(std::span<const BugTestRun> runs) {
  std::map<std::string, std::set<DetectionMethod>> by_bug;
  for (const auto& run : runs) {
    auto& methods = by_bug[run.bug_id];
    if (BugDetected(run.buggy, run.fixed)) methods.insert(run.method);
  }
  std::vector<BugDetectionRecord> records;
  records.reserve(by_bug.size());
  for (auto& [bug, methods] : by_bug) {
    records.push_back(BugDetectionRecord{bug, std::move(methods)});
  }
  return records;
}

Defects4jSummary Defects4jAccounting(std::span<const BugDetectionRecord> records,
                                     bool include_prefix_only) {
  Defects4jSummary s;
  for (const auto& record : records) {
    const auto& by = record.detected_by;
    if (by.empty()) continue;
    ++s.total_unique;
    s.by_exception += by.count(DetectionMethod::kExceptionOracle);
    s.by_assertion += by.count(DetectionMethod::kAssertionOracle);
    s.by_prefix_only += by.count(DetectionMethod::kPrefixOnly);
    if (by.size() == 1 && by.count(DetectionMethod::kPrefixOnly)) {
      ++s.prefix_only_exclusive;
    }
  }
  s.total_excluding_prefix_only = s.total_unique - s.prefix_only_exclusive;
  s.headline = include_prefix_only ? s.total_unique : s.total_excluding_prefix_only;
  return s;
}

Ratio FalsePositiveRatio(std::int64_t false_positives, std::int64_t total_oracles) {
  if (total_oracles <= 0 || false_positives < 0 || false_positives > total_oracles) {
    throw Error(ErrorCode::kDomainError, "false-positive ratio needs 0 <= fp <= total, total > 0");
  }
  return Ratio{false_positives, total_oracles};
}

}  // namespace oraclekit::metrics
