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

#ifndef ORACLEKIT_VERDICT_PIT_H_
#define ORACLEKIT_VERDICT_PIT_H_

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace oraclekit::verdict {

enum class KillStatus {
  kKilled,
  kSurvived,
  kNoCoverage,
  kTimedOut,
  kMemoryError,
  kRunError,
};

std::string_view KillStatusName(KillStatus status);  // e.g. "TIMED_OUT"
std::optional<KillStatus> ParseKillStatus(std::string_view name);

// One row of a PIT mutations.csv report.
struct KillRecord {
  std::string file_name;
  std::string class_name;
  std::string mutator;
  std::string method;
  int line_number = 0;
  KillStatus status = KillStatus::kSurvived;
  std::string killing_test;
  // Position among earlier rows sharing (class, mutator, method, line).
  int ordinal = 0;
};

struct MutantKey {
  std::string class_name;
  std::string mutator;
  std::string method;
  int line_number = 0;
  int ordinal = 0;

  static MutantKey Of(const KillRecord& record);
  friend auto operator<=>(const MutantKey&, const MutantKey&) = default;
  friend bool operator==(const MutantKey&, const MutantKey&) = default;
};

struct CsvRowError {
  long row = 0;  // 1-based line number
  std::string message;
};

struct PitIngestResult {
  std::vector<KillRecord> records;
  std::vector<CsvRowError> errors;
};

// Columns FileName,ClassName,Mutator,Method,LineNumber,Status,KillingTest.
// A leading header row with those names is skipped. Fields may be double
// quoted. Every data row yields one record or one error.
PitIngestResult ParsePitCsvLenient(std::string_view csv);

// Strict form: the first bad row raises SchemaError with its row number.
std::vector<KillRecord> ParsePitCsv(std::string_view csv);
std::vector<KillRecord> IngestPitCsv(const std::string& path);

std::set<KillStatus> DefaultDetectedStatuses();  // KILLED, TIMED_OUT

struct KillMatrix {
  std::set<MutantKey> universe;
  std::map<std::string, std::set<MutantKey>> detected;  // by suite label

  const std::set<MutantKey>& Detected(const std::string& label) const;
};

// Throws Error(kKeyMismatch) when the suites cover different mutant keys or
// a suite repeats a key.
KillMatrix BuildKillMatrix(
    const std::map<std::string, std::vector<KillRecord>>& records_by_suite,
    const std::set<KillStatus>& detected_statuses = DefaultDetectedStatuses());

}  // namespace oraclekit::verdict

#endif  // ORACLEKIT_VERDICT_PIT_H_
