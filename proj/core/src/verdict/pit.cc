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

#include "oraclekit/verdict/pit.h"

#include <array>
#include <charconv>
#include <tuple>
#include <utility>

#include "oraclekit/common/error.h"
#include "oraclekit/common/text.h"

namespace oraclekit::verdict {
namespace {

constexpr std::array<std::string_view, 7> kHeader = {
    "FileName", "ClassName", "Mutator", "Method",
    "LineNumber", "Status", "KillingTest"};

constexpr std::array<std::pair<KillStatus, std::string_view>, 6> kStatusNames = {{
    {KillStatus::kKilled, "KILLED"},
    {KillStatus::kSurvived, "SURVIVED"},
    {KillStatus::kNoCoverage, "NO_COVERAGE"},
    {KillStatus::kTimedOut, "TIMED_OUT"},
    {KillStatus::kMemoryError, "MEMORY_ERROR"},
    {KillStatus::kRunError, "RUN_ERROR"},
}};

// Splits one CSV line; returns nullopt on an unterminated quote.
std::optional<std::vector<std::string>> SplitCsvLine(std::string_view line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool field_was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"' && field.empty() && !field_was_quoted) {
      quoted = true;
      field_was_quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
      field_was_quoted = false;
    } else {
      field.push_back(c);
    }
  }
  if (quoted) return std::nullopt;
  fields.push_back(std::move(field));
  return fields;
}

bool IsHeader(const std::vector<std::string>& fields) {
  if (fields.size() != kHeader.size()) return false;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (Trim(fields[i]) != kHeader[i]) return false;
  }
  return true;
}

}  // namespace

std::string_view KillStatusName(KillStatus status) {
  for (const auto& [value, name] : kStatusNames) {
    if (value == status) return name;
  }
  return "SURVIVED";
}

std::optional<KillStatus> ParseKillStatus(std::string_view name) {
  for (const auto& [value, status_name] : kStatusNames) {
    if (status_name == name) return value;
  }
  return std::nullopt;
}

MutantKey MutantKey::Of(const KillRecord& record) {
  return MutantKey{record.class_name, record.mutator, record.method,
                   record.line_number, record.ordinal};
}

PitIngestResult ParsePitCsvLenient(std::string_view csv) {
  PitIngestResult result;
  std::map<std::tuple<std::string, std::string, std::string, int>, int> seen;
  long row = 0;
  bool first_content_row = true;
  for (std::string line : SplitLines(csv)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) continue;
    auto fields = SplitCsvLine(line);
    if (!fields) {
      result.errors.push_back({row, "unterminated quoted field"});
      first_content_row = false;
      continue;
    }
    if (first_content_row) {
      first_content_row = false;
      if (IsHeader(*fields)) continue;
    }
    if (fields->size() != kHeader.size()) {
      result.errors.push_back({row, "expected 7 columns, found " +
                                        std::to_string(fields->size())});
      continue;
    }
    const auto& f = *fields;
    KillRecord record;
    record.file_name = f[0];
    record.class_name = f[1];
    record.mutator = f[2];
    record.method = f[3];
    std::string_view line_text = Trim(f[4]);
    auto [end, ec] = std::from_chars(line_text.data(),
                                     line_text.data() + line_text.size(),
                                     record.line_number);
    if (ec != std::errc() || end != line_text.data() + line_text.size() ||
        line_text.empty() || record.line_number < 0) {
      result.errors.push_back({row, "bad line number \"" + f[4] + "\""});
      continue;
    }
    auto status = ParseKillStatus(Trim(f[5]));
    if (!status) {
      result.errors.push_back({row, "unknown status \"" + f[5] + "\""});
      continue;
    }
    if (record.class_name.empty() || record.mutator.empty()) {
      result.errors.push_back({row, "empty class or mutator"});
      continue;
    }
    record.status = *status;
    record.killing_test = f[6];
    record.ordinal = seen[{record.class_name, record.mutator, record.method,
                           record.line_number}]++;
    result.records.push_back(std::move(record));
  }
  return result;
}

std::vector<KillRecord> ParsePitCsv(std::string_view csv) {
  PitIngestResult result = ParsePitCsvLenient(csv);
  if (!result.errors.empty()) {
    const CsvRowError& first = result.errors.front();
    throw SchemaError("PIT CSV row " + std::to_string(first.row) + ": " +
                          first.message,
                      first.row);
  }
  return std::move(result.records);
}

std::vector<KillRecord> IngestPitCsv(const std::string& path) {
  return ParsePitCsv(ReadFile(path));
}

std::set<KillStatus> DefaultDetectedStatuses() {
  return {KillStatus::kKilled, KillStatus::kTimedOut};
}

const std::set<MutantKey>& KillMatrix::Detected(const std::string& label) const {
  auto it = detected.find(label);
  if (it == detected.end()) {
    throw Error(ErrorCode::kNotFound, "no suite labelled " + label);
  }
  return it->second;
}

KillMatrix BuildKillMatrix(
    const std::map<std::string, std::vector<KillRecord>>& records_by_suite,
    const std::set<KillStatus>& detected_statuses) {
  KillMatrix matrix;
  bool first = true;
  std::string first_label;
  for (const auto& [label, records] : records_by_suite) {
    std::set<MutantKey> universe;
    std::set<MutantKey>& detected = matrix.detected[label];
    for (const auto& record : records) {
      MutantKey key = MutantKey::Of(record);
      if (!universe.insert(key).second) {
        throw Error(ErrorCode::kKeyMismatch,
                    "suite " + label + " repeats mutant " + key.class_name +
                        ":" + key.method + ":" + std::to_string(key.line_number));
      }
      if (detected_statuses.count(record.status)) detected.insert(key);
    }
    if (first) {
      matrix.universe = std::move(universe);
      first_label = label;
      first = false;
    } else if (universe != matrix.universe) {
      throw Error(ErrorCode::kKeyMismatch,
                  "suites " + first_label + " and " + label +
                      " cover different mutant sets (" +
                      std::to_string(matrix.universe.size()) + " vs " +
                      std::to_string(universe.size()) + " mutants)");
    }
  }
  return matrix;
}

}  // namespace oraclekit::verdict
