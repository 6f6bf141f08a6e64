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

#ifndef ORACLEKIT_VERDICT_VERDICT_H_
#define ORACLEKIT_VERDICT_VERDICT_H_

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace oraclekit::verdict {

enum class Phase { kCompile, kExecute };
enum class Status { kPass, kFail, kError };

std::string_view PhaseName(Phase phase);
std::string_view StatusName(Status status);
std::optional<Phase> ParsePhase(std::string_view name);
std::optional<Status> ParseStatus(std::string_view name);

struct Verdict {
  std::string test_id;
  Phase phase = Phase::kCompile;
  Status status = Status::kPass;
  std::string message;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Lines of {"test_id","phase","status","message"}; "message" may be absent
// on input. Any other key, a missing required key or an unknown enumeration
// value is a SchemaError carrying the line number.
std::vector<Verdict> ParseVerdictsJsonl(std::string_view jsonl);
std::vector<Verdict> ReadVerdictsJsonl(const std::string& path);
std::string VerdictsToJsonl(std::span<const Verdict> verdicts);

// Checks the harness contract: at most one compile and one execute verdict
// per test, and an execute verdict only after a passing compile. Throws
// SchemaError naming the offending test.
void ValidateVerdicts(std::span<const Verdict> verdicts);

enum class Outcome {
  kPassed,
  kCompileError,
  kFalsePositive,
  kEmpty,
  kHarnessError,  // crashed or incomplete run; kept out of T
};

std::string_view OutcomeName(Outcome outcome);

// Outcome of one test from its (optional) compile and execute verdicts, on a
// program version assumed correct. No compile verdict means no oracle was
// emitted.
Outcome Classify(const std::optional<Verdict>& compile,
                 const std::optional<Verdict>& execute);

struct VerdictCounts {
  std::int64_t total = 0;           // T
  std::int64_t compile_errors = 0;  // T_ce
  std::int64_t false_positives = 0; // T_fp
  std::int64_t empty = 0;           // T_em
  std::int64_t passed = 0;
  std::int64_t harness_errors = 0;  // not part of T

  void Add(Outcome outcome);
  VerdictCounts& operator+=(const VerdictCounts& other);
  friend bool operator==(const VerdictCounts&, const VerdictCounts&) = default;
};

// Groups verdicts by test id and counts outcomes. Ids in `empty_ids` (no
// oracle generated) count as T_em and ids in `invalid_ids` (an oracle that
// cannot be integrated) as T_ce, regardless of any verdicts they carry.
// passed + T_ce + T_fp + T_em == T always holds.
VerdictCounts ClassifyAndCount(std::span<const Verdict> verdicts,
                               const std::set<std::string>& empty_ids = {},
                               const std::set<std::string>& invalid_ids = {});

}  // namespace oraclekit::verdict

#endif  // ORACLEKIT_VERDICT_VERDICT_H_
