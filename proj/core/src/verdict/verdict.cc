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

#include "oraclekit/verdict/verdict.h"

#include <map>
#include <utility>

#include "json.hpp"
#include "oraclekit/common/error.h"
#include "oraclekit/common/text.h"

namespace oraclekit::verdict {

std::string_view PhaseName(Phase phase) {
  return phase == Phase::kCompile ? "compile" : "execute";
}

std::string_view StatusName(Status status) {
  switch (status) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kError: return "error";
  }
  return "error";
}

std::optional<Phase> ParsePhase(std::string_view name) {
  if (name == "compile") return Phase::kCompile;
  if (name == "execute") return Phase::kExecute;
  return std::nullopt;
}

std::optional<Status> ParseStatus(std::string_view name) {
  if (name == "pass") return Status::kPass;
  if (name == "fail") return Status::kFail;
  if (name == "error") return Status::kError;
  return std::nullopt;
}

std::vector<Verdict> ParseVerdictsJsonl(std::string_view jsonl) {
  std::vector<Verdict> out;
  long row = 0;
  for (const std::string& line : SplitLines(jsonl)) {
    ++row;
    if (Trim(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError(std::string("verdict line is not JSON: ") + e.what(), row);
    }
    if (!j.is_object()) throw SchemaError("verdict line is not an object", row);
    for (const auto& [key, value] : j.items()) {
      if (key != "test_id" && key != "phase" && key != "status" &&
          key != "message") {
        throw SchemaError("unknown verdict key \"" + key + "\"", row);
      }
      if (!value.is_string()) {
        throw SchemaError("verdict field \"" + key + "\" must be a string", row);
      }
    }
    for (const char* key : {"test_id", "phase", "status"}) {
      if (!j.contains(key)) {
        throw SchemaError(std::string("verdict lacks \"") + key + "\"", row);
      }
    }
    Verdict v;
    v.test_id = j["test_id"].get<std::string>();
    if (v.test_id.empty()) throw SchemaError("empty test_id", row);
    auto phase = ParsePhase(j["phase"].get<std::string>());
    if (!phase) throw SchemaError("unknown phase", row);
    auto status = ParseStatus(j["status"].get<std::string>());
    if (!status) throw SchemaError("unknown status", row);
    v.phase = *phase;
    v.status = *status;
    if (j.contains("message")) v.message = j["message"].get<std::string>();
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Verdict> ReadVerdictsJsonl(const std::string& path) {
  return ParseVerdictsJsonl(ReadFile(path));
}

std::string VerdictsToJsonl(std::span<const Verdict> verdicts) {
  std::string out;
  for (const auto& v : verdicts) {
    nlohmann::ordered_json j;
    j["test_id"] = v.test_id;
    j["phase"] = std::string(PhaseName(v.phase));
    j["status"] = std::string(StatusName(v.status));
    j["message"] = v.message;
    out.append(j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace));
    out.push_back('\n');
  }
  return out;
}

void ValidateVerdicts(std::span<const Verdict> verdicts) {
  std::map<std::string, std::pair<const Verdict*, const Verdict*>> by_test;
  for (const auto& v : verdicts) {
    auto& slot = by_test[v.test_id];
    const Verdict*& target = v.phase == Phase::kCompile ? slot.first : slot.second;
    if (target != nullptr) {
      throw SchemaError("duplicate " + std::string(PhaseName(v.phase)) +
                            " verdict for " + v.test_id,
                        0);
    }
    target = &v;
  }
  for (const auto& [id, slot] : by_test) {
    if (slot.second == nullptr) continue;
    if (slot.first == nullptr || slot.first->status != Status::kPass) {
      throw SchemaError("execute verdict without a passing compile for " + id, 0);
    }
  }
}

std::string_view OutcomeName(Outcome outcome) {
  switch (outcome) {
    case Outcome::kPassed: return "passed";
    case Outcome::kCompileError: return "compileError";
    case Outcome::kFalsePositive: return "falsePositive";
    case Outcome::kEmpty: return "empty";
    case Outcome::kHarnessError: return "harnessError";
  }
  return "harnessError";
}

Outcome Classify(const std::optional<Verdict>& compile,
                 const std::optional<Verdict>& execute) {
  if (!compile.has_value()) {
    return execute.has_value() ? Outcome::kHarnessError : Outcome::kEmpty;
  }
  switch (compile->status) {
    case Status::kFail: return Outcome::kCompileError;
    case Status::kError: return Outcome::kHarnessError;
    case Status::kPass: break;
  }
  if (!execute.has_value()) return Outcome::kHarnessError;
  switch (execute->status) {
    case Status::kPass: return Outcome::kPassed;
    case Status::kFail: return Outcome::kFalsePositive;
    case Status::kError: return Outcome::kHarnessError;
  }
  return Outcome::kHarnessError;
}

void VerdictCounts::Add(Outcome outcome) {
  switch (outcome) {
    case Outcome::kPassed: ++passed; break;
    case Outcome::kCompileError: ++compile_errors; break;
    case Outcome::kFalsePositive: ++false_positives; break;
    case Outcome::kEmpty: ++empty; break;
    case Outcome::kHarnessError: ++harness_errors; return;
  }
  ++total;
}

VerdictCounts& VerdictCounts::operator+=(const VerdictCounts& other) {
  total += other.total;
  compile_errors += other.compile_errors;
  false_positives += other.false_positives;
  empty += other.empty;
  passed += other.passed;
  harness_errors += other.harness_errors;
  return *this;
}

VerdictCounts ClassifyAndCount(std::span<const Verdict> verdicts,
                               const std::set<std::string>& empty_ids,
                               const std::set<std::string>& invalid_ids) {
  std::map<std::string, std::pair<std::optional<Verdict>, std::optional<Verdict>>>
      by_test;
  for (const auto& v : verdicts) {
    auto& slot = by_test[v.test_id];
    // The last verdict per phase wins; ValidateVerdicts rejects duplicates.
    (v.phase == Phase::kCompile ? slot.first : slot.second) = v;
  }
  for (const auto& id : empty_ids) by_test.try_emplace(id);
  for (const auto& id : invalid_ids) by_test.try_emplace(id);

  VerdictCounts counts;
  for (const auto& [id, slot] : by_test) {
    if (empty_ids.count(id)) {
      counts.Add(Outcome::kEmpty);
    } else if (invalid_ids.count(id)) {
      counts.Add(Outcome::kCompileError);
    } else {
      counts.Add(Classify(slot.first, slot.second));
    }
  }
  return counts;
}

}  // namespace oraclekit::verdict
