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

#include "oraclekit/decompose/decompose.h"

#include <cstdio>
#include <map>
#include <utility>

#include "oraclekit/common/error.h"
#include "oraclekit/jparse/parser.h"

namespace oraclekit::decompose {

using jparse::ExceptionScaffold;
using jparse::Statement;
using jparse::StatementKind;
using jparse::TestMethod;

std::string_view OracleKindName(OracleKind kind) {
  return kind == OracleKind::kAssertion ? "assertion" : "exception";
}

Oracle Oracle::Assertion(std::string statement) {
  return Oracle{OracleKind::kAssertion, std::move(statement)};
}

Oracle Oracle::Exception(std::string type_name) {
  return Oracle{OracleKind::kException, std::move(type_name)};
}

std::string Oracle::Completion() const {
  if (kind == OracleKind::kException) {
    return std::string(kThrowsMarker) + text;
  }
  return text;
}

std::vector<std::string> OracleSample::PrefixTexts() const {
  std::vector<std::string> out;
  out.reserve(prefix.size());
  for (const auto& stmt : prefix) out.push_back(stmt.text);
  return out;
}

std::string MakeSampleId(std::string_view project, std::string_view test_class,
                         std::string_view test_name, int oracle_index) {
  char index[16];
  std::snprintf(index, sizeof(index), "%03d", oracle_index);
  std::string id;
  id.append(project).append(":").append(test_class).append(":");
  id.append(test_name).append(":").append(index);
  return id;
}

std::vector<OracleSample> DecomposeTest(const TestMethod& test,
                                        const jparse::MutRecord& mut,
                                        std::string_view project_id,
                                        std::string_view test_class) {
  std::map<std::size_t, ExceptionScaffold> scaffolds;
  for (auto& scaffold : jparse::FindExceptionScaffolds(test.statements)) {
    scaffolds.emplace(scaffold.statement_index, std::move(scaffold));
  }

  std::vector<OracleSample> samples;
  std::vector<Statement> prefix;
  auto emit = [&](std::vector<Statement> sample_prefix, Oracle oracle) {
    OracleSample sample;
    sample.oracle_index = static_cast<int>(samples.size());
    sample.id = MakeSampleId(project_id, test_class, test.name,
                             sample.oracle_index);
    sample.project_id = std::string(project_id);
    sample.test_class = std::string(test_class);
    sample.test_name = test.name;
    sample.prefix = std::move(sample_prefix);
    sample.mut = mut;
    sample.ground_truth = std::move(oracle);
    samples.push_back(std::move(sample));
  };

  for (std::size_t i = 0; i < test.statements.size(); ++i) {
    const Statement& stmt = test.statements[i];
    if (stmt.kind == StatementKind::kAssertionCall) {
      emit(prefix, Oracle::Assertion(stmt.text));
      continue;
    }
    if (auto it = scaffolds.find(i); it != scaffolds.end()) {
      const ExceptionScaffold& scaffold = it->second;
      prefix.insert(prefix.end(), scaffold.pre_statements.begin(),
                    scaffold.pre_statements.end());
      emit(prefix, Oracle::Exception(scaffold.expected_type));
      continue;
    }
    // A bare fail() outside a scaffold is neither prefix nor a usable oracle.
    if (stmt.kind == StatementKind::kFailCall) continue;
    prefix.push_back(stmt);
  }

  if (samples.empty()) {
    throw Error(ErrorCode::kNoOracle,
                "test " + std::string(test_class) + "." + test.name +
                    " has no assertion or exception oracle");
  }
  return samples;
}

std::size_t CountOracles(const TestMethod& test) {
  std::size_t count = 0;
  for (const Statement& stmt : test.statements) {
    if (stmt.kind == StatementKind::kAssertionCall) ++count;
  }
  return count + jparse::FindExceptionScaffolds(test.statements).size();
}

TestMethod StripOracles(const TestMethod& test) {
  std::map<std::size_t, ExceptionScaffold> scaffolds;
  for (auto& scaffold : jparse::FindExceptionScaffolds(test.statements)) {
    scaffolds.emplace(scaffold.statement_index, std::move(scaffold));
  }
  TestMethod out = test;
  out.statements.clear();
  for (std::size_t i = 0; i < test.statements.size(); ++i) {
    const Statement& stmt = test.statements[i];
    if (stmt.kind == StatementKind::kAssertionCall ||
        stmt.kind == StatementKind::kFailCall) {
      continue;
    }
    if (auto it = scaffolds.find(i); it != scaffolds.end()) {
      out.statements.insert(out.statements.end(),
                            it->second.pre_statements.begin(),
                            it->second.pre_statements.end());
      continue;
    }
    out.statements.push_back(stmt);
  }
  return out;
}

std::optional<MutCall> LocateMutCall(
    const TestMethod& test, const std::vector<jparse::MethodDecl>& cut_methods) {
  std::size_t last_oracle = test.statements.size();
  std::vector<ExceptionScaffold> scaffolds;
  try {
    scaffolds = jparse::FindExceptionScaffolds(test.statements);
  } catch (const Error&) {
  }
  for (std::size_t i = test.statements.size(); i-- > 0;) {
    bool is_scaffold = false;
    for (const auto& s : scaffolds) is_scaffold |= s.statement_index == i;
    if (test.statements[i].kind == StatementKind::kAssertionCall ||
        is_scaffold) {
      last_oracle = i;
      break;
    }
  }

  auto declared = [&](const jparse::CallSite& call) {
    for (const auto& decl : cut_methods) {
      if (decl.name == call.name && decl.is_constructor == call.is_constructor) {
        return true;
      }
    }
    return false;
  };

  std::optional<MutCall> found;
  for (std::size_t i = 0; i <= last_oracle && i < test.statements.size(); ++i) {
    const Statement& stmt = test.statements[i];
    if (stmt.kind == StatementKind::kAssertionCall) continue;
    for (const auto& call : stmt.calls) {
      if (declared(call)) found = MutCall{call.name, call.arity};
    }
  }
  return found;
}

}  // namespace oraclekit::decompose
