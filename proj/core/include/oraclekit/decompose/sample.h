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

#ifndef ORACLEKIT_DECOMPOSE_SAMPLE_H_
#define ORACLEKIT_DECOMPOSE_SAMPLE_H_

#include <string>
#include <string_view>
#include <vector>

#include "oraclekit/jparse/ast.h"

namespace oraclekit::decompose {

// Completion-side marker for an exception oracle: "// throws <TypeName>".
inline constexpr std::string_view kThrowsMarker = "// throws ";

enum class OracleKind { kAssertion, kException };

std::string_view OracleKindName(OracleKind kind);

struct Oracle {
  OracleKind kind = OracleKind::kAssertion;
  // Assertion statement text ending in ';', or the exception type name.
  std::string text;

  static Oracle Assertion(std::string statement);
  static Oracle Exception(std::string type_name);

  // Text a generator is trained to emit for this oracle.
  std::string Completion() const;

  friend bool operator==(const Oracle&, const Oracle&) = default;
};

// One ((prefix, mut, docstring), oracle) tuple.
struct OracleSample {
  std::string id;
  std::string project_id;
  std::string test_class;
  std::string test_name;
  int oracle_index = 0;
  std::vector<jparse::Statement> prefix;
  jparse::MutRecord mut;
  Oracle ground_truth;

  std::vector<std::string> PrefixTexts() const;
};

// Deterministic key "<project>:<test_class>:<test_name>:<index>", index zero
// padded to three digits so lexical order follows oracle order.
std::string MakeSampleId(std::string_view project, std::string_view test_class,
                         std::string_view test_name, int oracle_index);

}  // namespace oraclekit::decompose

#endif  // ORACLEKIT_DECOMPOSE_SAMPLE_H_
