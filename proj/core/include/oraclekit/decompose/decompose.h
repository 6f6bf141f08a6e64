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

#ifndef ORACLEKIT_DECOMPOSE_DECOMPOSE_H_
#define ORACLEKIT_DECOMPOSE_DECOMPOSE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oraclekit/decompose/sample.h"
#include "oraclekit/jparse/ast.h"

namespace oraclekit::decompose {

// Splits a test into one sample per oracle, in textual order.
//
// The prefix of the i-th sample holds every non-oracle statement before the
// oracle. Earlier assertions are dropped; earlier exception scaffolds
// contribute their try-body statements without the fail/catch. For a
// scaffold oracle the prefix ends with the scaffold's own try-body
// statements. Statements after the last oracle are discarded.
//
// Throws Error(kNoOracle) when the test has no assertion and no scaffold, and
// Error(kMalformedScaffold) from scaffold detection.
std::vector<OracleSample> DecomposeTest(const jparse::TestMethod& test,
                                        const jparse::MutRecord& mut,
                                        std::string_view project_id,
                                        std::string_view test_class);

// Top-level assertion statements plus exception scaffolds.
std::size_t CountOracles(const jparse::TestMethod& test);

// Removes assertions and flattens scaffolds to their try-body statements so
// only the prefix executes.
jparse::TestMethod StripOracles(const jparse::TestMethod& test);

struct MutCall {
  std::string name;
  int arity = 0;
};

// Picks the method under test for a test: the last invocation, up to the
// last oracle, whose name is declared by the class under test.
std::optional<MutCall> LocateMutCall(
    const jparse::TestMethod& test,
    const std::vector<jparse::MethodDecl>& cut_methods);

}  // namespace oraclekit::decompose

#endif  // ORACLEKIT_DECOMPOSE_DECOMPOSE_H_
