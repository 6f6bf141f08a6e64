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

#ifndef ORACLEKIT_INTEGRATE_INTEGRATE_H_
#define ORACLEKIT_INTEGRATE_INTEGRATE_H_

#include <string>
#include <string_view>
#include <vector>

#include "oraclekit/decompose/sample.h"
#include "oraclekit/jparse/parser.h"

namespace oraclekit::integrate {

enum class ArtifactKind { kAssertion, kException, kPrefixOnly };

std::string_view ArtifactKindName(ArtifactKind kind);

// A single JUnit test method rebuilt from a sample.
struct TestArtifact {
  std::string sample_id;
  std::string class_name;   // simple name of the emitted class
  std::string method_name;  // "<test>_<NNN>"
  std::string source;       // the full method declaration
  ArtifactKind kind = ArtifactKind::kPrefixOnly;
  // Variables the oracle reads that no prefix statement defines. The
  // artifact is still produced; compilation decides.
  std::vector<std::string> unknown_vars;
};

// Simple name of a possibly qualified class name.
std::string SimpleClassName(std::string_view qualified);
std::string PackageName(std::string_view qualified);

// "<test>_<NNN>" for the sample's oracle index.
std::string ArtifactMethodName(const decompose::OracleSample& sample);

// Prefix statements followed by the assertion. Throws Error(kParseError)
// unless `assertion_text` is exactly one assertion call.
TestArtifact IntegrateAssertion(const decompose::OracleSample& sample,
                                std::string_view assertion_text,
                                const jparse::ParseOptions& options = {});

// Prefix statements with the last one wrapped in a try/fail/catch scaffold
// expecting `type_name`. Throws Error(kEmptyPrefix) on an empty prefix and
// Error(kInvalidOracle) when `type_name` is not a (qualified) identifier.
TestArtifact IntegrateException(const decompose::OracleSample& sample,
                                std::string_view type_name);

// Prefix statements alone, so only implicit oracles can fail the test.
TestArtifact IntegratePrefixOnly(const decompose::OracleSample& sample);

// Integrates the sample's own ground-truth oracle.
TestArtifact IntegrateGroundTruth(const decompose::OracleSample& sample,
                                  const jparse::ParseOptions& options = {});

}  // namespace oraclekit::integrate

#endif  // ORACLEKIT_INTEGRATE_INTEGRATE_H_
