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

#include "oraclekit/integrate/integrate.h"

#include <algorithm>
#include <cstdio>
#include <set>

#include "oraclekit/common/error.h"
#include "oraclekit/common/text.h"

namespace oraclekit::integrate {
namespace {

constexpr std::string_view kIndent = "    ";

TestArtifact NewArtifact(const decompose::OracleSample& sample,
                         ArtifactKind kind) {
  TestArtifact artifact;
  artifact.sample_id = sample.id;
  artifact.class_name = SimpleClassName(sample.test_class);
  artifact.method_name = ArtifactMethodName(sample);
  artifact.kind = kind;
  return artifact;
}

std::string MethodSource(std::string_view method_name, std::string_view body) {
  std::string out;
  out.append("  @Test(timeout = 4000)\n");
  out.append("  public void ").append(method_name).append("() throws Throwable {\n");
  out.append(body);
  out.append("  }\n");
  return out;
}

void AppendLine(std::string& body, std::string_view indent,
                std::string_view text) {
  body.append(indent).append(text).push_back('\n');
}

std::set<std::string> DefinedVars(const decompose::OracleSample& sample) {
  std::set<std::string> out;
  for (const auto& stmt : sample.prefix) {
    out.insert(stmt.defined_vars.begin(), stmt.defined_vars.end());
  }
  return out;
}

}  // namespace

std::string_view ArtifactKindName(ArtifactKind kind) {
  switch (kind) {
    case ArtifactKind::kAssertion: return "assertion";
    case ArtifactKind::kException: return "exception";
    case ArtifactKind::kPrefixOnly: return "prefixOnly";
  }
  return "prefixOnly";
}

std::string SimpleClassName(std::string_view qualified) {
  std::size_t dot = qualified.rfind('.');
  return std::string(dot == std::string_view::npos ? qualified
                                                   : qualified.substr(dot + 1));
}

std::string PackageName(std::string_view qualified) {
  std::size_t dot = qualified.rfind('.');
  return dot == std::string_view::npos ? "" : std::string(qualified.substr(0, dot));
}

std::string ArtifactMethodName(const decompose::OracleSample& sample) {
  char index[16];
  std::snprintf(index, sizeof(index), "%03d", sample.oracle_index);
  return sample.test_name + "_" + index;
}

TestArtifact IntegrateAssertion(const decompose::OracleSample& sample,
                                std::string_view assertion_text,
                                const jparse::ParseOptions& options) {
  if (Trim(assertion_text).empty()) {
    throw Error(ErrorCode::kParseError, "empty assertion text");
  }
  jparse::Statement assertion;
  try {
    assertion = jparse::ParseStatement(assertion_text, options);
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError,
                std::string("assertion does not parse: ") + e.what());
  }
  if (assertion.kind != jparse::StatementKind::kAssertionCall) {
    throw Error(ErrorCode::kParseError,
                "not an assertion call: " + assertion.text);
  }

  TestArtifact artifact = NewArtifact(sample, ArtifactKind::kAssertion);
  std::set<std::string> defined = DefinedVars(sample);
  for (const auto& var : assertion.used_vars) {
    if (!defined.count(var) &&
        std::find(artifact.unknown_vars.begin(), artifact.unknown_vars.end(),
                  var) == artifact.unknown_vars.end()) {
      artifact.unknown_vars.push_back(var);
    }
  }

  std::string body;
  for (const auto& stmt : sample.prefix) AppendLine(body, kIndent, stmt.text);
  AppendLine(body, kIndent, assertion.text);
  artifact.source = MethodSource(artifact.method_name, body);
  return artifact;
}

TestArtifact IntegrateException(const decompose::OracleSample& sample,
                                std::string_view type_name) {
  if (sample.prefix.empty()) {
    throw Error(ErrorCode::kEmptyPrefix,
                "exception oracle needs a prefix statement to wrap: " + sample.id);
  }
  std::string type(Trim(type_name));
  if (!IsQualifiedIdentifier(type)) {
    throw Error(ErrorCode::kInvalidOracle, "not a type name: " + type);
  }

  std::set<std::string> defined = DefinedVars(sample);
  std::string var = "e";
  for (int n = 0; defined.count(var); ++n) var = "e" + std::to_string(n);

  std::string body;
  for (std::size_t i = 0; i + 1 < sample.prefix.size(); ++i) {
    AppendLine(body, kIndent, sample.prefix[i].text);
  }
  AppendLine(body, kIndent, "try {");
  AppendLine(body, "      ", sample.prefix.back().text);
  AppendLine(body, "      ", "fail(\"Expecting exception: " + type + "\");");
  AppendLine(body, kIndent, "} catch (" + type + " " + var + ") {");
  AppendLine(body, kIndent, "}");

  TestArtifact artifact = NewArtifact(sample, ArtifactKind::kException);
  artifact.source = MethodSource(artifact.method_name, body);
  return artifact;
}

TestArtifact IntegratePrefixOnly(const decompose::OracleSample& sample) {
  std::string body;
  for (const auto& stmt : sample.prefix) AppendLine(body, kIndent, stmt.text);
  TestArtifact artifact = NewArtifact(sample, ArtifactKind::kPrefixOnly);
  artifact.source = MethodSource(artifact.method_name, body);
  return artifact;
}

TestArtifact IntegrateGroundTruth(const decompose::OracleSample& sample,
                                  const jparse::ParseOptions& options) {
  if (sample.ground_truth.kind == decompose::OracleKind::kException) {
    return IntegrateException(sample, sample.ground_truth.text);
  }
  return IntegrateAssertion(sample, sample.ground_truth.text, options);
}

}  // namespace oraclekit::integrate
