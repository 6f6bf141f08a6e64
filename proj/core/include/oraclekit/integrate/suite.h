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

#ifndef ORACLEKIT_INTEGRATE_SUITE_H_
#define ORACLEKIT_INTEGRATE_SUITE_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oraclekit/decompose/sample.h"
#include "oraclekit/genclient/completion.h"
#include "oraclekit/integrate/integrate.h"
#include "oraclekit/jparse/parser.h"

namespace oraclekit::integrate {

// GEN: generated oracles. ORIG: ground-truth oracles. IMPLICIT: prefixes only.
enum class SuiteLabel { kGen, kOrig, kImplicit };

std::string_view SuiteLabelName(SuiteLabel label);
std::optional<SuiteLabel> ParseSuiteLabel(std::string_view name);

struct SuiteEntry {
  decompose::OracleSample sample;
  std::optional<genclient::ParsedOracle> generated;  // used by GEN only
};

struct SuiteSpec {
  SuiteLabel label = SuiteLabel::kGen;
  std::vector<SuiteEntry> entries;
  std::string output_dir;
  // Import declarations to copy, keyed by qualified test class name,
  // e.g. "import java.util.Stack;".
  std::map<std::string, std::vector<std::string>> imports_by_class;
  jparse::ParseOptions parse;
};

struct ManifestRow {
  std::string id;
  std::string file;    // relative to the output directory; empty on error
  std::string method;  // empty on error
  std::string kind;    // artifact kind, or the rejected oracle kind on error
  std::string error;   // empty on success
  friend bool operator==(const ManifestRow&, const ManifestRow&) = default;
};

struct SuiteOutput {
  std::map<std::string, std::string> files;  // relative path -> contents
  std::vector<ManifestRow> manifest;         // sorted by id
};

// Integrates every entry and groups the methods into one class per source
// test class, named "<Class>_<LABEL>" in the source package. Integration
// failures and GEN entries without a usable oracle become manifest error
// rows; they never abort the suite.
SuiteOutput BuildSuite(const SuiteSpec& spec);

// BuildSuite, then writes the class files under output_dir (package
// directories mirrored) and "manifest_<LABEL>.jsonl" beside them.
SuiteOutput EmitSuite(const SuiteSpec& spec);

std::string ManifestFileName(SuiteLabel label);
std::string ManifestToJsonl(const std::vector<ManifestRow>& rows);
std::vector<ManifestRow> ParseManifestJsonl(std::string_view jsonl);

}  // namespace oraclekit::integrate

#endif  // ORACLEKIT_INTEGRATE_SUITE_H_
