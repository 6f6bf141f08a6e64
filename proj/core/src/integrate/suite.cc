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

#include "oraclekit/integrate/suite.h"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <set>
#include <utility>

#include "json.hpp"
#include "oraclekit/common/error.h"
#include "oraclekit/common/text.h"

namespace oraclekit::integrate {
namespace {

using ojson = nlohmann::ordered_json;

struct ClassBuffer {
  std::string package_name;
  std::string class_name;
  std::vector<std::string> imports;
  std::vector<std::string> methods;
};

std::string RelativePath(const std::string& package_name,
                         const std::string& class_name) {
  std::string path;
  for (char c : package_name) path.push_back(c == '.' ? '/' : c);
  if (!path.empty()) path.push_back('/');
  return path + class_name + ".java";
}

std::string RenderClass(const ClassBuffer& buffer) {
  std::string out;
  if (!buffer.package_name.empty()) {
    out.append("package ").append(buffer.package_name).append(";\n\n");
  }
  out.append("import static org.junit.Assert.*;\n");
  out.append("import org.junit.Test;\n");
  for (const auto& line : buffer.imports) out.append(line).push_back('\n');
  out.append("\npublic class ").append(buffer.class_name).append(" {\n");
  for (std::size_t i = 0; i < buffer.methods.size(); ++i) {
    out.push_back('\n');
    out.append(buffer.methods[i]);
  }
  out.append("}\n");
  return out;
}

// The imports the emitted header already provides are filtered out.
std::vector<std::string> ExtraImports(const std::vector<std::string>& imports) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& raw : imports) {
    std::string line(Trim(raw));
    if (line.empty()) continue;
    if (line.rfind("import", 0) != 0) line = "import " + line;
    if (line.back() != ';') line.push_back(';');
    std::string normalized = CollapseWhitespace(line);
    if (normalized == "import static org.junit.Assert.*;" ||
        normalized == "import org.junit.Test;") {
      continue;
    }
    if (seen.insert(normalized).second) out.push_back(normalized);
  }
  return out;
}

}  // namespace

std::string_view SuiteLabelName(SuiteLabel label) {
  switch (label) {
    case SuiteLabel::kGen: return "GEN";
    case SuiteLabel::kOrig: return "ORIG";
    case SuiteLabel::kImplicit: return "IMPLICIT";
  }
  return "GEN";
}

std::optional<SuiteLabel> ParseSuiteLabel(std::string_view name) {
  std::string upper;
  for (char c : name) upper.push_back(static_cast<char>(std::toupper(
      static_cast<unsigned char>(c))));
  if (upper == "GEN") return SuiteLabel::kGen;
  if (upper == "ORIG") return SuiteLabel::kOrig;
  if (upper == "IMPLICIT") return SuiteLabel::kImplicit;
  return std::nullopt;
}

std::string ManifestFileName(SuiteLabel label) {
  return "manifest_" + std::string(SuiteLabelName(label)) + ".jsonl";
}

SuiteOutput BuildSuite(const SuiteSpec& spec) {
  std::vector<const SuiteEntry*> ordered;
  ordered.reserve(spec.entries.size());
  for (const auto& entry : spec.entries) ordered.push_back(&entry);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const SuiteEntry* a, const SuiteEntry* b) {
                     return a->sample.id < b->sample.id;
                   });

  const std::string label(SuiteLabelName(spec.label));
  std::map<std::string, ClassBuffer> classes;  // keyed by relative path
  SuiteOutput output;

  for (const SuiteEntry* entry : ordered) {
    const decompose::OracleSample& sample = entry->sample;
    ManifestRow row;
    row.id = sample.id;
    try {
      TestArtifact artifact;
      switch (spec.label) {
        case SuiteLabel::kOrig:
          row.kind = std::string(decompose::OracleKindName(sample.ground_truth.kind));
          artifact = IntegrateGroundTruth(sample, spec.parse);
          break;
        case SuiteLabel::kImplicit:
          row.kind = "prefixOnly";
          artifact = IntegratePrefixOnly(sample);
          break;
        case SuiteLabel::kGen: {
          if (!entry->generated.has_value()) {
            row.kind = "missing";
            throw Error(ErrorCode::kInvalidOracle, "no generated oracle");
          }
          const genclient::ParsedOracle& oracle = *entry->generated;
          row.kind = std::string(genclient::ParsedKindName(oracle.kind));
          if (oracle.kind == genclient::ParsedKind::kAssertion) {
            artifact = IntegrateAssertion(sample, oracle.payload, spec.parse);
          } else if (oracle.kind == genclient::ParsedKind::kException) {
            artifact = IntegrateException(sample, oracle.payload);
          } else if (oracle.kind == genclient::ParsedKind::kEmpty) {
            throw Error(ErrorCode::kInvalidOracle, "empty oracle");
          } else {
            throw Error(ErrorCode::kInvalidOracle,
                        "invalid oracle: " + oracle.payload);
          }
          break;
        }
      }
      std::string package_name = PackageName(sample.test_class);
      std::string class_name = artifact.class_name + "_" + label;
      std::string path = RelativePath(package_name, class_name);
      ClassBuffer& buffer = classes[path];
      if (buffer.class_name.empty()) {
        buffer.package_name = package_name;
        buffer.class_name = class_name;
        auto it = spec.imports_by_class.find(sample.test_class);
        if (it != spec.imports_by_class.end()) {
          buffer.imports = ExtraImports(it->second);
        }
      }
      buffer.methods.push_back(artifact.source);
      row.file = path;
      row.method = artifact.method_name;
      row.kind = std::string(ArtifactKindName(artifact.kind));
    } catch (const Error& e) {
      row.file.clear();
      row.method.clear();
      row.error = std::string(ErrorCodeName(e.code())) + ": " + e.what();
    }
    output.manifest.push_back(std::move(row));
  }

  for (const auto& [path, buffer] : classes) {
    output.files.emplace(path, RenderClass(buffer));
  }
  return output;
}

SuiteOutput EmitSuite(const SuiteSpec& spec) {
  SuiteOutput output = BuildSuite(spec);
  std::filesystem::path root(spec.output_dir);
  for (const auto& [path, contents] : output.files) {
    WriteFile((root / path).string(), contents);
  }
  WriteFile((root / ManifestFileName(spec.label)).string(),
            ManifestToJsonl(output.manifest));
  return output;
}

std::string ManifestToJsonl(const std::vector<ManifestRow>& rows) {
  std::string out;
  for (const auto& row : rows) {
    ojson j;
    j["id"] = row.id;
    j["file"] = row.file;
    j["method"] = row.method;
    j["kind"] = row.kind;
    j["error"] = row.error;
    out.append(j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace));
    out.push_back('\n');
  }
  return out;
}

std::vector<ManifestRow> ParseManifestJsonl(std::string_view jsonl) {
  std::vector<ManifestRow> out;
  long row_number = 0;
  for (const std::string& line : SplitLines(jsonl)) {
    ++row_number;
    if (Trim(line).empty()) continue;
    try {
      nlohmann::json j = nlohmann::json::parse(line);
      if (!j.is_object() || j.size() != 5) {
        throw SchemaError("manifest row must have exactly 5 keys", row_number);
      }
      ManifestRow row;
      row.id = j.at("id").get<std::string>();
      row.file = j.at("file").get<std::string>();
      row.method = j.at("method").get<std::string>();
      row.kind = j.at("kind").get<std::string>();
      row.error = j.at("error").get<std::string>();
      out.push_back(std::move(row));
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError(std::string("manifest: ") + e.what(), row_number);
    }
  }
  return out;
}

}  // namespace oraclekit::integrate
