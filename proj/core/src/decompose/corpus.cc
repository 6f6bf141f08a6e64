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

#include "oraclekit/decompose/corpus.h"

#include "oraclekit/common/error.h"
#include "oraclekit/decompose/decompose.h"

namespace oraclekit::decompose {

TestSourceEntries EntriesFromSources(std::string_view project_id,
                                     const jparse::SourceUnit& test_unit,
                                     std::span<const jparse::SourceUnit> cut_units,
                                     const jparse::ParseOptions& options) {
  jparse::TestClass parsed = jparse::ParseTestClass(test_unit, options);
  TestSourceEntries out;
  out.test_class = parsed.QualifiedName();
  out.imports = parsed.imports;
  for (const auto& skipped : parsed.skipped) {
    out.notes.push_back(out.test_class + "." + skipped);
  }

  std::vector<std::vector<jparse::MethodDecl>> decls;
  std::vector<jparse::MethodDecl> all_decls;
  decls.reserve(cut_units.size());
  for (const auto& unit : cut_units) {
    decls.push_back(jparse::ListMethods(unit));
    all_decls.insert(all_decls.end(), decls.back().begin(), decls.back().end());
  }

  for (auto& method : parsed.methods) {
    CorpusEntry entry;
    entry.project_id = std::string(project_id);
    entry.test_class = out.test_class;
    std::optional<MutCall> call = LocateMutCall(method, all_decls);
    if (!call.has_value()) {
      out.notes.push_back(out.test_class + "." + method.name +
                          ": no call to a method under test");
    } else {
      for (std::size_t u = 0; u < cut_units.size(); ++u) {
        bool declares = false;
        for (const auto& d : decls[u]) declares |= d.name == call->name;
        if (!declares) continue;
        try {
          entry.mut = jparse::ExtractMut(cut_units[u], call->name, call->arity);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kNotFound && e.code() != ErrorCode::kAmbiguous) {
            throw;
          }
          out.notes.push_back(out.test_class + "." + method.name + ": " + e.what());
        }
        break;
      }
    }
    entry.test = std::move(method);
    out.entries.push_back(std::move(entry));
  }
  return out;
}

}  // namespace oraclekit::decompose
