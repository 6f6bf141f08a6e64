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

#ifndef ORACLEKIT_DECOMPOSE_CORPUS_H_
#define ORACLEKIT_DECOMPOSE_CORPUS_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oraclekit/decompose/dataset.h"
#include "oraclekit/jparse/ast.h"
#include "oraclekit/jparse/parser.h"

namespace oraclekit::decompose {

struct TestSourceEntries {
  std::string test_class;            // qualified name
  std::vector<std::string> imports;  // canonical import declarations
  std::vector<CorpusEntry> entries;  // one per @Test method
  // "<class>.<test>: reason" for tests whose method under test could not be
  // located (kept with an empty method record) and for test bodies skipped
  // under ParseOptions::skip_unparsable_methods.
  std::vector<std::string> notes;
};

// Parses a test class and pairs each test with the method under test, looked
// up among `cut_units` (the sources of the classes under test).
TestSourceEntries EntriesFromSources(std::string_view project_id,
                                     const jparse::SourceUnit& test_unit,
                                     std::span<const jparse::SourceUnit> cut_units,
                                     const jparse::ParseOptions& options = {});

}  // namespace oraclekit::decompose

#endif  // ORACLEKIT_DECOMPOSE_CORPUS_H_
