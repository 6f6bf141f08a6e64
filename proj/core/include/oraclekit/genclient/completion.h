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

#ifndef ORACLEKIT_GENCLIENT_COMPLETION_H_
#define ORACLEKIT_GENCLIENT_COMPLETION_H_

#include <optional>
#include <string>
#include <string_view>

#include "oraclekit/jparse/parser.h"

namespace oraclekit::genclient {

enum class ParsedKind { kAssertion, kException, kEmpty, kInvalid };

std::string_view ParsedKindName(ParsedKind kind);
std::optional<ParsedKind> ParseParsedKind(std::string_view name);

struct ParsedOracle {
  ParsedKind kind = ParsedKind::kEmpty;
  // Canonical assertion statement, exception type name, or the trimmed raw
  // text for kInvalid. Empty for kEmpty.
  std::string payload;

  friend bool operator==(const ParsedOracle&, const ParsedOracle&) = default;
};

// Classifies a raw completion:
//   blank                      -> kEmpty
//   "// throws <Type>"         -> kException(Type)
//   first statement (through the first top-level ';') is an assertion call
//                              -> kAssertion(that statement only)
//   anything else              -> kInvalid
ParsedOracle ParseCompletion(std::string_view raw,
                             const jparse::ParseOptions& options = {});

// Simple name of the assertion method for kAssertion, empty otherwise.
std::string AssertionName(const ParsedOracle& oracle,
                          const jparse::ParseOptions& options = {});

}  // namespace oraclekit::genclient

#endif  // ORACLEKIT_GENCLIENT_COMPLETION_H_
