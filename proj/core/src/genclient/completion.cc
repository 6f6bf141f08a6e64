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

#include "oraclekit/genclient/completion.h"

#include "oraclekit/common/error.h"
#include "oraclekit/common/text.h"
#include "oraclekit/decompose/sample.h"

namespace oraclekit::genclient {
namespace {

// Index one past the first ';' outside brackets and literals, or npos.
std::size_t FirstStatementEnd(std::string_view text) {
  int depth = 0;
  char quote = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quote != 0) {
      if (c == '\\') {
        ++i;
      } else if (c == quote) {
        quote = 0;
      }
      continue;
    }
    if (c == '"' || c == '\'') {
      quote = c;
    } else if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      std::size_t nl = text.find('\n', i);
      if (nl == std::string_view::npos) return std::string_view::npos;
      i = nl;
    } else if (c == '(' || c == '[' || c == '{') {
      ++depth;
    } else if (c == ')' || c == ']' || c == '}') {
      --depth;
    } else if (c == ';' && depth == 0) {
      return i + 1;
    }
  }
  return std::string_view::npos;
}

}  // namespace

std::string_view ParsedKindName(ParsedKind kind) {
  switch (kind) {
    case ParsedKind::kAssertion: return "assertion";
    case ParsedKind::kException: return "exception";
    case ParsedKind::kEmpty: return "empty";
    case ParsedKind::kInvalid: return "invalid";
  }
  return "invalid";
}

std::optional<ParsedKind> ParseParsedKind(std::string_view name) {
  for (ParsedKind k : {ParsedKind::kAssertion, ParsedKind::kException,
                       ParsedKind::kEmpty, ParsedKind::kInvalid}) {
    if (ParsedKindName(k) == name) return k;
  }
  return std::nullopt;
}

ParsedOracle ParseCompletion(std::string_view raw,
                             const jparse::ParseOptions& options) {
  std::string_view text = Trim(raw);
  if (text.empty()) return ParsedOracle{ParsedKind::kEmpty, ""};

  if (text.starts_with(decompose::kThrowsMarker)) {
    std::string_view rest = text.substr(decompose::kThrowsMarker.size());
    rest = Trim(rest.substr(0, rest.find('\n')));
    if (IsQualifiedIdentifier(rest)) {
      return ParsedOracle{ParsedKind::kException, std::string(rest)};
    }
    return ParsedOracle{ParsedKind::kInvalid, std::string(text)};
  }

  std::size_t end = FirstStatementEnd(text);
  if (end == std::string_view::npos) {
    return ParsedOracle{ParsedKind::kInvalid, std::string(text)};
  }
  try {
    jparse::Statement stmt = jparse::ParseStatement(text.substr(0, end), options);
    if (stmt.kind == jparse::StatementKind::kAssertionCall) {
      return ParsedOracle{ParsedKind::kAssertion, stmt.text};
    }
  } catch (const Error&) {
  }
  return ParsedOracle{ParsedKind::kInvalid, std::string(text)};
}

std::string AssertionName(const ParsedOracle& oracle,
                          const jparse::ParseOptions& options) {
  if (oracle.kind != ParsedKind::kAssertion) return "";
  try {
    return jparse::ParseStatement(oracle.payload, options).callee;
  } catch (const Error&) {
    return "";
  }
}

}  // namespace oraclekit::genclient
