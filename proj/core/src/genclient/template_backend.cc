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

#include <utility>

#include "oraclekit/common/error.h"
#include "oraclekit/common/text.h"
#include "oraclekit/genclient/backend.h"
#include "oraclekit/jparse/lexer.h"

namespace oraclekit::genclient {

TemplateBackend::TemplateBackend(std::string sep_token,
                                 jparse::ParseOptions options)
    : sep_token_(std::move(sep_token)), options_(std::move(options)) {}

std::string TemplateBackend::Generate(const GenerationRequest& request) {
  std::optional<jparse::Statement> last;
  bool doc_mentions_throws = false;
  if (request.sample != nullptr) {
    if (!request.sample->prefix.empty()) last = request.sample->prefix.back();
    doc_mentions_throws = request.sample->mut.javadoc.value_or("").find(
                              "throws") != std::string::npos;
  } else {
    std::string_view prefix = request.prompt;
    if (!sep_token_.empty()) {
      prefix = prefix.substr(0, prefix.find(sep_token_));
    }
    std::vector<std::string> lines = SplitLines(prefix);
    if (!lines.empty()) {
      try {
        last = jparse::ParseStatement(lines.back(), options_);
      } catch (const Error&) {
      }
    }
  }
  if (!last.has_value()) return "";

  if (last->kind == jparse::StatementKind::kDeclaration &&
      !last->defined_vars.empty()) {
    if (jparse::IsPrimitiveType(last->declared_type)) return "";
    return "assertNotNull(" + last->defined_vars.back() + ");";
  }
  if (last->kind == jparse::StatementKind::kCall && doc_mentions_throws) {
    return "// throws RuntimeException";
  }
  return "";
}

}  // namespace oraclekit::genclient
