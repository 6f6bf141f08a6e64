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

#ifndef ORACLEKIT_JPARSE_LEXER_H_
#define ORACLEKIT_JPARSE_LEXER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace oraclekit::jparse {

enum class TokenKind {
  kIdentifier,
  kKeyword,
  kIntLiteral,
  kFloatLiteral,
  kCharLiteral,
  kStringLiteral,
  kOperator,
  kEnd,
};

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  std::size_t offset = 0;  // byte offset into the lexed source
  std::size_t length = 0;
  int line = 1;
  int column = 1;
  // Whitespace or a comment separates this token from the previous one.
  bool space_before = false;

  std::size_t end() const { return offset + length; }
  bool Is(std::string_view s) const {
    return kind != TokenKind::kStringLiteral &&
           kind != TokenKind::kCharLiteral && text == s;
  }
};

struct Comment {
  std::size_t offset = 0;
  std::size_t length = 0;
  int line = 1;
  bool is_doc = false;  // "/** ... */"
};

struct LexResult {
  std::vector<Token> tokens;  // always terminated by a kEnd token
  std::vector<Comment> comments;
};

// Tokenizes Java source. '>' is always emitted as a single-character token
// (except in ">=") so that nested generic closers need no splitting; the
// expression parser joins adjacent '>' tokens into shift operators.
// Throws SourceError(kParseError) on unterminated literals or comments and on
// characters outside the Java lexical grammar.
LexResult Lex(std::string_view source);

// Tokens [begin, end) rendered with one space wherever the source separated
// them by whitespace or comments. Comments are dropped.
std::string CanonicalText(const std::vector<Token>& tokens, std::size_t begin,
                          std::size_t end);

// Token-level normal form used for text equality: whitespace and comments
// vanish except where two adjacent tokens would otherwise fuse. Text that
// does not lex falls back to whitespace collapsing.
std::string NormalizeCode(std::string_view text);

bool IsJavaKeyword(std::string_view word);
bool IsPrimitiveType(std::string_view word);

}  // namespace oraclekit::jparse

#endif  // ORACLEKIT_JPARSE_LEXER_H_
