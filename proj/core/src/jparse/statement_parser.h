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

#ifndef ORACLEKIT_SRC_JPARSE_STATEMENT_PARSER_H_
#define ORACLEKIT_SRC_JPARSE_STATEMENT_PARSER_H_

#include <cstddef>
#include <string>
#include <vector>

#include "oraclekit/jparse/ast.h"
#include "oraclekit/jparse/lexer.h"
#include "oraclekit/jparse/parser.h"

namespace oraclekit::jparse::internal {

// Recursive-descent parser for the statement subset over an existing token
// vector. Positions are token indices.
class StatementParser {
 public:
  StatementParser(const std::vector<Token>& tokens, const ParseOptions& options,
                  std::size_t pos = 0);

  // Parses statements until a closing '}' or the end token; does not consume
  // the terminator.
  std::vector<Statement> ParseBlockBody();

  Statement ParseOne();

  std::size_t pos() const { return pos_; }

  // Skips a type at the current position without recording anything.
  // Returns false (position unchanged) when no type is present.
  bool TryParseType(std::string* text, bool* primitive);

 private:
  enum class Shape { kCall, kNew, kAssign, kName, kLiteral, kOther };
  struct ExprInfo {
    Shape shape = Shape::kOther;
    std::string callee;
  };
  struct Collector {
    std::vector<std::string> used;
    std::vector<CallSite> calls;
  };

  const Token& Peek(std::size_t ahead = 0) const;
  const Token& Next();
  bool Accept(std::string_view text);
  const Token& Expect(std::string_view text);
  [[noreturn]] void ParseFail(const Token& tok, const std::string& message) const;
  [[noreturn]] void Unsupported(const Token& tok, const std::string& what) const;
  bool IsIdentifier(const Token& tok) const;

  Statement ParseStatementInternal();
  void ParseTry(Statement& stmt);
  bool TryParseDeclaration(Statement& stmt);
  bool TryParseTypeArguments();
  void ParseArrayInitializer();
  void ParseVariableInitializer();

  ExprInfo ParseExpression();
  ExprInfo ParseTernary();
  ExprInfo ParseBinary(int min_precedence);
  ExprInfo ParseUnary();
  ExprInfo ParsePostfix();
  ExprInfo ParsePrimary();
  ExprInfo ParseCreator();
  int ParseArguments();
  std::size_t MatchingParen(std::size_t open) const;

  // Returns operator precedence and token count of a binary operator at the
  // current position, or precedence 0 when none.
  int PeekBinaryOperator(std::size_t* token_count, std::string* op) const;
  std::size_t PeekAssignmentOperator() const;

  void RecordUse(const std::string& name);
  void RecordCall(CallSite call);
  void FinishStatement(Statement& stmt, std::size_t begin_index);

  const std::vector<Token>& tokens_;
  const ParseOptions& options_;
  std::size_t pos_;
  std::vector<Collector> collectors_;
};

// Parses `text` as a whole: every token must be consumed.
std::vector<Statement> ParseAllStatements(const std::vector<Token>& tokens,
                                          const ParseOptions& options);

}  // namespace oraclekit::jparse::internal

#endif  // ORACLEKIT_SRC_JPARSE_STATEMENT_PARSER_H_
