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

#include "jparse/statement_parser.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

#include "oraclekit/common/error.h"

namespace oraclekit::jparse {

std::string_view StatementKindName(StatementKind kind) {
  switch (kind) {
    case StatementKind::kDeclaration: return "declaration";
    case StatementKind::kCall: return "call";
    case StatementKind::kAssertionCall: return "assertionCall";
    case StatementKind::kTryCatch: return "tryCatch";
    case StatementKind::kFailCall: return "failCall";
    case StatementKind::kOther: return "other";
  }
  return "other";
}

namespace internal {
namespace {

constexpr std::array<std::string_view, 19> kUnsupportedStatementKeywords = {
    "if",     "for",    "while",   "do",       "switch",       "synchronized",
    "return", "throw",  "break",   "continue", "goto",         "assert",
    "class",  "interface", "enum", "case",     "default",      "else",
    "const",
};

bool IsLiteral(const Token& tok) {
  switch (tok.kind) {
    case TokenKind::kIntLiteral:
    case TokenKind::kFloatLiteral:
    case TokenKind::kCharLiteral:
    case TokenKind::kStringLiteral:
      return true;
    case TokenKind::kIdentifier:
      return tok.text == "true" || tok.text == "false" || tok.text == "null";
    default:
      return false;
  }
}

}  // namespace

StatementParser::StatementParser(const std::vector<Token>& tokens,
                                 const ParseOptions& options, std::size_t pos)
    : tokens_(tokens), options_(options), pos_(pos) {}

const Token& StatementParser::Peek(std::size_t ahead) const {
  std::size_t index = std::min(pos_ + ahead, tokens_.size() - 1);
  return tokens_[index];
}

const Token& StatementParser::Next() {
  const Token& tok = tokens_[pos_];
  if (tok.kind != TokenKind::kEnd) ++pos_;
  return tok;
}

bool StatementParser::Accept(std::string_view text) {
  if (Peek().kind == TokenKind::kOperator || Peek().kind == TokenKind::kKeyword ||
      Peek().kind == TokenKind::kIdentifier) {
    if (Peek().text == text) {
      Next();
      return true;
    }
  }
  return false;
}

const Token& StatementParser::Expect(std::string_view text) {
  if (!Peek().Is(text) || Peek().kind == TokenKind::kEnd) {
    ParseFail(Peek(), "expected '" + std::string(text) + "'");
  }
  return Next();
}

void StatementParser::ParseFail(const Token& tok,
                                const std::string& message) const {
  std::string near = tok.kind == TokenKind::kEnd ? "<end>" : tok.text;
  throw SourceError(ErrorCode::kParseError, message, tok.line, tok.column,
                    near);
}

void StatementParser::Unsupported(const Token& tok,
                                  const std::string& what) const {
  throw SourceError(ErrorCode::kUnsupportedConstruct, what + " is not supported",
                    tok.line, tok.column, tok.text);
}

bool StatementParser::IsIdentifier(const Token& tok) const {
  return tok.kind == TokenKind::kIdentifier && !IsLiteral(tok);
}

void StatementParser::RecordUse(const std::string& name) {
  if (collectors_.empty()) return;
  auto& used = collectors_.back().used;
  if (std::find(used.begin(), used.end(), name) == used.end()) {
    used.push_back(name);
  }
}

void StatementParser::RecordCall(CallSite call) {
  if (collectors_.empty()) return;
  collectors_.back().calls.push_back(std::move(call));
}

std::vector<Statement> StatementParser::ParseBlockBody() {
  std::vector<Statement> out;
  while (Peek().kind != TokenKind::kEnd && !Peek().Is("}")) {
    out.push_back(ParseOne());
  }
  return out;
}

Statement StatementParser::ParseOne() {
  collectors_.emplace_back();
  std::size_t begin = pos_;
  Statement stmt = ParseStatementInternal();
  FinishStatement(stmt, begin);
  return stmt;
}

void StatementParser::FinishStatement(Statement& stmt, std::size_t begin_index) {
  Collector collected = std::move(collectors_.back());
  collectors_.pop_back();
  stmt.used_vars = collected.used;
  stmt.calls = collected.calls;
  stmt.text = CanonicalText(tokens_, begin_index, pos_);
  const Token& first = tokens_[begin_index];
  const Token& last = tokens_[pos_ - 1];
  stmt.span = SourceSpan{first.offset, last.end(), first.line, first.column};
  // Nested statements report into the enclosing statement as well.
  if (!collectors_.empty()) {
    for (const auto& name : collected.used) RecordUse(name);
    for (auto& call : collected.calls) RecordCall(std::move(call));
  }
}

Statement StatementParser::ParseStatementInternal() {
  Statement stmt;
  const Token& tok = Peek();
  if (tok.kind == TokenKind::kEnd) ParseFail(tok, "unexpected end of input");
  if (tok.Is(";")) {
    Next();
    stmt.kind = StatementKind::kOther;
    return stmt;
  }
  if (tok.Is("{")) Unsupported(tok, "nested block");
  if (tok.Is("@")) Unsupported(tok, "annotated local declaration");
  if (tok.kind == TokenKind::kKeyword) {
    if (tok.text == "try") {
      ParseTry(stmt);
      return stmt;
    }
    if (std::find(kUnsupportedStatementKeywords.begin(),
                  kUnsupportedStatementKeywords.end(),
                  tok.text) != kUnsupportedStatementKeywords.end()) {
      Unsupported(tok, "'" + tok.text + "' statement");
    }
    if (tok.text == "catch" || tok.text == "finally") {
      ParseFail(tok, "'" + tok.text + "' without try");
    }
  }
  if (IsIdentifier(tok) && Peek(1).Is(":") ) Unsupported(tok, "labeled statement");
  if (IsIdentifier(tok) && (tok.text == "yield") && !Peek(1).Is("=") &&
      !Peek(1).Is(".") && !Peek(1).Is("(")) {
    Unsupported(tok, "'yield' statement");
  }

  if (TryParseDeclaration(stmt)) return stmt;

  ExprInfo expr = ParseExpression();
  Expect(";");
  switch (expr.shape) {
    case Shape::kCall:
      stmt.callee = expr.callee;
      if (options_.assertions.Contains(expr.callee)) {
        stmt.kind = StatementKind::kAssertionCall;
      } else if (expr.callee == "fail") {
        stmt.kind = StatementKind::kFailCall;
      } else {
        stmt.kind = StatementKind::kCall;
      }
      break;
    case Shape::kNew:
      stmt.callee = expr.callee;
      stmt.kind = StatementKind::kCall;
      break;
    default:
      stmt.kind = StatementKind::kOther;
      break;
  }
  return stmt;
}

void StatementParser::ParseTry(Statement& stmt) {
  stmt.kind = StatementKind::kTryCatch;
  Next();  // try
  if (Peek().Is("(")) Unsupported(Peek(), "try-with-resources");
  Expect("{");
  stmt.try_body = ParseBlockBody();
  Expect("}");
  while (Peek().Is("catch")) {
    Next();
    CatchClause clause;
    Expect("(");
    while (Accept("final")) {
    }
    do {
      std::string type;
      bool primitive = false;
      if (!TryParseType(&type, &primitive) || primitive) {
        ParseFail(Peek(), "expected exception type");
      }
      clause.types.push_back(type);
    } while (Accept("|"));
    if (!IsIdentifier(Peek())) ParseFail(Peek(), "expected catch parameter");
    clause.variable = Next().text;
    Expect(")");
    Expect("{");
    clause.body = ParseBlockBody();
    Expect("}");
    stmt.catches.push_back(std::move(clause));
  }
  if (Peek().Is("finally")) {
    Next();
    Expect("{");
    stmt.finally_body = ParseBlockBody();
    Expect("}");
    stmt.has_finally = true;
  }
  if (stmt.catches.empty() && !stmt.has_finally) {
    ParseFail(Peek(), "try without catch or finally");
  }
}

bool StatementParser::TryParseTypeArguments() {
  std::size_t save = pos_;
  if (!Accept("<")) return false;
  if (Accept(">")) return true;  // diamond
  while (true) {
    if (Accept("?")) {
      if (Accept("extends") || Accept("super")) {
        std::string ignored;
        bool primitive = false;
        if (!TryParseType(&ignored, &primitive)) {
          pos_ = save;
          return false;
        }
      }
    } else {
      std::string ignored;
      bool primitive = false;
      if (!TryParseType(&ignored, &primitive)) {
        pos_ = save;
        return false;
      }
    }
    if (Accept(",")) continue;
    if (Accept(">")) return true;
    pos_ = save;
    return false;
  }
}

bool StatementParser::TryParseType(std::string* text, bool* primitive) {
  std::size_t save = pos_;
  *primitive = false;
  const Token& first = Peek();
  if (first.kind == TokenKind::kKeyword && IsPrimitiveType(first.text)) {
    Next();
    *primitive = true;
  } else if (IsIdentifier(first)) {
    Next();
    if (Peek().Is("<") && !TryParseTypeArguments()) {
      pos_ = save;
      return false;
    }
    while (Peek().Is(".") && IsIdentifier(Peek(1))) {
      Next();
      Next();
      if (Peek().Is("<") && !TryParseTypeArguments()) {
        pos_ = save;
        return false;
      }
    }
  } else {
    return false;
  }
  while (Peek().Is("[") && Peek(1).Is("]")) {
    Next();
    Next();
    *primitive = false;
  }
  *text = CanonicalText(tokens_, save, pos_);
  return true;
}

bool StatementParser::TryParseDeclaration(Statement& stmt) {
  std::size_t save = pos_;
  while (Accept("final")) {
  }
  std::string type;
  bool primitive = false;
  if (!TryParseType(&type, &primitive) || !IsIdentifier(Peek())) {
    pos_ = save;
    return false;
  }
  const Token& after = Peek(1);
  if (!(after.Is("=") || after.Is(";") || after.Is(",") || after.Is("["))) {
    pos_ = save;
    return false;
  }
  stmt.kind = StatementKind::kDeclaration;
  stmt.declared_type = type;
  while (true) {
    if (!IsIdentifier(Peek())) ParseFail(Peek(), "expected variable name");
    stmt.defined_vars.push_back(Next().text);
    while (Peek().Is("[")) {
      Next();
      Expect("]");
      stmt.declared_type += "[]";
    }
    if (Accept("=")) ParseVariableInitializer();
    if (Accept(",")) continue;
    Expect(";");
    break;
  }
  return true;
}

void StatementParser::ParseVariableInitializer() {
  if (Peek().Is("{")) {
    ParseArrayInitializer();
  } else {
    ParseExpression();
  }
}

void StatementParser::ParseArrayInitializer() {
  Expect("{");
  while (!Peek().Is("}")) {
    ParseVariableInitializer();
    if (!Accept(",")) break;
  }
  Expect("}");
}

std::size_t StatementParser::MatchingParen(std::size_t open) const {
  int depth = 0;
  for (std::size_t i = open; i < tokens_.size(); ++i) {
    if (tokens_[i].kind == TokenKind::kEnd) break;
    if (tokens_[i].Is("(")) ++depth;
    if (tokens_[i].Is(")")) {
      if (--depth == 0) return i;
    }
  }
  return tokens_.size() - 1;
}

std::size_t StatementParser::PeekAssignmentOperator() const {
  const Token& tok = Peek();
  if (tok.kind != TokenKind::kOperator) return 0;
  static constexpr std::array<std::string_view, 10> kSimple = {
      "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<="};
  if (std::find(kSimple.begin(), kSimple.end(), tok.text) != kSimple.end()) {
    return 1;
  }
  if (tok.Is(">")) {
    const Token& t1 = Peek(1);
    if (t1.space_before) return 0;
    if (t1.Is(">=")) return 2;  // >>=
    if (t1.Is(">") && !Peek(2).space_before && Peek(2).Is(">=")) return 3;
  }
  return 0;
}

int StatementParser::PeekBinaryOperator(std::size_t* token_count,
                                        std::string* op) const {
  const Token& tok = Peek();
  *token_count = 1;
  if (tok.kind == TokenKind::kKeyword && tok.text == "instanceof") {
    *op = "instanceof";
    return 7;
  }
  if (tok.kind != TokenKind::kOperator) return 0;
  if (tok.Is(">")) {
    const Token& t1 = Peek(1);
    if (!t1.space_before && t1.Is(">=")) return 0;  // >>=
    if (!t1.space_before && t1.Is(">")) {
      const Token& t2 = Peek(2);
      if (!t2.space_before && t2.Is(">=")) return 0;  // >>>=
      if (!t2.space_before && t2.Is(">")) {
        *token_count = 3;
        *op = ">>>";
        return 8;
      }
      *token_count = 2;
      *op = ">>";
      return 8;
    }
    *op = ">";
    return 7;
  }
  *op = tok.text;
  if (tok.text == "||") return 1;
  if (tok.text == "&&") return 2;
  if (tok.text == "|") return 3;
  if (tok.text == "^") return 4;
  if (tok.text == "&") return 5;
  if (tok.text == "==" || tok.text == "!=") return 6;
  if (tok.text == "<" || tok.text == "<=" || tok.text == ">=") return 7;
  if (tok.text == "<<") return 8;
  if (tok.text == "+" || tok.text == "-") return 9;
  if (tok.text == "*" || tok.text == "/" || tok.text == "%") return 10;
  return 0;
}

StatementParser::ExprInfo StatementParser::ParseExpression() {
  ExprInfo lhs = ParseTernary();
  if (std::size_t n = PeekAssignmentOperator(); n > 0) {
    if (lhs.shape != Shape::kName) {
      ParseFail(Peek(), "invalid assignment target");
    }
    for (std::size_t i = 0; i < n; ++i) Next();
    if (Peek().Is("{")) {
      ParseFail(Peek(), "array initializer outside declaration");
    }
    ParseExpression();
    return ExprInfo{Shape::kAssign, {}};
  }
  return lhs;
}

StatementParser::ExprInfo StatementParser::ParseTernary() {
  ExprInfo cond = ParseBinary(1);
  if (Accept("?")) {
    ParseTernary();
    Expect(":");
    ParseTernary();
    return ExprInfo{};
  }
  return cond;
}

StatementParser::ExprInfo StatementParser::ParseBinary(int min_precedence) {
  ExprInfo lhs = ParseUnary();
  while (true) {
    std::size_t count = 0;
    std::string op;
    int precedence = PeekBinaryOperator(&count, &op);
    if (precedence == 0 || precedence < min_precedence) break;
    for (std::size_t i = 0; i < count; ++i) Next();
    if (op == "instanceof") {
      Accept("final");
      std::string type;
      bool primitive = false;
      if (!TryParseType(&type, &primitive)) ParseFail(Peek(), "expected type");
      if (IsIdentifier(Peek())) Unsupported(Peek(), "instanceof pattern");
    } else {
      ParseBinary(precedence + 1);
    }
    lhs = ExprInfo{};
  }
  return lhs;
}

StatementParser::ExprInfo StatementParser::ParseUnary() {
  const Token& tok = Peek();
  if (tok.kind == TokenKind::kOperator &&
      (tok.text == "+" || tok.text == "-" || tok.text == "!" ||
       tok.text == "~" || tok.text == "++" || tok.text == "--")) {
    Next();
    ParseUnary();
    return ExprInfo{};
  }
  if (tok.Is("(")) {
    std::size_t close = MatchingParen(pos_);
    if (tokens_[close].Is(")") && close + 1 < tokens_.size() &&
        tokens_[close + 1].Is("->")) {
      Unsupported(tok, "lambda expression");
    }
    std::size_t save = pos_;
    Next();
    std::string type;
    bool primitive = false;
    if (TryParseType(&type, &primitive) && Peek().Is(")")) {
      const Token& follow = Peek(1);
      bool cast = primitive || IsLiteral(follow) ||
                  follow.kind == TokenKind::kIdentifier || follow.Is("(") ||
                  follow.Is("this") || follow.Is("super") ||
                  follow.Is("new") || follow.Is("!") || follow.Is("~");
      if (primitive && (follow.Is("+") || follow.Is("-"))) cast = true;
      if (cast) {
        Next();  // ')'
        ParseUnary();
        return ExprInfo{};
      }
    }
    pos_ = save;
  }
  return ParsePostfix();
}

int StatementParser::ParseArguments() {
  Expect("(");
  int arity = 0;
  if (Accept(")")) return 0;
  while (true) {
    ParseExpression();
    ++arity;
    if (Accept(",")) continue;
    Expect(")");
    break;
  }
  return arity;
}

StatementParser::ExprInfo StatementParser::ParsePostfix() {
  ExprInfo expr = ParsePrimary();
  while (true) {
    const Token& tok = Peek();
    if (tok.Is(".")) {
      Next();
      if (Peek().Is("<")) {
        if (!TryParseTypeArguments()) ParseFail(Peek(), "bad type arguments");
        if (!IsIdentifier(Peek())) ParseFail(Peek(), "expected method name");
        std::string name = Next().text;
        int arity = ParseArguments();
        RecordCall(CallSite{name, arity, false});
        expr = ExprInfo{Shape::kCall, name};
        continue;
      }
      const Token& member = Peek();
      if (member.Is("new")) Unsupported(member, "qualified inner class creation");
      if (member.Is("class") || member.Is("this") || member.Is("super")) {
        Next();
        expr = ExprInfo{};
        continue;
      }
      if (!IsIdentifier(member) && member.kind != TokenKind::kIdentifier) {
        ParseFail(member, "expected member name");
      }
      std::string name = Next().text;
      if (Peek().Is("(")) {
        int arity = ParseArguments();
        RecordCall(CallSite{name, arity, false});
        expr = ExprInfo{Shape::kCall, name};
      } else {
        expr = ExprInfo{Shape::kName, {}};
      }
    } else if (tok.Is("[")) {
      Next();
      ParseExpression();
      Expect("]");
      expr = ExprInfo{Shape::kName, {}};
    } else if (tok.Is("++") || tok.Is("--")) {
      Next();
      expr = ExprInfo{};
    } else if (tok.Is("::")) {
      Unsupported(tok, "method reference");
    } else {
      break;
    }
  }
  return expr;
}

StatementParser::ExprInfo StatementParser::ParsePrimary() {
  const Token& tok = Peek();
  if (IsLiteral(tok)) {
    Next();
    return ExprInfo{Shape::kLiteral, {}};
  }
  if (tok.kind == TokenKind::kIdentifier) {
    if (Peek(1).Is("->")) Unsupported(tok, "lambda expression");
    std::string name = Next().text;
    if (Peek().Is("(")) {
      int arity = ParseArguments();
      RecordCall(CallSite{name, arity, false});
      return ExprInfo{Shape::kCall, name};
    }
    bool looks_like_type =
        Peek().Is(".") && std::isupper(static_cast<unsigned char>(name[0]));
    if (!looks_like_type) RecordUse(name);
    return ExprInfo{Shape::kName, {}};
  }
  if (tok.kind == TokenKind::kKeyword) {
    if (tok.text == "this" || tok.text == "super") {
      Next();
      if (Peek().Is("(")) Unsupported(tok, "explicit constructor invocation");
      return ExprInfo{};
    }
    if (tok.text == "new") return ParseCreator();
    if (IsPrimitiveType(tok.text) || tok.text == "void") {
      Next();
      while (Peek().Is("[") && Peek(1).Is("]")) {
        Next();
        Next();
      }
      if (!(Peek().Is(".") && Peek(1).Is("class"))) {
        ParseFail(Peek(), "expected '.class'");
      }
      return ExprInfo{};
    }
    if (tok.text == "switch") Unsupported(tok, "switch expression");
  }
  if (tok.Is("(")) {
    Next();
    ParseExpression();
    Expect(")");
    return ExprInfo{};
  }
  ParseFail(tok, "expected expression");
}

StatementParser::ExprInfo StatementParser::ParseCreator() {
  Next();  // new
  if (Peek().Is("<")) {
    if (!TryParseTypeArguments()) ParseFail(Peek(), "bad type arguments");
  }
  const Token& head = Peek();
  std::string simple_name;
  if (head.kind == TokenKind::kKeyword && IsPrimitiveType(head.text)) {
    simple_name = Next().text;
    if (!Peek().Is("[")) ParseFail(Peek(), "expected array dimension");
  } else if (IsIdentifier(head)) {
    simple_name = Next().text;
    if (Peek().Is("<") && !TryParseTypeArguments()) {
      ParseFail(Peek(), "bad type arguments");
    }
    while (Peek().Is(".") && IsIdentifier(Peek(1))) {
      Next();
      simple_name = Next().text;
      if (Peek().Is("<") && !TryParseTypeArguments()) {
        ParseFail(Peek(), "bad type arguments");
      }
    }
  } else {
    ParseFail(head, "expected type after 'new'");
  }

  if (Peek().Is("(")) {
    int arity = ParseArguments();
    if (Peek().Is("{")) Unsupported(Peek(), "anonymous class");
    RecordCall(CallSite{simple_name, arity, true});
    return ExprInfo{Shape::kNew, simple_name};
  }
  if (!Peek().Is("[")) ParseFail(Peek(), "expected '(' or '['");
  bool sized = false;
  bool seen_unsized = false;
  while (Peek().Is("[")) {
    Next();
    if (Accept("]")) {
      seen_unsized = true;
      continue;
    }
    if (seen_unsized) ParseFail(Peek(), "dimension after unsized dimension");
    sized = true;
    ParseExpression();
    Expect("]");
  }
  if (!sized) {
    if (!Peek().Is("{")) ParseFail(Peek(), "array creation needs a size");
    ParseArrayInitializer();
  }
  return ExprInfo{};
}

std::vector<Statement> ParseAllStatements(const std::vector<Token>& tokens,
                                          const ParseOptions& options) {
  StatementParser parser(tokens, options);
  std::vector<Statement> out = parser.ParseBlockBody();
  const Token& rest = tokens[parser.pos()];
  if (rest.kind != TokenKind::kEnd) {
    throw SourceError(ErrorCode::kParseError, "unexpected token", rest.line,
                      rest.column, rest.text);
  }
  return out;
}

}  // namespace internal
}  // namespace oraclekit::jparse
