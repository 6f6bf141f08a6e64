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

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "jparse/statement_parser.h"
#include "oraclekit/common/error.h"
#include "oraclekit/common/text.h"
#include "oraclekit/jparse/lexer.h"
#include "oraclekit/jparse/parser.h"

namespace oraclekit::jparse {
namespace {

constexpr std::array<std::string_view, 14> kModifiers = {
    "public",    "protected", "private",  "static",       "final",
    "abstract",  "native",    "transient", "volatile",    "strictfp",
    "default",   "synchronized", "sealed", "non-sealed",
};

struct AnnotationInfo {
  std::string simple_name;
  std::string text;
};

struct MethodInfo {
  std::string name;
  int arity = 0;
  bool is_constructor = false;
  std::string owner;
  std::vector<AnnotationInfo> annotations;
  std::size_t decl_begin = 0;  // first annotation or modifier token
  std::size_t sig_begin = 0;   // first token after the annotations
  std::size_t sig_end = 0;     // one past the throws clause
  std::size_t throws_begin = 0;
  std::size_t body_open = 0;   // '{' token, 0 when abstract
  std::size_t body_close = 0;  // matching '}'
  std::size_t end = 0;         // one past the declaration
};

struct UnitOutline {
  std::string package_name;
  std::vector<std::string> imports;
  std::vector<std::string> types;
  std::vector<MethodInfo> methods;
};

// Walks declarations at class level. Method bodies and field initializers
// are skipped by bracket matching so arbitrary Java inside them is tolerated.
class OutlineParser {
 public:
  explicit OutlineParser(const LexResult& lexed) : toks_(lexed.tokens) {}

  UnitOutline Run() {
    SkipAnnotations(nullptr);
    if (Accept("package")) {
      std::size_t begin = pos_;
      SkipUntil(";");
      outline_.package_name = CanonicalText(toks_, begin, pos_);
      Expect(";");
    }
    while (Peek().Is("import")) {
      std::size_t begin = pos_;
      SkipUntil(";");
      Expect(";");
      outline_.imports.push_back(CanonicalText(toks_, begin, pos_));
    }
    while (Peek().kind != TokenKind::kEnd) {
      if (Accept(";")) continue;
      std::vector<AnnotationInfo> annotations;
      std::size_t sig = 0;
      SkipModifiers(&annotations, &sig);
      if (!ParseTypeHeader()) Fail(Peek(), "expected type declaration");
    }
    return std::move(outline_);
  }

 private:
  const Token& Peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& Next() {
    const Token& tok = toks_[pos_];
    if (tok.kind != TokenKind::kEnd) ++pos_;
    return tok;
  }
  bool Accept(std::string_view text) {
    if (Peek().Is(text) && Peek().kind != TokenKind::kEnd) {
      Next();
      return true;
    }
    return false;
  }
  void Expect(std::string_view text) {
    if (!Accept(text)) Fail(Peek(), "expected '" + std::string(text) + "'");
  }
  [[noreturn]] void Fail(const Token& tok, const std::string& message) const {
    throw SourceError(ErrorCode::kParseError, message, tok.line, tok.column,
                      tok.kind == TokenKind::kEnd ? "<end>" : tok.text);
  }

  void SkipUntil(std::string_view text) {
    while (Peek().kind != TokenKind::kEnd && !Peek().Is(text)) Next();
  }

  // Skips a balanced (), {} or [] group starting at the current token.
  void SkipBalanced() {
    int depth = 0;
    do {
      const Token& tok = Peek();
      if (tok.kind == TokenKind::kEnd) Fail(tok, "unbalanced brackets");
      if (tok.Is("(") || tok.Is("{") || tok.Is("[")) ++depth;
      if (tok.Is(")") || tok.Is("}") || tok.Is("]")) --depth;
      Next();
    } while (depth > 0);
  }

  void SkipAngles() {
    int depth = 0;
    do {
      const Token& tok = Peek();
      if (tok.kind == TokenKind::kEnd) Fail(tok, "unbalanced type parameters");
      if (tok.Is("<")) ++depth;
      if (tok.Is(">")) --depth;
      Next();
    } while (depth > 0);
  }

  void SkipAnnotations(std::vector<AnnotationInfo>* out) {
    while (Peek().Is("@") && !Peek(1).Is("interface")) {
      std::size_t begin = pos_;
      Next();
      std::string simple;
      while (Peek().kind == TokenKind::kIdentifier) {
        simple = Next().text;
        if (!Accept(".")) break;
      }
      if (Peek().Is("(")) SkipBalanced();
      if (out != nullptr) {
        out->push_back({simple, CanonicalText(toks_, begin, pos_)});
      }
    }
  }

  bool IsModifier(const Token& tok) const {
    return (tok.kind == TokenKind::kKeyword ||
            tok.kind == TokenKind::kIdentifier) &&
           std::find(kModifiers.begin(), kModifiers.end(), tok.text) !=
               kModifiers.end() &&
           !(tok.text == "sealed" && !IsModifierFollower(Peek(1)));
  }

  bool IsModifierFollower(const Token& tok) const {
    return tok.kind == TokenKind::kKeyword || tok.kind == TokenKind::kIdentifier;
  }

  // Consumes annotations and modifiers; *sig_begin is the first token that is
  // not part of an annotation.
  void SkipModifiers(std::vector<AnnotationInfo>* annotations,
                     std::size_t* sig_begin) {
    *sig_begin = 0;
    while (true) {
      if (Peek().Is("@") && !Peek(1).Is("interface")) {
        SkipAnnotations(annotations);
        continue;
      }
      if (IsModifier(Peek())) {
        if (*sig_begin == 0) *sig_begin = pos_;
        Next();
        continue;
      }
      break;
    }
    if (*sig_begin == 0) *sig_begin = pos_;
  }

  bool ParseTypeHeader() {
    bool is_enum = false;
    if (Peek().Is("class") || Peek().Is("interface")) {
      Next();
    } else if (Peek().Is("enum")) {
      Next();
      is_enum = true;
    } else if (Peek().Is("@") && Peek(1).Is("interface")) {
      Next();
      Next();
    } else if (Peek().kind == TokenKind::kIdentifier && Peek().text == "record" &&
               Peek(1).kind == TokenKind::kIdentifier) {
      Next();
    } else {
      return false;
    }
    if (Peek().kind != TokenKind::kIdentifier) Fail(Peek(), "expected type name");
    std::string name = Next().text;
    outline_.types.push_back(name);
    while (Peek().kind != TokenKind::kEnd && !Peek().Is("{")) {
      if (Peek().Is("(")) {
        SkipBalanced();
      } else {
        Next();
      }
    }
    ParseClassBody(name, is_enum);
    return true;
  }

  void ParseClassBody(const std::string& owner, bool is_enum) {
    Expect("{");
    if (is_enum) {
      int depth = 0;
      while (Peek().kind != TokenKind::kEnd) {
        if (depth == 0 && (Peek().Is(";") || Peek().Is("}"))) break;
        if (Peek().Is("(") || Peek().Is("{")) ++depth;
        if (Peek().Is(")") || Peek().Is("}")) --depth;
        Next();
      }
      Accept(";");
    }
    while (!Peek().Is("}")) {
      if (Peek().kind == TokenKind::kEnd) Fail(Peek(), "unterminated class body");
      if (Accept(";")) continue;
      ParseMember(owner);
    }
    Expect("}");
  }

  // Skips a type reference; returns false if none is present.
  bool SkipType() {
    const Token& tok = Peek();
    if (tok.kind != TokenKind::kIdentifier &&
        !(tok.kind == TokenKind::kKeyword &&
          (IsPrimitiveType(tok.text) || tok.text == "void"))) {
      return false;
    }
    Next();
    if (Peek().Is("<")) SkipAngles();
    while (Peek().Is(".") && Peek(1).kind == TokenKind::kIdentifier) {
      Next();
      Next();
      if (Peek().Is("<")) SkipAngles();
    }
    while (Peek().Is("@")) SkipAnnotations(nullptr);
    while (Peek().Is("[") && Peek(1).Is("]")) {
      Next();
      Next();
    }
    return true;
  }

  int CountParameters(std::size_t open, std::size_t close) const {
    if (close == open + 1) return 0;
    int commas = 0;
    int paren = 0;
    int angle = 0;
    for (std::size_t i = open + 1; i < close; ++i) {
      const Token& tok = toks_[i];
      if (tok.Is("(")) ++paren;
      if (tok.Is(")")) --paren;
      if (tok.Is("<")) ++angle;
      if (tok.Is(">")) --angle;
      if (tok.Is(",") && paren == 0 && angle == 0) ++commas;
    }
    return commas + 1;
  }

  void ParseMember(const std::string& owner) {
    MethodInfo info;
    info.owner = owner;
    info.decl_begin = pos_;
    SkipModifiers(&info.annotations, &info.sig_begin);
    if (Peek().Is("{")) {  // initializer block
      SkipBalanced();
      return;
    }
    if (ParseTypeHeader()) return;
    if (Peek().Is("<")) SkipAngles();

    if (Peek().kind == TokenKind::kIdentifier && Peek(1).Is("(")) {
      info.is_constructor = true;
      info.name = Next().text;
    } else {
      if (!SkipType()) Fail(Peek(), "expected member declaration");
      if (Peek().kind != TokenKind::kIdentifier) {
        Fail(Peek(), "expected member name");
      }
      std::string name = Next().text;
      if (!Peek().Is("(")) {
        SkipField();
        return;
      }
      info.name = name;
    }
    std::size_t open = pos_;
    SkipBalanced();
    info.arity = CountParameters(open, pos_ - 1);
    while (Peek().Is("[") && Peek(1).Is("]")) {
      Next();
      Next();
    }
    info.throws_begin = pos_;
    if (Accept("throws")) {
      while (Peek().kind != TokenKind::kEnd && !Peek().Is("{") &&
             !Peek().Is(";")) {
        Next();
      }
    }
    info.sig_end = pos_;
    if (Accept("default")) {  // annotation element default
      SkipUntil(";");
    }
    if (Peek().Is("{")) {
      info.body_open = pos_;
      SkipBalanced();
      info.body_close = pos_ - 1;
    } else {
      Expect(";");
    }
    info.end = pos_;
    outline_.methods.push_back(std::move(info));
  }

  void SkipField() {
    while (Peek().kind != TokenKind::kEnd && !Peek().Is(";")) {
      if (Peek().Is("(") || Peek().Is("{") || Peek().Is("[")) {
        SkipBalanced();
      } else {
        Next();
      }
    }
    Expect(";");
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
  UnitOutline outline_;
};

std::string CleanJavadoc(std::string_view raw) {
  std::string_view inner = raw;
  if (inner.starts_with("/**")) inner.remove_prefix(3);
  if (inner.ends_with("*/")) inner.remove_suffix(2);
  std::string joined;
  for (const std::string& line : SplitLines(inner)) {
    std::string_view l = Trim(line);
    while (!l.empty() && l.front() == '*') l.remove_prefix(1);
    joined.append(l);
    joined.push_back(' ');
  }
  return CollapseWhitespace(joined);
}

}  // namespace

const std::vector<std::string>& AssertionSet::StandardNames() {
  static const std::vector<std::string> kNames = {
      "assertEquals", "assertNotNull", "assertNull",  "assertSame",
      "assertNotSame", "assertTrue",   "assertFalse",
  };
  return kNames;
}

AssertionSet::AssertionSet() : names_(StandardNames()) {}

AssertionSet::AssertionSet(std::vector<std::string> extra)
    : names_(StandardNames()) {
  for (auto& name : extra) {
    if (!Contains(name)) names_.push_back(std::move(name));
  }
}

bool AssertionSet::Contains(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

TestClass ParseTestClass(const SourceUnit& unit, const ParseOptions& options) {
  LexResult lexed = Lex(unit.body);
  UnitOutline outline = OutlineParser(lexed).Run();
  TestClass result;
  result.package_name = outline.package_name;
  result.imports = outline.imports;
  if (!outline.types.empty()) result.name = outline.types.front();
  for (const MethodInfo& info : outline.methods) {
    bool is_test = std::any_of(
        info.annotations.begin(), info.annotations.end(),
        [](const AnnotationInfo& a) { return a.simple_name == "Test"; });
    if (!is_test || info.body_open == 0) continue;
    TestMethod method;
    method.name = info.name;
    for (const auto& a : info.annotations) method.annotations.push_back(a.text);
    method.throws_clause =
        CanonicalText(lexed.tokens, info.throws_begin, info.sig_end);
    try {
      internal::StatementParser parser(lexed.tokens, options, info.body_open + 1);
      method.statements = parser.ParseBlockBody();
      if (parser.pos() != info.body_close) {
        const Token& tok = lexed.tokens[parser.pos()];
        throw SourceError(ErrorCode::kParseError, "unexpected token", tok.line,
                          tok.column, tok.text);
      }
    } catch (const SourceError& e) {
      if (!options.skip_unparsable_methods) throw;
      result.skipped.push_back(info.name + ": " + e.what());
      continue;
    }
    const Token& open = lexed.tokens[info.body_open];
    const Token& close = lexed.tokens[info.body_close];
    method.body_span = SourceSpan{open.end(), close.offset, open.line,
                                  open.column + 1};
    result.methods.push_back(std::move(method));
  }
  return result;
}

std::vector<TestMethod> ParseTestMethods(const SourceUnit& unit,
                                         const ParseOptions& options) {
  return ParseTestClass(unit, options).methods;
}

std::vector<Statement> ParseStatements(std::string_view text,
                                       const ParseOptions& options) {
  LexResult lexed = Lex(text);
  return internal::ParseAllStatements(lexed.tokens, options);
}

Statement ParseStatement(std::string_view text, const ParseOptions& options) {
  LexResult lexed = Lex(text);
  internal::StatementParser parser(lexed.tokens, options);
  if (lexed.tokens.front().kind == TokenKind::kEnd) {
    throw SourceError(ErrorCode::kParseError, "empty statement", 1, 1, "<end>");
  }
  Statement stmt = parser.ParseOne();
  const Token& rest = lexed.tokens[parser.pos()];
  if (rest.kind != TokenKind::kEnd) {
    throw SourceError(ErrorCode::kParseError, "trailing tokens after statement",
                      rest.line, rest.column, rest.text);
  }
  return stmt;
}

std::vector<ExceptionScaffold> FindExceptionScaffolds(
    std::span<const Statement> statements) {
  std::vector<ExceptionScaffold> out;
  for (std::size_t i = 0; i < statements.size(); ++i) {
    const Statement& stmt = statements[i];
    if (stmt.kind != StatementKind::kTryCatch) continue;
    bool has_fail = std::any_of(
        stmt.try_body.begin(), stmt.try_body.end(),
        [](const Statement& s) { return s.kind == StatementKind::kFailCall; });
    if (!has_fail) continue;
    if (stmt.catches.size() != 1) {
      throw Error(ErrorCode::kMalformedScaffold,
                  "try with fail call has " +
                      std::to_string(stmt.catches.size()) +
                      " catch clauses at line " + std::to_string(stmt.span.line));
    }
    if (stmt.catches.front().types.size() != 1) {
      throw Error(ErrorCode::kMalformedScaffold,
                  "multi-type catch in scaffold at line " +
                      std::to_string(stmt.span.line));
    }
    if (stmt.has_finally) {
      throw Error(ErrorCode::kMalformedScaffold,
                  "finally block in scaffold at line " +
                      std::to_string(stmt.span.line));
    }
    if (stmt.try_body.back().kind != StatementKind::kFailCall) {
      throw Error(ErrorCode::kMalformedScaffold,
                  "fail call is not the last try statement at line " +
                      std::to_string(stmt.span.line));
    }
    ExceptionScaffold scaffold;
    scaffold.pre_statements.assign(stmt.try_body.begin(),
                                   stmt.try_body.end() - 1);
    scaffold.expected_type = stmt.catches.front().types.front();
    scaffold.verify_statements = stmt.catches.front().body;
    scaffold.statement_index = i;
    out.push_back(std::move(scaffold));
  }
  return out;
}

std::optional<ExceptionScaffold> DetectExceptionScaffold(
    std::span<const Statement> statements) {
  std::vector<ExceptionScaffold> all = FindExceptionScaffolds(statements);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

MutRecord ExtractMut(const SourceUnit& unit, std::string_view method_name,
                     std::optional<int> arity) {
  LexResult lexed = Lex(unit.body);
  UnitOutline outline = OutlineParser(lexed).Run();
  std::vector<const MethodInfo*> matches;
  for (const MethodInfo& info : outline.methods) {
    if (info.name != method_name) continue;
    if (arity.has_value() && info.arity != *arity) continue;
    matches.push_back(&info);
  }
  if (matches.empty()) {
    throw Error(ErrorCode::kNotFound, "method '" + std::string(method_name) +
                                          "' not found in " + unit.path);
  }
  if (matches.size() > 1) {
    throw Error(ErrorCode::kAmbiguous,
                std::to_string(matches.size()) + " declarations of '" +
                    std::string(method_name) + "' in " + unit.path);
  }
  const MethodInfo& info = *matches.front();
  const auto& toks = lexed.tokens;
  MutRecord record;
  record.signature = CanonicalText(toks, info.sig_begin, info.sig_end);
  std::size_t begin = toks[info.decl_begin].offset;
  std::size_t end = toks[info.end - 1].end();
  record.full_text = unit.body.substr(begin, end - begin);

  std::size_t gap_start =
      info.decl_begin == 0 ? 0 : toks[info.decl_begin - 1].end();
  const Comment* nearest = nullptr;
  for (const Comment& c : lexed.comments) {
    if (c.offset >= gap_start && c.offset + c.length <= begin) nearest = &c;
  }
  if (nearest != nullptr && nearest->is_doc) {
    record.javadoc =
        CleanJavadoc(std::string_view(unit.body).substr(nearest->offset,
                                                        nearest->length));
  }
  return record;
}

std::vector<MethodDecl> ListMethods(const SourceUnit& unit) {
  LexResult lexed = Lex(unit.body);
  UnitOutline outline = OutlineParser(lexed).Run();
  std::vector<MethodDecl> out;
  for (const MethodInfo& info : outline.methods) {
    out.push_back(MethodDecl{info.name, info.arity, info.is_constructor,
                             info.owner});
  }
  return out;
}

std::vector<std::string> ListTypes(const SourceUnit& unit) {
  LexResult lexed = Lex(unit.body);
  return OutlineParser(lexed).Run().types;
}

}  // namespace oraclekit::jparse
