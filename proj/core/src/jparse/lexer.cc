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

#include "oraclekit/jparse/lexer.h"

#include <algorithm>
#include <array>
#include <cctype>

#include "oraclekit/common/error.h"
#include "oraclekit/common/text.h"

namespace oraclekit::jparse {
namespace {

constexpr std::array<std::string_view, 51> kKeywords = {
    "abstract", "assert",     "boolean",   "break",      "byte",
    "case",     "catch",      "char",      "class",      "const",
    "continue", "default",    "do",        "double",     "else",
    "enum",     "extends",    "final",     "finally",    "float",
    "for",      "goto",       "if",        "implements", "import",
    "instanceof", "int",      "interface", "long",       "native",
    "new",      "package",    "private",   "protected",  "public",
    "return",   "short",      "static",    "strictfp",   "super",
    "switch",   "synchronized", "this",    "throw",      "throws",
    "transient", "try",       "void",      "volatile",   "while",
    "_",
};

constexpr std::array<std::string_view, 8> kPrimitives = {
    "boolean", "byte", "char", "short", "int", "long", "float", "double"};

// Longest first; '>' based operators other than ">=" are deliberately absent.
constexpr std::array<std::string_view, 31> kOperators = {
    "<<=", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=",
    ">=",  "+=",  "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<", "(",
    ")",   "{",   "}",  "[",  "]",  ";",  ",",  ".",  "@",
};

constexpr std::string_view kSingleOperators = "=<>!~?:+-*/&|^%";

bool IsIdentStart(unsigned char c) {
  return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}

bool IsIdentPart(unsigned char c) {
  return IsIdentStart(c) || std::isdigit(c);
}

class Lexer {
 public:
  explicit Lexer(std::string_view source) : src_(source) {}

  LexResult Run() {
    LexResult result;
    bool space = false;
    while (true) {
      space |= SkipTrivia(result.comments);
      if (pos_ >= src_.size()) break;
      Token tok;
      tok.offset = pos_;
      tok.line = line_;
      tok.column = Column();
      tok.space_before = space;
      space = false;
      LexOne(tok);
      tok.length = pos_ - tok.offset;
      tok.text = std::string(src_.substr(tok.offset, tok.length));
      if (tok.kind == TokenKind::kIdentifier && IsJavaKeyword(tok.text)) {
        tok.kind = TokenKind::kKeyword;
      }
      result.tokens.push_back(std::move(tok));
    }
    Token end;
    end.kind = TokenKind::kEnd;
    end.offset = src_.size();
    end.line = line_;
    end.column = Column();
    end.space_before = space;
    result.tokens.push_back(end);
    return result;
  }

 private:
  int Column() const { return static_cast<int>(pos_ - line_start_) + 1; }

  [[noreturn]] void Fail(const std::string& message) const {
    std::string near(src_.substr(pos_, 1));
    throw SourceError(ErrorCode::kParseError, message, line_, Column(), near);
  }

  void Advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      line_start_ = pos_ + 1;
    }
    ++pos_;
  }

  bool SkipTrivia(std::vector<Comment>& comments) {
    bool skipped = false;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f') {
        Advance();
        skipped = true;
      } else if (src_.substr(pos_, 2) == "//") {
        Comment comment{pos_, 0, line_, false};
        while (pos_ < src_.size() && src_[pos_] != '\n') Advance();
        comment.length = pos_ - comment.offset;
        comments.push_back(comment);
        skipped = true;
      } else if (src_.substr(pos_, 2) == "/*") {
        Comment comment{pos_, 0, line_, false};
        comment.is_doc = src_.substr(pos_, 3) == "/**" &&
                         src_.substr(pos_, 4) != "/**/";
        std::size_t close = src_.find("*/", pos_ + 2);
        if (close == std::string_view::npos) Fail("unterminated comment");
        while (pos_ < close + 2) Advance();
        comment.length = pos_ - comment.offset;
        comments.push_back(comment);
        skipped = true;
      } else {
        break;
      }
    }
    return skipped;
  }

  void LexOne(Token& tok) {
    unsigned char c = static_cast<unsigned char>(src_[pos_]);
    if (IsIdentStart(c)) {
      while (pos_ < src_.size() &&
             IsIdentPart(static_cast<unsigned char>(src_[pos_]))) {
        Advance();
      }
      tok.kind = TokenKind::kIdentifier;
      return;
    }
    if (std::isdigit(c) ||
        (c == '.' && pos_ + 1 < src_.size() &&
         std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
      LexNumber(tok);
      return;
    }
    if (c == '"') {
      LexString(tok);
      return;
    }
    if (c == '\'') {
      LexChar(tok);
      return;
    }
    for (std::string_view op : kOperators) {
      if (src_.substr(pos_, op.size()) == op) {
        for (std::size_t i = 0; i < op.size(); ++i) Advance();
        tok.kind = TokenKind::kOperator;
        return;
      }
    }
    if (kSingleOperators.find(static_cast<char>(c)) != std::string_view::npos) {
      Advance();
      tok.kind = TokenKind::kOperator;
      return;
    }
    Fail("unexpected character");
  }

  void LexNumber(Token& tok) {
    bool is_float = false;
    auto digits = [&](auto pred) {
      while (pos_ < src_.size() &&
             (pred(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_')) {
        Advance();
      }
    };
    auto is_dec = [](unsigned char ch) { return std::isdigit(ch) != 0; };
    if (src_[pos_] == '0' && pos_ + 1 < src_.size() &&
        (src_[pos_ + 1] == 'x' || src_[pos_ + 1] == 'X')) {
      Advance();
      Advance();
      digits([](unsigned char ch) { return std::isxdigit(ch) != 0; });
    } else if (src_[pos_] == '0' && pos_ + 1 < src_.size() &&
               (src_[pos_ + 1] == 'b' || src_[pos_ + 1] == 'B')) {
      Advance();
      Advance();
      digits([](unsigned char ch) { return ch == '0' || ch == '1'; });
    } else {
      digits(is_dec);
      if (pos_ < src_.size() && src_[pos_] == '.' &&
          !(pos_ + 1 < src_.size() && src_[pos_ + 1] == '.')) {
        is_float = true;
        Advance();
        digits(is_dec);
      }
      if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
        is_float = true;
        Advance();
        if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
          Advance();
        }
        std::size_t before = pos_;
        digits(is_dec);
        if (pos_ == before) Fail("malformed exponent");
      }
    }
    if (pos_ < src_.size()) {
      char s = src_[pos_];
      if (s == 'f' || s == 'F' || s == 'd' || s == 'D') {
        is_float = true;
        Advance();
      } else if (s == 'l' || s == 'L') {
        Advance();
      }
    }
    if (pos_ < src_.size() &&
        IsIdentPart(static_cast<unsigned char>(src_[pos_]))) {
      Fail("malformed numeric literal");
    }
    tok.kind = is_float ? TokenKind::kFloatLiteral : TokenKind::kIntLiteral;
  }

  void LexString(Token& tok) {
    tok.kind = TokenKind::kStringLiteral;
    if (src_.substr(pos_, 3) == "\"\"\"") {
      std::size_t close = src_.find("\"\"\"", pos_ + 3);
      if (close == std::string_view::npos) Fail("unterminated text block");
      while (pos_ < close + 3) Advance();
      return;
    }
    Advance();
    while (true) {
      if (pos_ >= src_.size() || src_[pos_] == '\n') {
        Fail("unterminated string literal");
      }
      if (src_[pos_] == '\\') {
        Advance();
        if (pos_ >= src_.size()) Fail("unterminated string literal");
        Advance();
        continue;
      }
      if (src_[pos_] == '"') {
        Advance();
        return;
      }
      Advance();
    }
  }

  void LexChar(Token& tok) {
    tok.kind = TokenKind::kCharLiteral;
    Advance();
    std::size_t content = 0;
    while (true) {
      if (pos_ >= src_.size() || src_[pos_] == '\n') {
        Fail("unterminated character literal");
      }
      if (src_[pos_] == '\\') {
        Advance();
        if (pos_ >= src_.size()) Fail("unterminated character literal");
        Advance();
        ++content;
        continue;
      }
      if (src_[pos_] == '\'') {
        if (content == 0) Fail("empty character literal");
        Advance();
        return;
      }
      Advance();
      ++content;
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::size_t line_start_ = 0;
};

bool IsWordLike(const Token& tok) {
  return tok.kind == TokenKind::kIdentifier || tok.kind == TokenKind::kKeyword ||
         tok.kind == TokenKind::kIntLiteral ||
         tok.kind == TokenKind::kFloatLiteral;
}

bool IsFusingOperator(const Token& tok) {
  if (tok.kind != TokenKind::kOperator) return false;
  return tok.text.find_first_of("=<>!~?:+-*/&|^%.") != std::string::npos;
}

}  // namespace

LexResult Lex(std::string_view source) { return Lexer(source).Run(); }

std::string CanonicalText(const std::vector<Token>& tokens, std::size_t begin,
                          std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end && i < tokens.size(); ++i) {
    if (tokens[i].kind == TokenKind::kEnd) break;
    if (i > begin && tokens[i].space_before) out.push_back(' ');
    out.append(tokens[i].text);
  }
  return out;
}

std::string NormalizeCode(std::string_view text) {
  LexResult lexed;
  try {
    lexed = Lex(text);
  } catch (const Error&) {
    return CollapseWhitespace(text);
  }
  std::string out;
  const Token* prev = nullptr;
  for (const Token& tok : lexed.tokens) {
    if (tok.kind == TokenKind::kEnd) break;
    if (prev != nullptr && ((IsWordLike(*prev) && IsWordLike(tok)) ||
                            (IsFusingOperator(*prev) && IsFusingOperator(tok)))) {
      out.push_back(' ');
    }
    out.append(tok.text);
    prev = &tok;
  }
  return out;
}

bool IsJavaKeyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

bool IsPrimitiveType(std::string_view word) {
  return std::find(kPrimitives.begin(), kPrimitives.end(), word) !=
         kPrimitives.end();
}

}  // namespace oraclekit::jparse
