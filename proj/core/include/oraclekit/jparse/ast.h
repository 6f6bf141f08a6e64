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

#ifndef ORACLEKIT_JPARSE_AST_H_
#define ORACLEKIT_JPARSE_AST_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oraclekit::jparse {

struct SourceUnit {
  std::string path;
  std::string body;  // UTF-8 source text
};

enum class StatementKind {
  kDeclaration,
  kCall,
  kAssertionCall,
  kTryCatch,
  kFailCall,
  kOther,
};

std::string_view StatementKindName(StatementKind kind);

struct SourceSpan {
  std::size_t begin = 0;  // byte offsets into the parsed text
  std::size_t end = 0;
  int line = 0;
  int column = 0;
};

// One invocation found while parsing a statement; constructors carry the
// simple name of the instantiated type.
struct CallSite {
  std::string name;
  int arity = 0;
  bool is_constructor = false;
};

struct CatchClause;

struct Statement {
  // Tokens of the statement joined with single spaces where the source had
  // whitespace; comments removed.
  std::string text;
  StatementKind kind = StatementKind::kOther;
  std::vector<std::string> defined_vars;
  std::vector<std::string> used_vars;
  // Declared type for kDeclaration, including array dimensions.
  std::string declared_type;
  // Simple name of the top-level invocation for call, assertion and fail.
  std::string callee;
  std::vector<CallSite> calls;
  SourceSpan span;

  // Populated for kTryCatch only.
  std::vector<Statement> try_body;
  std::vector<CatchClause> catches;
  std::vector<Statement> finally_body;
  bool has_finally = false;
};

struct CatchClause {
  std::vector<std::string> types;  // more than one for multi-catch
  std::string variable;
  std::vector<Statement> body;
};

struct TestMethod {
  std::string name;
  std::vector<std::string> annotations;  // canonical text, e.g. "@Test(timeout = 4000)"
  std::string throws_clause;             // e.g. "throws Throwable"; may be empty
  std::vector<Statement> statements;
  SourceSpan body_span;  // between the braces, exclusive
};

struct TestClass {
  std::string package_name;
  std::string name;
  std::vector<std::string> imports;  // canonical import declarations
  std::vector<TestMethod> methods;
  // "<method>: <reason>" for bodies skipped under skip_unparsable_methods.
  std::vector<std::string> skipped;

  std::string QualifiedName() const {
    return package_name.empty() ? name : package_name + "." + name;
  }
};

struct ExceptionScaffold {
  std::vector<Statement> pre_statements;
  std::string expected_type;
  std::vector<Statement> verify_statements;
  std::size_t statement_index = 0;  // position of the try in its method
};

struct MutRecord {
  std::string signature;
  std::string full_text;
  std::optional<std::string> javadoc;

  bool empty() const { return signature.empty() && full_text.empty(); }
};

// Header facts about a method or constructor declared in a source unit.
struct MethodDecl {
  std::string name;
  int arity = 0;
  bool is_constructor = false;
  std::string owner;  // simple name of the enclosing type
};

}  // namespace oraclekit::jparse

#endif  // ORACLEKIT_JPARSE_AST_H_
