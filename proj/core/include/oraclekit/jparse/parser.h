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

#ifndef ORACLEKIT_JPARSE_PARSER_H_
#define ORACLEKIT_JPARSE_PARSER_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oraclekit/jparse/ast.h"

namespace oraclekit::jparse {

// Names whose invocation is classified as an assertion oracle.
class AssertionSet {
 public:
  // assertEquals, assertNotNull, assertNull, assertSame, assertNotSame,
  // assertTrue, assertFalse.
  static const std::vector<std::string>& StandardNames();

  AssertionSet();
  explicit AssertionSet(std::vector<std::string> extra);

  bool Contains(std::string_view name) const;
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
};

struct ParseOptions {
  AssertionSet assertions;
  // ParseTestClass records a test method whose body fails to parse in
  // TestClass::skipped instead of throwing.
  bool skip_unparsable_methods = false;
};

// Parses a test class written in the supported Java subset: local variable
// declarations, expression statements (calls, assignments, object and array
// creation, casts, literals, simple generics) and try/catch/finally. Loops,
// conditionals, returns, lambdas, anonymous classes and similar constructs
// raise SourceError(kUnsupportedConstruct); malformed syntax raises
// SourceError(kParseError). Only methods annotated @Test have their bodies
// parsed; every other member is skipped by brace matching.
TestClass ParseTestClass(const SourceUnit& unit,
                         const ParseOptions& options = {});

std::vector<TestMethod> ParseTestMethods(const SourceUnit& unit,
                                         const ParseOptions& options = {});

// Parses a sequence of block statements (a method body without its braces).
std::vector<Statement> ParseStatements(std::string_view text,
                                       const ParseOptions& options = {});

// Parses exactly one statement; trailing tokens are a parse error.
Statement ParseStatement(std::string_view text,
                         const ParseOptions& options = {});

// All try/fail/catch scaffolds among the top-level statements, in order.
// Throws Error(kMalformedScaffold) when a try holding a fail call lacks
// exactly one single-type catch clause, has a finally block, or does not end
// its body with the fail call.
std::vector<ExceptionScaffold> FindExceptionScaffolds(
    std::span<const Statement> statements);

// First scaffold in the method, if any.
std::optional<ExceptionScaffold> DetectExceptionScaffold(
    std::span<const Statement> statements);

// Locates a method or constructor by simple name. `arity` disambiguates
// overloads. Throws Error(kNotFound) or Error(kAmbiguous).
MutRecord ExtractMut(const SourceUnit& unit, std::string_view method_name,
                     std::optional<int> arity = std::nullopt);

// Every method and constructor header in the unit, nested types included.
std::vector<MethodDecl> ListMethods(const SourceUnit& unit);

// Simple names of the top-level and nested types declared in the unit.
std::vector<std::string> ListTypes(const SourceUnit& unit);

}  // namespace oraclekit::jparse

#endif  // ORACLEKIT_JPARSE_PARSER_H_
