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

#include <filesystem>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oraclekit/common/error.h"
#include "oraclekit/common/text.h"
#include "oraclekit/decompose/decompose.h"
#include "oraclekit/integrate/integrate.h"
#include "oraclekit/integrate/suite.h"
#include "oraclekit/jparse/parser.h"
#include "support/test_util.h"

namespace oraclekit::integrate {
namespace {

decompose::OracleSample Sample(const std::string& test, int index, const std::string& prefix,
                               const std::string& cls = "com.example.Stack_ESTest") {
  decompose::OracleSample s;
  s.project_id = "p";
  s.test_class = cls;
  s.test_name = test;
  s.oracle_index = index;
  s.id = decompose::MakeSampleId("p", cls, test, index);
  s.prefix = jparse::ParseStatements(prefix);
  s.ground_truth = decompose::Oracle::Assertion("assertEquals(10, v);");
  return s;
}

TEST(IntegrateTest, AssertionAppendsAfterPrefix) {
  auto s = Sample("test0", 0, "Stack s = new Stack(); s.push(10); int v = s.pop();");
  TestArtifact a = IntegrateAssertion(s, "assertEquals(10, v);");
  EXPECT_EQ(a.kind, ArtifactKind::kAssertion);
  EXPECT_EQ(a.method_name, "test0_000");
  EXPECT_EQ(a.source,
            "  @Test(timeout = 4000)\n"
            "  public void test0_000() throws Throwable {\n"
            "    Stack s = new Stack();\n"
            "    s.push(10);\n"
            "    int v = s.pop();\n"
            "    assertEquals(10, v);\n"
            "  }\n");
  EXPECT_TRUE(a.unknown_vars.empty());
}

TEST(IntegrateTest, UnknownVariableIsFlagged) {
  auto s = Sample("test0", 0, "int v = 1;");
  TestArtifact a = IntegrateAssertion(s, "assertEquals(v, w);");
  EXPECT_EQ(a.unknown_vars, std::vector<std::string>{"w"});
}

TEST(IntegrateTest, RejectsEmptyOrNonAssertionText) {
  auto s = Sample("test0", 0, "int v = 1;");
  for (const char* text : {"", "v.toString();", "assertEquals(1 v);"}) {
    try {
      IntegrateAssertion(s, text);
      ADD_FAILURE() << "accepted " << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParseError) << text;
    }
  }
}

TEST(IntegrateTest, ExceptionWrapsLastStatement) {
  auto s = Sample("test1", 0, "Stack s = new Stack(); s.pop();");
  TestArtifact a = IntegrateException(s, "EmptyStackException");
  EXPECT_EQ(a.kind, ArtifactKind::kException);
  EXPECT_EQ(a.source,
            "  @Test(timeout = 4000)\n"
            "  public void test1_000() throws Throwable {\n"
            "    Stack s = new Stack();\n"
            "    try {\n"
            "      s.pop();\n"
            "      fail(\"Expecting exception: EmptyStackException\");\n"
            "    } catch (EmptyStackException e) {\n"
            "    }\n"
            "  }\n");
}

TEST(IntegrateTest, ExceptionEdgeCases) {
  auto single = Sample("t", 0, "Stack.make();");
  auto a = IntegrateException(single, "RuntimeException");
  EXPECT_NE(a.source.find("    try {\n      Stack.make();"), std::string::npos);

  auto clash = Sample("t", 0, "Object e = new Object(); e.wait();");
  EXPECT_NE(IntegrateException(clash, "InterruptedException").source.find("catch (InterruptedException e0)"),
            std::string::npos);

  auto empty = Sample("t", 0, "");
  try {
    IntegrateException(empty, "X");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyPrefix);
  }
  try {
    IntegrateException(single, "not a type");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidOracle);
  }
}

TEST(IntegrateTest, PrefixOnlyHasNoOracle) {
  auto s = Sample("t", 2, "Stack s = new Stack(); s.pop();");
  auto a = IntegratePrefixOnly(s);
  EXPECT_EQ(a.kind, ArtifactKind::kPrefixOnly);
  EXPECT_EQ(a.method_name, "t_002");
  EXPECT_EQ(a.source.find("assert"), std::string::npos);
  EXPECT_EQ(a.source.find("try"), std::string::npos);
}

TEST(IntegrateTest, NameHelpers) {
  EXPECT_EQ(SimpleClassName("com.example.Stack_ESTest"), "Stack_ESTest");
  EXPECT_EQ(PackageName("com.example.Stack_ESTest"), "com.example");
  EXPECT_EQ(PackageName("Top"), "");
}

SuiteSpec FiveSampleSpec(SuiteLabel label, bool one_invalid) {
  SuiteSpec spec;
  spec.label = label;
  for (int i = 4; i >= 0; --i) {
    SuiteEntry entry{Sample("test" + std::to_string(i), 0, "Foo v = new Foo();"), std::nullopt};
    entry.generated = genclient::ParsedOracle{genclient::ParsedKind::kAssertion, "assertNotNull(v);"};
    if (one_invalid && i == 2) {
      entry.generated = genclient::ParsedOracle{genclient::ParsedKind::kInvalid, "garbage((("};
    }
    spec.entries.push_back(std::move(entry));
  }
  spec.imports_by_class["com.example.Stack_ESTest"] = {"import java.util.Stack;"};
  return spec;
}

int CountOccurrences(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

TEST(SuiteTest, GenSuiteWithFiveAssertions) {
  auto out = BuildSuite(FiveSampleSpec(SuiteLabel::kGen, false));
  ASSERT_EQ(out.files.size(), 1u);
  const auto& [path, source] = *out.files.begin();
  EXPECT_EQ(path, "com/example/Stack_ESTest_GEN.java");
  EXPECT_EQ(CountOccurrences(source, "@Test"), 5);
  EXPECT_EQ(source.rfind("package com.example;\n", 0), 0u);
  EXPECT_NE(source.find("import java.util.Stack;"), std::string::npos);
  EXPECT_NE(source.find("public class Stack_ESTest_GEN {"), std::string::npos);
  ASSERT_EQ(out.manifest.size(), 5u);
  EXPECT_LT(out.manifest[0].id, out.manifest[1].id);
  EXPECT_EQ(out.manifest[0].kind, "assertion");
  EXPECT_EQ(out.manifest[0].method, "test0_000");
}

TEST(SuiteTest, ImplicitSuiteHasNoAssertions) {
  auto out = BuildSuite(FiveSampleSpec(SuiteLabel::kImplicit, false));
  const std::string& source = out.files.begin()->second;
  EXPECT_EQ(CountOccurrences(source, "@Test"), 5);
  EXPECT_EQ(CountOccurrences(source, "assertNotNull("), 0);
  for (const auto& row : out.manifest) EXPECT_EQ(row.kind, "prefixOnly");
}

TEST(SuiteTest, InvalidOracleBecomesErrorRow) {
  auto out = BuildSuite(FiveSampleSpec(SuiteLabel::kGen, true));
  EXPECT_EQ(CountOccurrences(out.files.begin()->second, "@Test"), 4);
  ASSERT_EQ(out.manifest.size(), 5u);
  int errors = 0;
  for (const auto& row : out.manifest) {
    if (!row.error.empty()) {
      ++errors;
      EXPECT_EQ(row.kind, "invalid");
      EXPECT_TRUE(row.file.empty());
    }
  }
  EXPECT_EQ(errors, 1);
}

TEST(SuiteTest, MissingGenerationIsErrorRow) {
  auto spec = FiveSampleSpec(SuiteLabel::kGen, false);
  spec.entries[0].generated.reset();
  spec.entries[1].generated = genclient::ParsedOracle{genclient::ParsedKind::kEmpty, ""};
  auto out = BuildSuite(spec);
  std::vector<std::string> kinds;
  for (const auto& row : out.manifest) {
    if (!row.error.empty()) kinds.push_back(row.kind);
  }
  std::sort(kinds.begin(), kinds.end());
  EXPECT_EQ(kinds, (std::vector<std::string>{"empty", "missing"}));
}

TEST(SuiteTest, EmitWritesFilesAndManifest) {
  testing::TempDir dir;
  auto spec = FiveSampleSpec(SuiteLabel::kOrig, false);
  spec.output_dir = dir.Path();
  auto out = EmitSuite(spec);
  EXPECT_TRUE(std::filesystem::exists(dir.Path("com/example/Stack_ESTest_ORIG.java")));
  std::string manifest = ReadFile(dir.Path(ManifestFileName(SuiteLabel::kOrig)));
  EXPECT_EQ(ParseManifestJsonl(manifest), out.manifest);
  EXPECT_EQ(ManifestToJsonl(out.manifest), manifest);
  EXPECT_THROW(ParseManifestJsonl("{\"id\":\"x\"}\n"), SchemaError);
}

TEST(SuiteTest, LabelNames) {
  EXPECT_EQ(SuiteLabelName(SuiteLabel::kImplicit), "IMPLICIT");
  EXPECT_EQ(ParseSuiteLabel("gen"), SuiteLabel::kGen);
  EXPECT_FALSE(ParseSuiteLabel("other").has_value());
}

// Integrating a sample's own oracle and decomposing again gives the sample.
TEST(RoundTripTest, GroundTruthSurvivesIntegrateParseDecompose) {
  const char* bodies[] = {
      "Stack s = new Stack(); s.push(10); int v = s.pop(); assertEquals(10, v);"
      " assertTrue(s.isEmpty());",
      "Stack stack = new Stack(); try { stack.pop(); fail(\"Expecting exception: E\"); }"
      " catch (EmptyStackException e) { verifyException(\"Stack\", e); }",
  };
  for (const char* body : bodies) {
    jparse::TestMethod m;
    m.name = "test7";
    m.statements = jparse::ParseStatements(body);
    for (const auto& sample : decompose::DecomposeTest(m, {}, "p", "pkg.C")) {
      auto artifact = IntegrateGroundTruth(sample);
      std::string cls = "package pkg;\nclass C {\n" + artifact.source + "}\n";
      auto methods = jparse::ParseTestMethods({"C.java", cls});
      ASSERT_EQ(methods.size(), 1u);
      auto again = decompose::DecomposeTest(methods[0], {}, "p", "pkg.C");
      ASSERT_EQ(again.size(), 1u);
      EXPECT_EQ(again[0].PrefixTexts(), sample.PrefixTexts());
      EXPECT_EQ(again[0].ground_truth, sample.ground_truth);
    }
  }
}

}  // namespace
}  // namespace oraclekit::integrate
