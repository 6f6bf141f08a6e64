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

// Parsing throughput on synthetic generated test classes.

#include <string>

#include <benchmark/benchmark.h>

#include "oraclekit/decompose/decompose.h"
#include "oraclekit/jparse/lexer.h"
#include "oraclekit/jparse/parser.h"

namespace oraclekit {
namespace {

std::string SyntheticTestClass(int tests) {
  std::string src =
      "package com.example;\n\nimport org.junit.Test;\nimport static org.junit.Assert.*;\n\n"
      "public class Stack_ESTest {\n";
  for (int i = 0; i < tests; ++i) {
    std::string n = std::to_string(i);
    src += "  @Test(timeout = 4000)\n  public void test" + n + "() throws Throwable {\n";
    src += "    Stack<Integer> s" + n + " = new Stack<Integer>(" + n + ");\n";
    src += "    s" + n + ".push(Integer.valueOf(" + n + "));\n";
    src += "    int r = s" + n + ".pop();\n";
    src += "    assertEquals(" + n + ", r);\n";
    src += "    try {\n      s" + n + ".pop();\n      fail(\"Expecting exception\");\n";
    src += "    } catch (RuntimeException e) {\n      verifyException(\"Stack\", e);\n    }\n  }\n";
  }
  return src + "}\n";
}

void BM_ParseTestClass(benchmark::State& state) {
  jparse::SourceUnit unit{"Stack_ESTest.java", SyntheticTestClass(static_cast<int>(state.range(0)))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(jparse::ParseTestClass(unit));
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(unit.body.size()));
}
BENCHMARK(BM_ParseTestClass)->Arg(10)->Arg(100)->Arg(1000);

void BM_DecomposeTest(benchmark::State& state) {
  jparse::SourceUnit unit{"Stack_ESTest.java", SyntheticTestClass(1)};
  jparse::TestMethod method = jparse::ParseTestClass(unit).methods.at(0);
  jparse::MutRecord mut;
  mut.signature = "public T pop()";
  mut.full_text = "public T pop() { return items.remove(items.size() - 1); }";
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose::DecomposeTest(method, mut, "bench", "com.example.Stack_ESTest"));
  }
}
BENCHMARK(BM_DecomposeTest);

void BM_NormalizeCode(benchmark::State& state) {
  const std::string text = "assertEquals( 3 ,  stack0.size( ) ) ;  // trailing\n";
  for (auto _ : state) benchmark::DoNotOptimize(jparse::NormalizeCode(text));
}
BENCHMARK(BM_NormalizeCode);

}  // namespace
}  // namespace oraclekit
