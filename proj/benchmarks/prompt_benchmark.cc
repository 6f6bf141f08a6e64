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

// Prompt assembly and format selection under the token budget.

#include <string>

#include <benchmark/benchmark.h>

#include "oraclekit/jparse/parser.h"
#include "oraclekit/prompt/prompt.h"

namespace oraclekit {
namespace {

decompose::OracleSample MakeSample(int body_lines) {
  decompose::OracleSample s;
  s.id = "bench:C:test00:000";
  s.prefix = jparse::ParseStatements(
      "Stack<Integer> s = new Stack<Integer>(3); s.push(1); s.push(2); int r = s.pop();");
  s.mut.signature = "public T pop()";
  s.mut.javadoc = "Removes and returns the top element.\n@return the element on top";
  s.mut.full_text = "public T pop() {\n";
  for (int i = 0; i < body_lines; ++i) s.mut.full_text += "  checkInvariant(size, capacity);\n";
  s.mut.full_text += "  return items.remove(items.size() - 1);\n}";
  return s;
}

void BM_BuildPromptP6(benchmark::State& state) {
  auto sample = MakeSample(static_cast<int>(state.range(0)));
  prompt::PromptConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(prompt::BuildPrompt(sample, prompt::PromptFormat::kP6, config));
  }
}
BENCHMARK(BM_BuildPromptP6)->Arg(5)->Arg(200);

void BM_SelectFormatWithFallback(benchmark::State& state) {
  auto sample = MakeSample(static_cast<int>(state.range(0)));
  prompt::PromptConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(prompt::SelectFormatWithFallback(sample, config));
  }
}
BENCHMARK(BM_SelectFormatWithFallback)->Arg(5)->Arg(200);

}  // namespace
}  // namespace oraclekit
