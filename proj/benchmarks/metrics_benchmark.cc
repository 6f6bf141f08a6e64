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

// Kill-set algebra and rank statistics at table scale.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <benchmark/benchmark.h>

#include "oraclekit/metrics/kills.h"
#include "oraclekit/metrics/stats.h"

namespace oraclekit {
namespace {

void BM_KillAlgebra(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::set<std::int64_t> gen, orig, implicit;
  for (std::int64_t id = 0; id < state.range(0); ++id) {
    if (rng() % 5 == 0) gen.insert(id);
    if (rng() % 4 == 0) orig.insert(id);
    if (rng() % 20 == 0) implicit.insert(id);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(metrics::KillAlgebra(gen, orig, implicit));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_KillAlgebra)->Arg(1000)->Arg(70000);

std::vector<double> Sample(std::size_t n, double shift, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(shift, 1.0);
  std::vector<double> out(n);
  for (auto& v : out) v = dist(rng);
  return out;
}

void BM_RankSumU(benchmark::State& state) {
  auto a = Sample(static_cast<std::size_t>(state.range(0)), 0.0, 2);
  auto b = Sample(static_cast<std::size_t>(state.range(0)), 0.3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(metrics::RankSumU(a, b));
}
BENCHMARK(BM_RankSumU)->Arg(25)->Arg(1000)->Arg(100000);

void BM_WelchT(benchmark::State& state) {
  auto a = Sample(static_cast<std::size_t>(state.range(0)), 0.0, 4);
  auto b = Sample(static_cast<std::size_t>(state.range(0)), 0.3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(metrics::WelchT(a, b));
}
BENCHMARK(BM_WelchT)->Arg(25)->Arg(100000);

}  // namespace
}  // namespace oraclekit
