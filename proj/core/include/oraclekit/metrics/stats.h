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

#ifndef ORACLEKIT_METRICS_STATS_H_
#define ORACLEKIT_METRICS_STATS_H_

#include <span>

namespace oraclekit::metrics {

struct RankSumResult {
  double u = 0.0;  // U of sample A over sample B
  double z = 0.0;
  double p = 1.0;  // two-sided
  // Every value in both samples is identical; p is reported as 1.
  bool degenerate = false;
};

// Mann-Whitney U with midranks for ties: U = R_A - n_A (n_A + 1) / 2, which
// counts pairs with a > b plus half the tied pairs. p uses the normal
// approximation with tie and continuity corrections. Throws
// Error(kDomainError) when a sample is empty or holds a non-finite value.
RankSumResult RankSumU(std::span<const double> a, std::span<const double> b);

struct WelchResult {
  double t = 0.0;
  double df = 0.0;  // Welch-Satterthwaite
  double p = 1.0;   // two-sided, Student t with df degrees of freedom
  // Both samples have zero variance; t is 0 (equal means) or infinite.
  bool degenerate = false;
};

// Throws Error(kDomainError) when a sample has fewer than two values or holds
// a non-finite value.
WelchResult WelchT(std::span<const double> a, std::span<const double> b);

}  // namespace oraclekit::metrics

#endif  // ORACLEKIT_METRICS_STATS_H_
