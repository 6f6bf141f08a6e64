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

#ifndef ORACLEKIT_METRICS_SUCCESS_H_
#define ORACLEKIT_METRICS_SUCCESS_H_

#include <cstdint>
#include <string>

#include "oraclekit/verdict/verdict.h"

namespace oraclekit::metrics {

// An exact, unreduced fraction.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double Value() const { return static_cast<double>(num) / static_cast<double>(den); }
  // Percentage with `decimals` digits, e.g. "60.0%".
  std::string Percent(int decimals = 1) const;

  // Equal as rational numbers (3/6 == 1/2).
  friend bool operator==(const Ratio& a, const Ratio& b) {
    return static_cast<__int128>(a.num) * b.den ==
           static_cast<__int128>(b.num) * a.den;
  }
};

// (T - (T_ce + T_fp + T_em)) / T. Throws Error(kDomainError) unless T > 0,
// every count is non-negative and T_ce + T_fp + T_em <= T.
Ratio SuccessRate(const verdict::VerdictCounts& counts);

}  // namespace oraclekit::metrics

#endif  // ORACLEKIT_METRICS_SUCCESS_H_
