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

#include "oraclekit/metrics/success.h"

#include <cstdio>

#include "oraclekit/common/error.h"

namespace oraclekit::metrics {

std::string Ratio::Percent(int decimals) const {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f%%", decimals, 100.0 * Value());
  return buf;
}

Ratio SuccessRate(const verdict::VerdictCounts& c) {
  if (c.total <= 0) {
    throw Error(ErrorCode::kDomainError, "success rate needs T > 0");
  }
  if (c.compile_errors < 0 || c.false_positives < 0 || c.empty < 0) {
    throw Error(ErrorCode::kDomainError, "negative verdict count");
  }
  std::int64_t failed = c.compile_errors + c.false_positives + c.empty;
  if (failed > c.total) {
    throw Error(ErrorCode::kDomainError,
                "T_ce + T_fp + T_em exceeds T (" + std::to_string(failed) +
                    " > " + std::to_string(c.total) + ")");
  }
  return Ratio{c.total - failed, c.total};
}

}  // namespace oraclekit::metrics
