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

#ifndef ORACLEKIT_METRICS_KILLS_H_
#define ORACLEKIT_METRICS_KILLS_H_

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <set>
#include <string>

#include "oraclekit/verdict/pit.h"

namespace oraclekit::metrics {

struct KillAlgebraResult {
  std::int64_t total_gen = 0;
  std::int64_t total_orig = 0;
  std::int64_t unique_gen = 0;
  std::int64_t unique_orig = 0;
  std::int64_t overlap = 0;
  friend bool operator==(const KillAlgebraResult&, const KillAlgebraResult&) = default;
};

// Effective kills E_X = K_X \ K_implicit; totals |E_gen|, |E_orig|, unique
// kills the one-sided differences and overlap the intersection.
template <class Key>
KillAlgebraResult KillAlgebra(const std::set<Key>& gen, const std::set<Key>& orig,
                              const std::set<Key>& implicit) {
  std::set<Key> effective_gen;
  std::set<Key> effective_orig;
  std::set_difference(gen.begin(), gen.end(), implicit.begin(), implicit.end(),
                      std::inserter(effective_gen, effective_gen.end()));
  std::set_difference(orig.begin(), orig.end(), implicit.begin(), implicit.end(),
                      std::inserter(effective_orig, effective_orig.end()));
  std::int64_t overlap = 0;
  for (const Key& key : effective_gen) overlap += effective_orig.count(key);

  KillAlgebraResult result;
  result.total_gen = static_cast<std::int64_t>(effective_gen.size());
  result.total_orig = static_cast<std::int64_t>(effective_orig.size());
  result.overlap = overlap;
  result.unique_gen = result.total_gen - overlap;
  result.unique_orig = result.total_orig - overlap;
  return result;
}

// Uses the "GEN", "ORIG" and "IMPLICIT" suites of the matrix. Throws
// Error(kKeyMismatch) when one is missing.
KillAlgebraResult KillAlgebra(const verdict::KillMatrix& matrix);

}  // namespace oraclekit::metrics

#endif  // ORACLEKIT_METRICS_KILLS_H_
