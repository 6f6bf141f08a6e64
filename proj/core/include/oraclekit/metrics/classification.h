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

#ifndef ORACLEKIT_METRICS_CLASSIFICATION_H_
#define ORACLEKIT_METRICS_CLASSIFICATION_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace oraclekit::metrics {

enum class OracleClass { kAssertion = 0, kException = 1 };

std::string_view OracleClassName(OracleClass c);
std::optional<OracleClass> ParseOracleClass(std::string_view name);

struct ConfusionMatrix {
  // counts[predicted][actual]
  std::array<std::array<std::int64_t, 2>, 2> counts{};

  void Add(OracleClass predicted, OracleClass actual, std::int64_t n = 1);
  std::int64_t At(OracleClass predicted, OracleClass actual) const;
  std::int64_t Total() const;
};

struct ClassMetrics {
  double precision = 0.0;  // 0 when nothing was predicted as the class
  double recall = 0.0;     // 0 when the class never occurs
  double f1 = 0.0;         // 0 when precision + recall == 0
};

struct ClassificationReport {
  ClassMetrics assertion;
  ClassMetrics exception;
  double accuracy = 0.0;
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;

  const ClassMetrics& For(OracleClass c) const {
    return c == OracleClass::kAssertion ? assertion : exception;
  }
};

// Throws Error(kDomainError) on an empty matrix or negative counts.
ClassificationReport ClassificationMetrics(const ConfusionMatrix& m);

}  // namespace oraclekit::metrics

#endif  // ORACLEKIT_METRICS_CLASSIFICATION_H_
