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

#include "oraclekit/metrics/classification.h"

#include "oraclekit/common/error.h"

namespace oraclekit::metrics {
namespace {

double SafeDiv(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

ClassMetrics MetricsFor(const ConfusionMatrix& m, OracleClass c) {
  const int k = static_cast<int>(c);
  double tp = static_cast<double>(m.counts[k][k]);
  double predicted = static_cast<double>(m.counts[k][0] + m.counts[k][1]);
  double actual = static_cast<double>(m.counts[0][k] + m.counts[1][k]);
  ClassMetrics out;
  out.precision = SafeDiv(tp, predicted);
  out.recall = SafeDiv(tp, actual);
  out.f1 = SafeDiv(2.0 * out.precision * out.recall, out.precision + out.recall);
  return out;
}

}  // namespace

std::string_view OracleClassName(OracleClass c) {
  return c == OracleClass::kAssertion ? "assertion" : "exception";
}

std::optional<OracleClass> ParseOracleClass(std::string_view name) {
  if (name == "assertion") return OracleClass::kAssertion;
  if (name == "exception") return OracleClass::kException;
  return std::nullopt;
}

void ConfusionMatrix::Add(OracleClass predicted, OracleClass actual, std::int64_t n) {
  counts[static_cast<int>(predicted)][static_cast<int>(actual)] += n;
}

std::int64_t ConfusionMatrix::At(OracleClass predicted, OracleClass actual) const {
  return counts[static_cast<int>(predicted)][static_cast<int>(actual)];
}

std::int64_t ConfusionMatrix::Total() const {
  return counts[0][0] + counts[0][1] + counts[1][0] + counts[1][1];
}

ClassificationReport ClassificationMetrics(const ConfusionMatrix& m) {
  for (const auto& row : m.counts) {
    for (std::int64_t v : row) {
      if (v < 0) throw Error(ErrorCode::kDomainError, "negative confusion count");
    }
  }
  if (m.Total() <= 0) {
    throw Error(ErrorCode::kDomainError, "confusion matrix is empty");
  }
  ClassificationReport r;
  r.assertion = MetricsFor(m, OracleClass::kAssertion);
  r.exception = MetricsFor(m, OracleClass::kException);
  r.accuracy = static_cast<double>(m.counts[0][0] + m.counts[1][1]) /
               static_cast<double>(m.Total());
  r.macro_precision = (r.assertion.precision + r.exception.precision) / 2.0;
  r.macro_recall = (r.assertion.recall + r.exception.recall) / 2.0;
  r.macro_f1 = (r.assertion.f1 + r.exception.f1) / 2.0;
  return r;
}

}  // namespace oraclekit::metrics
