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

#include "oraclekit/metrics/stats.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

#include "oraclekit/common/error.h"

namespace oraclekit::metrics {
namespace {

void CheckFinite(std::span<const double> values, const char* name) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kDomainError,
                  std::string("non-finite value in sample ") + name);
    }
  }
}

double Mean(std::span<const double> values) {
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

double SampleVariance(std::span<const double> values, double mean) {
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return ss / static_cast<double>(values.size() - 1);
}

}  // namespace

RankSumResult RankSumU(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorCode::kDomainError, "rank-sum test needs non-empty samples");
  }
  CheckFinite(a, "A");
  CheckFinite(b, "B");

  struct Item {
    double value;
    bool from_a;
  };
  std::vector<Item> pooled;
  pooled.reserve(a.size() + b.size());
  for (double v : a) pooled.push_back({v, true});
  for (double v : b) pooled.push_back({v, false});
  std::sort(pooled.begin(), pooled.end(),
            [](const Item& x, const Item& y) { return x.value < y.value; });

  const double n_a = static_cast<double>(a.size());
  const double n_b = static_cast<double>(b.size());
  const double n = n_a + n_b;
  double rank_sum_a = 0.0;
  double tie_term = 0.0;  // sum of t^3 - t over tie groups
  for (std::size_t i = 0; i < pooled.size();) {
    std::size_t j = i;
    while (j < pooled.size() && pooled[j].value == pooled[i].value) ++j;
    double midrank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) {
      if (pooled[k].from_a) rank_sum_a += midrank;
    }
    double t = static_cast<double>(j - i);
    tie_term += t * t * t - t;
    i = j;
  }

  RankSumResult result;
  result.u = rank_sum_a - n_a * (n_a + 1.0) / 2.0;
  const double mean_u = n_a * n_b / 2.0;
  const double variance =
      n_a * n_b / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
  if (!(variance > 0.0)) {
    result.degenerate = true;
    result.z = 0.0;
    result.p = 1.0;
    return result;
  }
  double deviation = std::max(0.0, std::fabs(result.u - mean_u) - 0.5);
  result.z = std::copysign(deviation / std::sqrt(variance), result.u - mean_u);
  result.p = std::min(1.0, std::erfc(deviation / std::sqrt(variance) / std::sqrt(2.0)));
  return result;
}

WelchResult WelchT(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) {
    throw Error(ErrorCode::kDomainError, "Welch t-test needs at least two values per sample");
  }
  CheckFinite(a, "A");
  CheckFinite(b, "B");
  const double n_a = static_cast<double>(a.size());
  const double n_b = static_cast<double>(b.size());
  const double mean_a = Mean(a);
  const double mean_b = Mean(b);
  const double se_a = SampleVariance(a, mean_a) / n_a;
  const double se_b = SampleVariance(b, mean_b) / n_b;
  const double se = se_a + se_b;

  WelchResult result;
  if (!(se > 0.0)) {
    result.degenerate = true;
    result.df = n_a + n_b - 2.0;
    if (mean_a == mean_b) {
      result.t = 0.0;
      result.p = 1.0;
    } else {
      result.t = mean_a > mean_b ? std::numeric_limits<double>::infinity()
                                 : -std::numeric_limits<double>::infinity();
      result.p = 0.0;
    }
    return result;
  }
  result.t = (mean_a - mean_b) / std::sqrt(se);
  result.df = se * se / (se_a * se_a / (n_a - 1.0) + se_b * se_b / (n_b - 1.0));
  boost::math::students_t dist(result.df);
  result.p = std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(
                                     dist, std::fabs(result.t))));
  return result;
}

}  // namespace oraclekit::metrics
