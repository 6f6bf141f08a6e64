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

#include <cmath>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "oraclekit/common/error.h"
#include "oraclekit/genclient/completion.h"
#include "oraclekit/metrics/bugs.h"
#include "oraclekit/metrics/classification.h"
#include "oraclekit/metrics/kills.h"
#include "oraclekit/metrics/match.h"
#include "oraclekit/metrics/success.h"
#include "oraclekit/verdict/pit.h"

namespace oraclekit::metrics {
namespace {

using verdict::Phase;
using verdict::Status;
using verdict::Verdict;
using verdict::VerdictCounts;

VerdictCounts Counts(std::int64_t t, std::int64_t ce, std::int64_t fp, std::int64_t em) {
  VerdictCounts c;
  c.total = t;
  c.compile_errors = ce;
  c.false_positives = fp;
  c.empty = em;
  c.passed = t - ce - fp - em;
  return c;
}

TEST(SuccessRateTest, Examples) {
  EXPECT_EQ(SuccessRate(Counts(100, 5, 25, 10)), (Ratio{3, 5}));
  EXPECT_EQ(SuccessRate(Counts(100, 5, 25, 10)).Percent(), "60.0%");
  EXPECT_EQ(SuccessRate(Counts(50, 0, 0, 0)), (Ratio{1, 1}));
  EXPECT_EQ(SuccessRate(Counts(10, 10, 0, 0)), (Ratio{0, 1}));
}

TEST(SuccessRateTest, DomainErrors) {
  for (auto c : {Counts(0, 0, 0, 0), Counts(10, 6, 6, 0), Counts(10, -1, 0, 0)}) {
    try {
      SuccessRate(c);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kDomainError);
    }
  }
}

TEST(SuccessRateTest, MonotoneInEachTerm) {
  std::mt19937 rng(23);
  for (int round = 0; round < 200; ++round) {
    std::int64_t t = 1 + rng() % 1000;
    std::int64_t ce = rng() % (t + 1);
    std::int64_t fp = rng() % (t - ce + 1);
    std::int64_t em = rng() % (t - ce - fp + 1);
    Ratio r = SuccessRate(Counts(t, ce, fp, em));
    EXPECT_GE(r.Value(), 0.0);
    EXPECT_LE(r.Value(), 1.0);
    if (ce + fp + em < t) {
      EXPECT_LT(SuccessRate(Counts(t, ce + 1, fp, em)).Value(), r.Value());
      EXPECT_LT(SuccessRate(Counts(t, ce, fp + 1, em)).Value(), r.Value());
      EXPECT_LT(SuccessRate(Counts(t, ce, fp, em + 1)).Value(), r.Value());
    }
  }
}

TEST(ExactMatchTest, NormalizesWhitespace) {
  std::vector<std::string> p = {"assertEquals(10,v);", "// throws  EmptyStackException", ""};
  std::vector<std::string> t = {"assertEquals(10, v);", "// throws EmptyStackException", ""};
  auto report = ExactMatchRate(p, t);
  EXPECT_EQ(report.total, 3);
  EXPECT_EQ(report.matches, 2);
  std::vector<std::string> other = {"assertTrue(a);", "assertNull(b);", "assertFalse(c);"};
  EXPECT_EQ(ExactMatchRate(other, t).rate, 0.0);
  std::vector<std::string> short_list = {"x"};
  EXPECT_THROW(ExactMatchRate(short_list, t), Error);
}

TEST(ExactMatchTest, PerCategoryByPrediction) {
  std::vector<std::string> p = {"assertNull(a);", "assertNull(b);", "garbage(((", "// throws X"};
  std::vector<std::string> t = {"assertNull(a);", "assertNotNull(b);", "assertTrue(c);",
                                "// throws X"};
  auto report = ExactMatchRate(p, t);
  ASSERT_EQ(report.per_category.size(), 3u);
  EXPECT_EQ(report.per_category[0].category, "assertNull");
  EXPECT_EQ(report.per_category[0].total, 2);
  EXPECT_EQ(report.per_category[0].matches, 1);
  EXPECT_EQ(report.per_category[1].category, "exception");
  EXPECT_EQ(report.per_category[2].category, kSyntacticallyIncorrect);
  EXPECT_EQ(PredictionCategory(""), "empty");
}

TEST(DistributionTest, SingleCategory) {
  std::vector<genclient::ParsedOracle> oracles = {genclient::ParseCompletion("assertTrue(x);")};
  auto rows = AssertionDistribution(oracles);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0], (DistributionRow{"assertTrue", 1, 1.0}));
}

TEST(DistributionTest, InvalidAndExceptionHandling) {
  std::vector<genclient::ParsedOracle> oracles = {
      genclient::ParseCompletion("assertTrue(x);"), genclient::ParseCompletion("garbage((("),
      genclient::ParseCompletion("// throws X"), genclient::ParseCompletion("")};
  auto rows = AssertionDistribution(oracles);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1].category, kSyntacticallyIncorrect);
  EXPECT_DOUBLE_EQ(rows[0].share, 0.5);
}

TEST(DistributionTest, SharesSumToOneAndAddingTouchesOneRow) {
  std::mt19937 rng(29);
  const auto& cats = DistributionCategories();
  for (int round = 0; round < 100; ++round) {
    std::vector<std::pair<std::string, std::int64_t>> counts;
    for (const auto& c : cats) counts.emplace_back(c, rng() % 1000);
    counts[0].second += 1;
    auto rows = DistributionFromCounts(counts);
    double sum = 0.0;
    for (const auto& r : rows) sum += r.share;
    EXPECT_NEAR(sum, 1.0, 1e-9);
    std::size_t pick = rng() % counts.size();
    auto bumped = counts;
    bumped[pick].second += 1;
    auto after = DistributionFromCounts(bumped);
    for (const auto& row : after) {
      std::int64_t before = 0;
      for (const auto& r : rows) {
        if (r.category == row.category) before = r.count;
      }
      EXPECT_EQ(row.count - before, row.category == counts[pick].first ? 1 : 0);
    }
  }
  std::vector<std::pair<std::string, std::int64_t>> bad = {{"assertWhatever", 1}};
  EXPECT_THROW(DistributionFromCounts(bad), Error);
}

// Kill algebra against direct enumeration over every mutant id.
TEST(KillAlgebraTest, MatchesEnumerationOnRandomUniverses) {
  std::mt19937 rng(31);
  for (int round = 0; round < 1000; ++round) {
    int n = static_cast<int>(rng() % 20);
    std::set<int> gen, orig, implicit;
    for (int m = 0; m < n; ++m) {
      if (rng() % 2) gen.insert(m);
      if (rng() % 2) orig.insert(m);
      if (rng() % 4 == 0) implicit.insert(m);
    }
    KillAlgebraResult expect;
    for (int m = 0; m < n; ++m) {
      bool g = gen.count(m) && !implicit.count(m);
      bool o = orig.count(m) && !implicit.count(m);
      expect.total_gen += g;
      expect.total_orig += o;
      expect.unique_gen += g && !o;
      expect.unique_orig += o && !g;
      expect.overlap += g && o;
    }
    auto got = KillAlgebra(gen, orig, implicit);
    ASSERT_EQ(got, expect);
    EXPECT_EQ(got.total_gen, got.unique_gen + got.overlap);
    EXPECT_EQ(got.total_orig, got.unique_orig + got.overlap);
  }
}

TEST(KillAlgebraTest, IdenticalSuitesHaveNoUniqueKills) {
  std::set<int> k = {1, 2, 3};
  auto r = KillAlgebra(k, k, std::set<int>{2});
  EXPECT_EQ(r.unique_gen, 0);
  EXPECT_EQ(r.unique_orig, 0);
  EXPECT_EQ(r.overlap, 2);
}

TEST(KillAlgebraTest, MatrixNeedsAllThreeSuites) {
  std::map<std::string, std::vector<verdict::KillRecord>> by_suite;
  by_suite["GEN"] = verdict::ParsePitCsv("A.java,A,M,f,1,KILLED,t\n");
  by_suite["ORIG"] = verdict::ParsePitCsv("A.java,A,M,f,1,KILLED,t\n");
  auto matrix = verdict::BuildKillMatrix(by_suite);
  try {
    KillAlgebra(matrix);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kKeyMismatch);
  }
  by_suite["IMPLICIT"] = verdict::ParsePitCsv("A.java,A,M,f,1,SURVIVED,none\n");
  EXPECT_EQ(KillAlgebra(verdict::BuildKillMatrix(by_suite)).overlap, 1);
}

Verdict Exec(const std::string& id, Status s) { return Verdict{id, Phase::kExecute, s, ""}; }

TEST(BugDetectedTest, Rule) {
  EXPECT_TRUE(BugDetected(Exec("t", Status::kFail), Exec("t", Status::kPass)));
  EXPECT_FALSE(BugDetected(Exec("t", Status::kFail), Exec("t", Status::kFail)));
  EXPECT_FALSE(BugDetected(Exec("t", Status::kPass), Exec("t", Status::kPass)));
  try {
    BugDetected(Verdict{"t", Phase::kCompile, Status::kFail, ""}, Exec("t", Status::kPass));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPhaseMismatch);
  }
  EXPECT_THROW(BugDetected(Exec("t", Status::kFail), Exec("u", Status::kPass)), Error);
}

TEST(Defects4jTest, EmptyRecords) {
  EXPECT_EQ(Defects4jAccounting({}, true), Defects4jSummary{});
}

TEST(Defects4jTest, PrefixOnlyCredit) {
  using M = DetectionMethod;
  std::vector<BugDetectionRecord> records = {
      {"b1", {M::kExceptionOracle}},
      {"b2", {M::kAssertionOracle, M::kPrefixOnly}},
      {"b3", {M::kPrefixOnly}},
      {"b4", {}},
  };
  auto with = Defects4jAccounting(records, true);
  EXPECT_EQ(with.by_exception, 1);
  EXPECT_EQ(with.by_assertion, 1);
  EXPECT_EQ(with.by_prefix_only, 2);
  EXPECT_EQ(with.prefix_only_exclusive, 1);
  EXPECT_EQ(with.total_unique, 3);
  EXPECT_EQ(with.total_excluding_prefix_only, 2);
  EXPECT_EQ(with.headline, 3);
  EXPECT_EQ(Defects4jAccounting(records, false).headline, 2);
}

TEST(Defects4jTest, RecordsFromRuns) {
  using M = DetectionMethod;
  std::vector<BugTestRun> runs = {
      {"t1", "b1", M::kAssertionOracle, Exec("t1", Status::kFail), Exec("t1", Status::kPass)},
      {"t2", "b1", M::kPrefixOnly, Exec("t2", Status::kPass), Exec("t2", Status::kPass)},
      {"t3", "b0", M::kExceptionOracle, Exec("t3", Status::kFail), Exec("t3", Status::kFail)},
  };
  auto records = BuildDetectionRecords(runs);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].bug_id, "b0");
  EXPECT_TRUE(records[0].detected_by.empty());
  EXPECT_EQ(records[1].detected_by, std::set<M>{M::kAssertionOracle});
  EXPECT_EQ(FalsePositiveRatio(1, 2), (Ratio{1, 2}));
}

// Metrics against formulas evaluated directly from the four cells.
TEST(ClassificationTest, MatchesDirectFormulasOnRandomMatrices) {
  std::mt19937 rng(37);
  auto safe = [](double n, double d) { return d == 0.0 ? 0.0 : n / d; };
  for (int round = 0; round < 500; ++round) {
    ConfusionMatrix m;
    double cell[2][2];
    for (int p = 0; p < 2; ++p) {
      for (int a = 0; a < 2; ++a) {
        cell[p][a] = static_cast<double>(rng() % 30);
        m.Add(static_cast<OracleClass>(p), static_cast<OracleClass>(a),
              static_cast<std::int64_t>(cell[p][a]));
      }
    }
    if (m.Total() == 0) {
      EXPECT_THROW(ClassificationMetrics(m), Error);
      continue;
    }
    auto report = ClassificationMetrics(m);
    double total = cell[0][0] + cell[0][1] + cell[1][0] + cell[1][1];
    EXPECT_DOUBLE_EQ(report.accuracy, (cell[0][0] + cell[1][1]) / total);
    double macro_p = 0.0, macro_r = 0.0;
    for (int c = 0; c < 2; ++c) {
      double tp = cell[c][c];
      double p = safe(tp, cell[c][0] + cell[c][1]);
      double r = safe(tp, cell[0][c] + cell[1][c]);
      double f = safe(2 * p * r, p + r);
      const auto& got = report.For(static_cast<OracleClass>(c));
      EXPECT_DOUBLE_EQ(got.precision, p);
      EXPECT_DOUBLE_EQ(got.recall, r);
      EXPECT_NEAR(got.f1, f, 1e-12);
      macro_p += p / 2;
      macro_r += r / 2;
    }
    EXPECT_NEAR(report.macro_precision, macro_p, 1e-12);
    EXPECT_NEAR(report.macro_recall, macro_r, 1e-12);
  }
}

TEST(ClassificationTest, AllAssertionPredictions) {
  ConfusionMatrix m;
  m.Add(OracleClass::kAssertion, OracleClass::kAssertion, 50);
  m.Add(OracleClass::kAssertion, OracleClass::kException, 50);
  auto r = ClassificationMetrics(m);
  EXPECT_EQ(r.assertion.recall, 1.0);
  EXPECT_EQ(r.exception.recall, 0.0);
  EXPECT_EQ(r.exception.f1, 0.0);
  EXPECT_EQ(r.accuracy, 0.5);
}

TEST(ClassificationTest, PerfectPredictions) {
  ConfusionMatrix m;
  m.Add(OracleClass::kAssertion, OracleClass::kAssertion, 304);
  m.Add(OracleClass::kException, OracleClass::kException, 70);
  auto r = ClassificationMetrics(m);
  for (double v : {r.assertion.precision, r.assertion.recall, r.assertion.f1, r.exception.precision,
                   r.exception.recall, r.exception.f1, r.accuracy, r.macro_precision,
                   r.macro_recall, r.macro_f1}) {
    EXPECT_EQ(v, 1.0);
  }
}

}  // namespace
}  // namespace oraclekit::metrics
