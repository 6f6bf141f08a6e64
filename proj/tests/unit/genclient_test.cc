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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "httplib.h"
#include "json.hpp"
#include "oraclekit/common/error.h"
#include "oraclekit/genclient/backend.h"
#include "oraclekit/genclient/completion.h"
#include "oraclekit/genclient/generate.h"
#include "oraclekit/jparse/parser.h"

namespace oraclekit::genclient {
namespace {

using std::chrono::milliseconds;

decompose::OracleSample Sample(const std::string& id, const std::string& prefix) {
  decompose::OracleSample s;
  s.id = id;
  s.project_id = "p";
  s.prefix = jparse::ParseStatements(prefix);
  s.mut.signature = "public Foo make()";
  s.mut.full_text = "public Foo make() { return new Foo(); }";
  return s;
}

GenerationConfig NoSleepConfig() {
  GenerationConfig config;
  config.sleep = [](milliseconds) {};
  return config;
}

TEST(CompletionTest, ParsesFirstAssertion) {
  EXPECT_EQ(ParseCompletion("assertEquals(10, v); // extra trailing prose"),
            (ParsedOracle{ParsedKind::kAssertion, "assertEquals(10, v);"}));
  EXPECT_EQ(ParseCompletion("  assertTrue(a);\nassertFalse(b);"),
            (ParsedOracle{ParsedKind::kAssertion, "assertTrue(a);"}));
}

TEST(CompletionTest, ParsesExceptionMarker) {
  EXPECT_EQ(ParseCompletion("// throws java.util.EmptyStackException"),
            (ParsedOracle{ParsedKind::kException, "java.util.EmptyStackException"}));
}

TEST(CompletionTest, EmptyAndInvalid) {
  EXPECT_EQ(ParseCompletion(" \n\t").kind, ParsedKind::kEmpty);
  EXPECT_EQ(ParseCompletion("assertEquals(10 v);").kind, ParsedKind::kInvalid);
  EXPECT_EQ(ParseCompletion("garbage(((").kind, ParsedKind::kInvalid);
  EXPECT_EQ(ParseCompletion("foo.bar();").kind, ParsedKind::kInvalid);
  EXPECT_EQ(ParseCompletion("// throws not a type").kind, ParsedKind::kInvalid);
  EXPECT_EQ(ParseCompletion("garbage(((").payload, "garbage(((");
}

TEST(CompletionTest, AssertionName) {
  EXPECT_EQ(AssertionName(ParseCompletion("Assert.assertNull(x);")), "assertNull");
  EXPECT_EQ(AssertionName(ParseCompletion("// throws X")), "");
}

TEST(TemplateBackendTest, Rules) {
  TemplateBackend backend;
  auto reference = Sample("a", "Foo v = new Foo();");
  EXPECT_EQ(backend.Generate({reference.id, "", &reference}), "assertNotNull(v);");
  auto primitive = Sample("b", "int n = foo.size();");
  EXPECT_EQ(backend.Generate({primitive.id, "", &primitive}), "");
  auto throws = Sample("c", "Foo foo = new Foo(); foo.make();");
  throws.mut.javadoc = "@throws IllegalStateException when closed";
  EXPECT_EQ(backend.Generate({throws.id, "", &throws}), "// throws RuntimeException");
  auto quiet = Sample("d", "Foo foo = new Foo(); foo.make();");
  EXPECT_EQ(backend.Generate({quiet.id, "", &quiet}), "");
}

// Fails the first `failures` calls per sample, then answers.
class FlakyBackend : public GeneratorBackend {
 public:
  explicit FlakyBackend(int failures, ErrorCode code = ErrorCode::kTransientBackend)
      : failures_(failures), code_(code) {}
  std::string Generate(const GenerationRequest& request) override {
    int in_flight = ++in_flight_;
    {
      std::lock_guard<std::mutex> lock(mu_);
      max_in_flight_ = std::max(max_in_flight_, in_flight);
    }
    std::this_thread::sleep_for(milliseconds(2));
    bool fail;
    {
      std::lock_guard<std::mutex> lock(mu_);
      fail = calls_[request.sample_id]++ < failures_;
    }
    --in_flight_;
    if (fail) throw Error(code_, "simulated failure");
    return "assertTrue(flag" + request.sample_id + ");";
  }
  std::string Name() const override { return "flaky"; }
  std::string Model() const override { return "flaky"; }
  int max_in_flight() const { return max_in_flight_; }

 private:
  int failures_;
  ErrorCode code_;
  std::atomic<int> in_flight_{0};
  std::mutex mu_;
  int max_in_flight_ = 0;
  std::map<std::string, int> calls_;
};

TEST(RetryPolicyTest, ExponentialCappedBackoff) {
  RetryPolicy policy;
  EXPECT_EQ(policy.BackoffBefore(1), milliseconds(100));
  EXPECT_EQ(policy.BackoffBefore(2), milliseconds(200));
  EXPECT_EQ(policy.BackoffBefore(3), milliseconds(400));
  EXPECT_EQ(policy.BackoffBefore(10), milliseconds(5000));
}

TEST(GenerateTest, RetriesTransientFailures) {
  FlakyBackend backend(1);
  std::vector<milliseconds> sleeps;
  GenerationConfig config;
  config.sleep = [&](milliseconds d) { sleeps.push_back(d); };
  auto result = GenerateOracle(Sample("1", "Foo v = new Foo();"), backend, config);
  EXPECT_EQ(result.retries, 1);
  EXPECT_EQ(result.parsed.kind, ParsedKind::kAssertion);
  EXPECT_EQ(sleeps, std::vector<milliseconds>{milliseconds(100)});
}

TEST(GenerateTest, ExhaustedRetriesAreUnavailable) {
  FlakyBackend backend(100);
  try {
    GenerateOracle(Sample("1", "Foo v = new Foo();"), backend, NoSleepConfig());
    FAIL() << "expected BackendUnavailable";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBackendUnavailable);
  }
}

TEST(GenerateTest, PermanentFailureIsNotRetried) {
  FlakyBackend backend(1, ErrorCode::kBackendUnavailable);
  int sleeps = 0;
  GenerationConfig config;
  config.sleep = [&](milliseconds) { ++sleeps; };
  EXPECT_THROW(GenerateOracle(Sample("1", "Foo v = new Foo();"), backend, config), Error);
  EXPECT_EQ(sleeps, 0);
}

TEST(RunBatchTest, SortedBoundedAndComplete) {
  std::vector<decompose::OracleSample> samples;
  for (int i = 9; i >= 0; --i) samples.push_back(Sample(std::to_string(i), "Foo v = new Foo();"));
  FlakyBackend backend(0);
  auto results = RunBatch(samples, backend, NoSleepConfig(), 3);
  ASSERT_EQ(results.size(), 10u);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(results[i].sample_id, std::to_string(i));
  EXPECT_LE(backend.max_in_flight(), 3);
  EXPECT_THROW(RunBatch(samples, backend, NoSleepConfig(), 0), Error);
}

TEST(RunBatchTest, FailuresBecomeEntries) {
  std::vector<decompose::OracleSample> samples = {Sample("a", "Foo v = new Foo();"),
                                                  Sample("b", "Foo v = new Foo();")};
  FlakyBackend backend(100);
  auto results = RunBatch(samples, backend, NoSleepConfig(), 2);
  ASSERT_EQ(results.size(), 2u);
  for (const auto& r : results) {
    EXPECT_TRUE(r.failed);
    EXPECT_EQ(r.parsed.kind, ParsedKind::kEmpty);
    EXPECT_FALSE(r.error.empty());
  }
}

TEST(RunBatchTest, JsonlRoundTripOmitsLatency) {
  std::vector<decompose::OracleSample> samples = {Sample("a", "Foo v = new Foo();")};
  TemplateBackend backend;
  auto results = RunBatch(samples, backend, NoSleepConfig(), 1);
  std::string jsonl = GenerationResultsToJsonl(results);
  EXPECT_EQ(jsonl.find("latency"), std::string::npos);
  auto back = ParseGenerationResultsJsonl(jsonl);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].parsed, results[0].parsed);
  EXPECT_EQ(GenerationResultsToJsonl(back), jsonl);
}

TEST(HttpBackendTest, RequestAndResponseBodies) {
  HttpBackendConfig config;
  config.max_new_tokens = 32;
  auto body = nlohmann::json::parse(HttpBackend::RequestBody("int x = 1;", config));
  EXPECT_EQ(body["prompt"], "int x = 1;");
  EXPECT_EQ(body["max_new_tokens"], 32);
  EXPECT_EQ(HttpBackend::ParseResponseBody("{\"text\": \"assertTrue(b);\"}"), "assertTrue(b);");
  EXPECT_THROW(HttpBackend::ParseResponseBody("{\"txt\": 1}"), Error);
  EXPECT_THROW(HttpBackend::ParseResponseBody("not json"), Error);
}

TEST(HttpBackendTest, TalksToLocalServer) {
  httplib::Server server;
  std::atomic<int> calls{0};
  server.Post("/generate", [&](const httplib::Request& req, httplib::Response& res) {
    auto body = nlohmann::json::parse(req.body);
    if (body["prompt"] == "busy" && calls++ == 0) {
      res.status = 503;
      return;
    }
    if (body["prompt"] == "bad") {
      res.status = 400;
      return;
    }
    res.set_content("{\"text\": \"assertNotNull(x);\"}", "application/json");
  });
  int port = server.bind_to_any_port("127.0.0.1");
  std::thread thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  HttpBackendConfig config;
  config.url = "http://127.0.0.1:" + std::to_string(port) + "/generate";
  config.timeout = milliseconds(5000);
  HttpBackend backend(config);
  EXPECT_EQ(backend.Generate({"a", "ok", nullptr}), "assertNotNull(x);");
  try {
    backend.Generate({"b", "busy", nullptr});
    ADD_FAILURE() << "expected TransientBackend";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTransientBackend);
  }
  EXPECT_EQ(backend.Generate({"b", "busy", nullptr}), "assertNotNull(x);");
  try {
    backend.Generate({"c", "bad", nullptr});
    ADD_FAILURE() << "expected BackendUnavailable";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBackendUnavailable);
  }
  server.stop();
  thread.join();

  try {
    backend.Generate({"d", "ok", nullptr});
    ADD_FAILURE() << "expected TransientBackend";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTransientBackend);
  }
}

}  // namespace
}  // namespace oraclekit::genclient
