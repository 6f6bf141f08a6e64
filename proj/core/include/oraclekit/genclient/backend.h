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

#ifndef ORACLEKIT_GENCLIENT_BACKEND_H_
#define ORACLEKIT_GENCLIENT_BACKEND_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "oraclekit/decompose/sample.h"
#include "oraclekit/jparse/parser.h"

namespace oraclekit::genclient {

struct GenerationRequest {
  std::string sample_id;
  std::string prompt;
  // The sample the prompt was built from. Remote backends ignore it.
  const decompose::OracleSample* sample = nullptr;
};

// Produces a raw completion for a prompt. Implementations must tolerate
// concurrent Generate calls.
//
// Generate throws Error(kTransientBackend) for failures worth retrying and
// Error(kBackendUnavailable) for failures that are not. It never reports a
// failure as an empty string.
class GeneratorBackend {
 public:
  virtual ~GeneratorBackend() = default;

  virtual std::string Generate(const GenerationRequest& request) = 0;

  virtual std::optional<std::int64_t> CountTokens(std::string_view text) {
    (void)text;
    return std::nullopt;
  }

  virtual std::string Name() const = 0;
  virtual std::string Model() const = 0;
};

// Deterministic offline fixture. Looks at the last prefix statement:
//   declaration of a reference type -> "assertNotNull(<var>);"
//   declaration of a primitive      -> ""
//   bare call and the method doc mentions "throws"
//                                   -> "// throws RuntimeException"
//   anything else                   -> ""
class TemplateBackend : public GeneratorBackend {
 public:
  explicit TemplateBackend(std::string sep_token = "\n//<sep>\n",
                           jparse::ParseOptions options = {});

  std::string Generate(const GenerationRequest& request) override;
  std::string Name() const override { return "template"; }
  std::string Model() const override { return "template-v1"; }

 private:
  std::string sep_token_;
  jparse::ParseOptions options_;
};

struct HttpBackendConfig {
  std::string url;       // http(s)://host[:port]/path
  std::string model;
  std::string auth_env;  // environment variable holding a bearer token
  int max_new_tokens = 64;
  double temperature = 0.0;
  std::chrono::milliseconds timeout{30000};
};

// POSTs {"prompt", "max_new_tokens", "temperature"} and reads {"text"}.
// Connection failures, 429 and 5xx are transient; other statuses and
// malformed bodies make the backend unavailable.
class HttpBackend : public GeneratorBackend {
 public:
  explicit HttpBackend(HttpBackendConfig config);

  std::string Generate(const GenerationRequest& request) override;
  std::string Name() const override { return "http"; }
  std::string Model() const override { return config_.model; }

  // Request body exactly as sent.
  static std::string RequestBody(std::string_view prompt,
                                 const HttpBackendConfig& config);
  // Extracts "text"; throws Error(kBackendUnavailable) on a malformed body.
  static std::string ParseResponseBody(std::string_view body);

 private:
  HttpBackendConfig config_;
  std::string scheme_host_port_;
  std::string path_;
};

}  // namespace oraclekit::genclient

#endif  // ORACLEKIT_GENCLIENT_BACKEND_H_
