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

#include <cstdlib>
#include <utility>

#include "httplib.h"
#include "json.hpp"
#include "oraclekit/common/error.h"
#include "oraclekit/genclient/backend.h"

namespace oraclekit::genclient {

HttpBackend::HttpBackend(HttpBackendConfig config) : config_(std::move(config)) {
  const std::string& url = config_.url;
  std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw Error(ErrorCode::kConfigError, "endpoint must be an http(s) URL: " + url);
  }
  std::string scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    throw Error(ErrorCode::kConfigError, "unsupported scheme: " + scheme);
  }
  std::size_t path_start = url.find('/', scheme_end + 3);
  scheme_host_port_ = url.substr(0, path_start);
  path_ = path_start == std::string::npos ? "/" : url.substr(path_start);
}

std::string HttpBackend::RequestBody(std::string_view prompt,
                                     const HttpBackendConfig& config) {
  nlohmann::ordered_json j;
  j["prompt"] = std::string(prompt);
  j["max_new_tokens"] = config.max_new_tokens;
  j["temperature"] = config.temperature;
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

std::string HttpBackend::ParseResponseBody(std::string_view body) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kBackendUnavailable,
                std::string("malformed response: ") + e.what());
  }
  if (!j.is_object() || !j.contains("text") || !j["text"].is_string()) {
    throw Error(ErrorCode::kBackendUnavailable,
                "response lacks a string \"text\" field");
  }
  return j["text"].get<std::string>();
}

std::string HttpBackend::Generate(const GenerationRequest& request) {
  httplib::Client client(scheme_host_port_);
  auto seconds = std::chrono::duration_cast<std::chrono::seconds>(config_.timeout);
  client.set_connection_timeout(seconds);
  client.set_read_timeout(seconds);
  client.set_write_timeout(seconds);

  httplib::Headers headers;
  if (!config_.auth_env.empty()) {
    if (const char* token = std::getenv(config_.auth_env.c_str())) {
      headers.emplace("Authorization", std::string("Bearer ") + token);
    }
  }
  auto response = client.Post(path_, headers,
                              RequestBody(request.prompt, config_),
                              "application/json");
  if (!response) {
    throw Error(ErrorCode::kTransientBackend,
                "request failed: " + httplib::to_string(response.error()));
  }
  if (response->status == 429 || response->status >= 500) {
    throw Error(ErrorCode::kTransientBackend,
                "HTTP " + std::to_string(response->status));
  }
  if (response->status != 200) {
    throw Error(ErrorCode::kBackendUnavailable,
                "HTTP " + std::to_string(response->status));
  }
  return ParseResponseBody(response->body);
}

}  // namespace oraclekit::genclient
