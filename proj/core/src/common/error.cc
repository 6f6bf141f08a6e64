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

#include "oraclekit/common/error.h"

#include <utility>

namespace oraclekit {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnsupportedConstruct: return "UnsupportedConstruct";
    case ErrorCode::kMalformedScaffold: return "MalformedScaffold";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kAmbiguous: return "Ambiguous";
    case ErrorCode::kNoOracle: return "NoOracle";
    case ErrorCode::kMissingField: return "MissingField";
    case ErrorCode::kSeparatorInField: return "SeparatorInField";
    case ErrorCode::kInvalidOracle: return "InvalidOracle";
    case ErrorCode::kEmptyPrefix: return "EmptyPrefix";
    case ErrorCode::kBackendUnavailable: return "BackendUnavailable";
    case ErrorCode::kTransientBackend: return "TransientBackend";
    case ErrorCode::kHarnessFailed: return "HarnessFailed";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kKeyMismatch: return "KeyMismatch";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kPhaseMismatch: return "PhaseMismatch";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

SourceError::SourceError(ErrorCode code, const std::string& message, int line,
                         int column, std::string token)
    : Error(code, message + " at " + std::to_string(line) + ":" +
                      std::to_string(column) + " near '" + token + "'"),
      line_(line),
      column_(column),
      token_(std::move(token)) {}

SchemaError::SchemaError(const std::string& message, long row)
    : Error(ErrorCode::kSchemaError,
            row > 0 ? "row " + std::to_string(row) + ": " + message : message),
      row_(row) {}

}  // namespace oraclekit
