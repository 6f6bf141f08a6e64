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

#ifndef ORACLEKIT_COMMON_ERROR_H_
#define ORACLEKIT_COMMON_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace oraclekit {

// Every failure the pipeline reports is an Error carrying one of these codes.
// Outcomes that are data (an empty completion, a failing test) are never
// reported through this type.
enum class ErrorCode {
  kParseError,
  kUnsupportedConstruct,
  kMalformedScaffold,
  kNotFound,
  kAmbiguous,
  kNoOracle,
  kMissingField,
  kSeparatorInField,
  kInvalidOracle,
  kEmptyPrefix,
  kBackendUnavailable,
  kTransientBackend,
  kHarnessFailed,
  kSchemaError,
  kKeyMismatch,
  kDomainError,
  kLengthMismatch,
  kPhaseMismatch,
  kConfigError,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// A ParseError or UnsupportedConstruct located in source text.
class SourceError : public Error {
 public:
  SourceError(ErrorCode code, const std::string& message, int line, int column,
              std::string token);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& token() const { return token_; }

 private:
  int line_;
  int column_;
  std::string token_;
};

// SchemaError raised while reading a record file.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& message, long row);

  // 1-based row/line number in the offending file; 0 when not row specific.
  long row() const { return row_; }

 private:
  long row_;
};

}  // namespace oraclekit

#endif  // ORACLEKIT_COMMON_ERROR_H_
