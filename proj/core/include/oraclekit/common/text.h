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

#ifndef ORACLEKIT_COMMON_TEXT_H_
#define ORACLEKIT_COMMON_TEXT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace oraclekit {

std::string_view Trim(std::string_view text);

// Collapses every run of whitespace to one space and trims both ends.
std::string CollapseWhitespace(std::string_view text);

// Number of UTF-8 code points (continuation bytes are not counted).
std::int64_t CountCodePoints(std::string_view text);

// 64-bit FNV-1a.
std::uint64_t Fnv1a64(std::string_view data);

std::vector<std::string> SplitLines(std::string_view text);

std::string Join(const std::vector<std::string>& parts, std::string_view sep);

// True for a Java identifier or a dot-qualified chain of identifiers.
bool IsQualifiedIdentifier(std::string_view text);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace oraclekit

#endif  // ORACLEKIT_COMMON_TEXT_H_
