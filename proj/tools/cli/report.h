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

#ifndef ORACLEKIT_TOOLS_CLI_REPORT_H_
#define ORACLEKIT_TOOLS_CLI_REPORT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace oraclekit::cli {

enum class ReportFormat { kCsv, kJson, kMarkdown };

std::optional<ReportFormat> ParseReportFormat(std::string_view name);

// A titled table whose cells are JSON scalars.
struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::ordered_json>> rows;

  void AddRow(std::vector<nlohmann::ordered_json> row) { rows.push_back(std::move(row)); }
};

// csv: header plus rows, tables separated by a blank line.
// json: {"<title>": [ {column: value, ...}, ... ], ...}.
// md: one pipe table per title.
std::string RenderTables(const std::vector<Table>& tables, ReportFormat format);

// Fixed-point text, e.g. Fixed(0.6, 3) == "0.600".
std::string Fixed(double value, int decimals);

}  // namespace oraclekit::cli

#endif  // ORACLEKIT_TOOLS_CLI_REPORT_H_
