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

#include "cli/report.h"

#include <cstdio>

namespace oraclekit::cli {
namespace {

using ojson = nlohmann::ordered_json;

std::string CellText(const ojson& cell) {
  if (cell.is_string()) return cell.get<std::string>();
  if (cell.is_null()) return "";
  return cell.dump();
}

std::string CsvEscape(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string MdEscape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '|') out.push_back('\\');
    out.push_back(c == '\n' ? ' ' : c);
  }
  return out;
}

}  // namespace

std::optional<ReportFormat> ParseReportFormat(std::string_view name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  if (name == "md") return ReportFormat::kMarkdown;
  return std::nullopt;
}

std::string Fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

std::string RenderTables(const std::vector<Table>& tables, ReportFormat format) {
  std::string out;
  if (format == ReportFormat::kJson) {
    ojson doc = ojson::object();
    for (const auto& table : tables) {
      ojson rows = ojson::array();
      for (const auto& row : table.rows) {
        ojson object = ojson::object();
        for (std::size_t c = 0; c < table.columns.size() && c < row.size(); ++c) {
          object[table.columns[c]] = row[c];
        }
        rows.push_back(std::move(object));
      }
      doc[table.title] = std::move(rows);
    }
    return doc.dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
  }
  for (std::size_t t = 0; t < tables.size(); ++t) {
    const Table& table = tables[t];
    if (t > 0) out.push_back('\n');
    if (format == ReportFormat::kCsv) {
      for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c > 0) out.push_back(',');
        out.append(CsvEscape(table.columns[c]));
      }
      out.push_back('\n');
      for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          if (c > 0) out.push_back(',');
          out.append(CsvEscape(CellText(row[c])));
        }
        out.push_back('\n');
      }
    } else {
      out.append("### ").append(table.title).append("\n\n|");
      for (const auto& column : table.columns) out.append(" ").append(MdEscape(column)).append(" |");
      out.append("\n|");
      for (std::size_t c = 0; c < table.columns.size(); ++c) out.append("---|");
      out.push_back('\n');
      for (const auto& row : table.rows) {
        out.push_back('|');
        for (const auto& cell : row) out.append(" ").append(MdEscape(CellText(cell))).append(" |");
        out.push_back('\n');
      }
    }
  }
  return out;
}

}  // namespace oraclekit::cli
