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

#include "oraclekit/verdict/harness.h"

#include <cstdlib>
#include <filesystem>

#include "oraclekit/common/error.h"

namespace oraclekit::verdict {
namespace {

namespace fs = std::filesystem;

std::vector<Verdict> RunPhase(std::string_view command_template,
                              std::string_view phase,
                              const std::string& suite_dir,
                              const fs::path& work_dir) {
  fs::path out = work_dir / ("verdicts_" + std::string(phase) + ".jsonl");
  std::error_code ec;
  fs::remove(out, ec);
  std::string command = ExpandTemplate(command_template, suite_dir, out.string());
  int rc = std::system(command.c_str());
  if (!fs::exists(out)) {
    throw Error(ErrorCode::kHarnessFailed,
                std::string(phase) + " command exited with status " +
                    std::to_string(rc) + " and wrote no verdict file " +
                    out.string());
  }
  return ReadVerdictsJsonl(out.string());
}

}  // namespace

std::string ShellQuote(std::string_view text) {
  std::string out = "'";
  for (char c : text) {
    if (c == '\'') {
      out.append("'\\''");
    } else {
      out.push_back(c);
    }
  }
  out.push_back('\'');
  return out;
}

std::string ExpandTemplate(std::string_view command, std::string_view suite_dir,
                           std::string_view out) {
  static constexpr std::string_view kSuite = "{suiteDir}";
  static constexpr std::string_view kOut = "{out}";
  std::string result;
  std::size_t i = 0;
  while (i < command.size()) {
    if (command.substr(i, kSuite.size()) == kSuite) {
      result.append(ShellQuote(suite_dir));
      i += kSuite.size();
    } else if (command.substr(i, kOut.size()) == kOut) {
      result.append(ShellQuote(out));
      i += kOut.size();
    } else {
      result.push_back(command[i++]);
    }
  }
  return result;
}

std::vector<Verdict> RunHarness(const std::string& suite_dir,
                                const HarnessConfig& config,
                                const std::string& work_dir) {
  if (config.compile_command.empty()) {
    throw Error(ErrorCode::kConfigError, "harness compile command is empty");
  }
  fs::path work(work_dir);
  std::error_code ec;
  fs::create_directories(work, ec);
  if (ec) {
    throw Error(ErrorCode::kIoError, "cannot create " + work_dir + ": " + ec.message());
  }
  std::vector<Verdict> verdicts =
      RunPhase(config.compile_command, "compile", suite_dir, work);
  // With a single command the one verdict file may hold both phases.
  for (const auto& v : verdicts) {
    if (!config.execute_command.empty() && v.phase != Phase::kCompile) {
      throw SchemaError("compile command reported a " +
                            std::string(PhaseName(v.phase)) + " verdict",
                        0);
    }
  }
  if (!config.execute_command.empty()) {
    std::vector<Verdict> executed =
        RunPhase(config.execute_command, "execute", suite_dir, work);
    for (const auto& v : executed) {
      if (v.phase != Phase::kExecute) {
        throw SchemaError("execute command reported a compile verdict", 0);
      }
    }
    verdicts.insert(verdicts.end(), executed.begin(), executed.end());
  }
  ValidateVerdicts(verdicts);
  return verdicts;
}

}  // namespace oraclekit::verdict
