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

#ifndef ORACLEKIT_VERDICT_HARNESS_H_
#define ORACLEKIT_VERDICT_HARNESS_H_

#include <string>
#include <string_view>
#include <vector>

#include "oraclekit/verdict/verdict.h"

namespace oraclekit::verdict {

// Shell command templates. "{suiteDir}" and "{out}" are replaced by the
// shell-quoted suite directory and verdict file path.
struct HarnessConfig {
  std::string compile_command;
  std::string execute_command;  // optional
};

// Single-quotes `text` for a POSIX shell.
std::string ShellQuote(std::string_view text);

std::string ExpandTemplate(std::string_view command, std::string_view suite_dir,
                           std::string_view out);

// Runs the compile command, then the execute command when configured, each
// writing verdict JSONL to "<work_dir>/verdicts_<phase>.jsonl". Without an
// execute command the compile command may report both phases. A command
// may exit nonzero as long as it wrote its verdict file; a missing file is
// Error(kHarnessFailed). Verdicts are validated against the harness contract.
std::vector<Verdict> RunHarness(const std::string& suite_dir,
                                const HarnessConfig& config,
                                const std::string& work_dir);

}  // namespace oraclekit::verdict

#endif  // ORACLEKIT_VERDICT_HARNESS_H_
