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

// Stand-in for a Java build tool. Reads every manifest_*.jsonl in the suite
// directory and writes verdict JSONL for the emitted tests. Outcomes are a
// pure function of the test id so repeated runs agree byte for byte.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oraclekit/common/text.h"
#include "oraclekit/integrate/suite.h"
#include "oraclekit/verdict/verdict.h"

namespace {

namespace fs = std::filesystem;
using oraclekit::verdict::Phase;
using oraclekit::verdict::Status;
using oraclekit::verdict::Verdict;

bool CompileFails(const std::string& id, int every) {
  return every > 0 && oraclekit::Fnv1a64(id + "#compile") % every == 0;
}

bool ExecuteFails(const std::string& id, int every) {
  return every > 0 && oraclekit::Fnv1a64(id + "#execute") % every == 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fake harness"};
  std::string mode = "both";
  int compile_fail_every = 7;
  int execute_fail_every = 5;
  std::string suite_dir;
  std::string out_path;
  app.add_option("--mode", mode, "both, compile, execute or none")
      ->check(CLI::IsMember({"both", "compile", "execute", "none"}));
  app.add_option("--compile-fail-every", compile_fail_every);
  app.add_option("--execute-fail-every", execute_fail_every);
  app.add_option("suite_dir", suite_dir)->required();
  app.add_option("out", out_path)->required();
  CLI11_PARSE(app, argc, argv);

  if (mode == "none") {
    std::cerr << "fake_harness: simulated build crash\n";
    return 1;
  }

  std::set<std::string> ids;
  std::vector<fs::path> manifests;
  for (const auto& entry : fs::directory_iterator(suite_dir)) {
    std::string name = entry.path().filename().string();
    if (name.rfind("manifest_", 0) == 0 && entry.path().extension() == ".jsonl") {
      manifests.push_back(entry.path());
    }
  }
  for (const auto& path : manifests) {
    for (const auto& row : oraclekit::integrate::ParseManifestJsonl(
             oraclekit::ReadFile(path.string()))) {
      if (row.error.empty()) ids.insert(row.id);
    }
  }

  std::vector<Verdict> verdicts;
  for (const auto& id : ids) {
    bool compile_fails = CompileFails(id, compile_fail_every);
    if (mode == "both" || mode == "compile") {
      verdicts.push_back(Verdict{id, Phase::kCompile,
                                 compile_fails ? Status::kFail : Status::kPass,
                                 compile_fails ? "cannot find symbol" : ""});
    }
    if ((mode == "both" || mode == "execute") && !compile_fails) {
      bool fails = ExecuteFails(id, execute_fail_every);
      verdicts.push_back(Verdict{id, Phase::kExecute, fails ? Status::kFail : Status::kPass,
                                 fails ? "java.lang.AssertionError" : ""});
    }
  }
  std::ofstream out(out_path, std::ios::binary);
  out << oraclekit::verdict::VerdictsToJsonl(verdicts);
  return out ? 0 : 1;
}
