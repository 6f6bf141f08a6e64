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

#ifndef ORACLEKIT_TESTS_SUPPORT_TEST_UTIL_H_
#define ORACLEKIT_TESTS_SUPPORT_TEST_UTIL_H_

#include <atomic>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli/cli.h"

namespace oraclekit::testing {

inline std::string TestdataPath(const std::string& relative) {
  return std::string(ORACLEKIT_TESTDATA_DIR) + "/" + relative;
}

inline std::string FakeHarnessPath() { return ORACLEKIT_FAKE_HARNESS; }

// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("oraclekit_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter.fetch_add(1)));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string Path(const std::string& name = "") const {
    return name.empty() ? path_.string() : (path_ / name).string();
  }

 private:
  std::filesystem::path path_;
};

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

inline CliRun RunTool(std::vector<std::string> args) {
  args.insert(args.begin(), "oraclekit");
  std::ostringstream out;
  std::ostringstream err;
  CliRun run;
  run.code = cli::RunCli(args, out, err);
  run.out = out.str();
  run.err = err.str();
  return run;
}

}  // namespace oraclekit::testing

#endif  // ORACLEKIT_TESTS_SUPPORT_TEST_UTIL_H_
