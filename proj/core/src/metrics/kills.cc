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

#include "oraclekit/metrics/kills.h"

#include "oraclekit/common/error.h"

namespace oraclekit::metrics {

KillAlgebraResult KillAlgebra(const verdict::KillMatrix& matrix) {
  for (const char* label : {"GEN", "ORIG", "IMPLICIT"}) {
    if (!matrix.detected.count(label)) {
      throw Error(ErrorCode::kKeyMismatch,
                  std::string("kill matrix lacks suite ") + label);
    }
  }
  return KillAlgebra(matrix.detected.at("GEN"), matrix.detected.at("ORIG"),
                     matrix.detected.at("IMPLICIT"));
}

}  // namespace oraclekit::metrics
