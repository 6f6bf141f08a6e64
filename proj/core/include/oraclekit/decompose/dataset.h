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

#ifndef ORACLEKIT_DECOMPOSE_DATASET_H_
#define ORACLEKIT_DECOMPOSE_DATASET_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oraclekit/decompose/sample.h"
#include "oraclekit/jparse/ast.h"
#include "oraclekit/jparse/parser.h"

namespace oraclekit::decompose {

struct CorpusEntry {
  std::string project_id;
  std::string test_class;
  jparse::TestMethod test;
  jparse::MutRecord mut;
};

struct DatasetOptions {
  std::uint64_t seed = 0;
  bool dedupe = false;
};

struct DatasetSplit {
  std::vector<OracleSample> train;
  std::vector<OracleSample> validation;
  std::vector<OracleSample> test;
  std::uint64_t seed = 0;

  std::size_t size() const {
    return train.size() + validation.size() + test.size();
  }
};

// Share of samples assigned to train and validation; test takes the rest.
inline constexpr double kTrainShare = 0.90;
inline constexpr double kValidationShare = 0.05;

// FNV-1a of the id XOR seed, passed through the SplitMix64 finalizer and
// scaled to [0, 1).
double SplitKey(const std::string& id, std::uint64_t seed);

struct CorpusDecomposition {
  std::vector<OracleSample> samples;  // sorted by id
  std::vector<std::string> skipped;   // "<class>.<test>: reason"
};

// Decomposes every entry. Tests without oracles or with malformed scaffolds
// are reported in `skipped`, never fatal.
CorpusDecomposition DecomposeCorpus(std::span<const CorpusEntry> corpus,
                                    bool dedupe = false);

// Orders samples by SplitKey and cuts at the 90% and 95% marks, so bucket
// sizes match the ratios up to rounding. Each bucket is id sorted.
DatasetSplit SplitSamples(std::vector<OracleSample> samples,
                          std::uint64_t seed);

DatasetSplit BuildDataset(std::span<const CorpusEntry> corpus,
                          const DatasetOptions& options);

// Writes train.jsonl, validation.jsonl and test.jsonl under `dir`. An empty
// split writes nothing.
void WriteDatasetFiles(const DatasetSplit& split, const std::string& dir);

// One JSON object per sample with the keys id, project, test_class,
// test_name, oracle_index, prefix (array of statement texts),
// mut_signature, mut_body, docstring, oracle_kind, oracle_text.
std::string SampleToJsonLine(const OracleSample& sample);
std::string SamplesToJsonl(std::span<const OracleSample> samples);

// Re-parses prefix statements with `options`. Throws SchemaError with the
// 1-based line number on malformed records.
std::vector<OracleSample> ParseSamplesJsonl(
    std::string_view jsonl, const jparse::ParseOptions& options = {});
std::vector<OracleSample> ReadSamplesJsonl(
    const std::string& path, const jparse::ParseOptions& options = {});

}  // namespace oraclekit::decompose

#endif  // ORACLEKIT_DECOMPOSE_DATASET_H_
