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

#include "oraclekit/decompose/dataset.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <set>
#include <tuple>
#include <utility>

#include "json.hpp"
#include "oraclekit/common/error.h"
#include "oraclekit/common/text.h"
#include "oraclekit/decompose/decompose.h"

namespace oraclekit::decompose {
namespace {

using ojson = nlohmann::ordered_json;

const std::vector<std::string>& SampleKeys() {
  static const std::vector<std::string> kKeys = {
      "id",           "project",  "test_class", "test_name",
      "oracle_index", "prefix",   "mut_signature", "mut_body",
      "docstring",    "oracle_kind", "oracle_text"};
  return kKeys;
}

void SortById(std::vector<OracleSample>& samples) {
  std::sort(samples.begin(), samples.end(),
            [](const OracleSample& a, const OracleSample& b) {
              return a.id < b.id;
            });
}

std::string DedupeKey(const OracleSample& s) {
  std::string key = Join(s.PrefixTexts(), "\n");
  key.append("\x1f").append(s.mut.signature);
  key.append("\x1f").append(s.ground_truth.Completion());
  return key;
}

}  // namespace

namespace {

// SplitMix64 finalizer; spreads seed bits over the whole word so that
// neighbouring seeds give unrelated orders.
std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

double SplitKey(const std::string& id, std::uint64_t seed) {
  std::uint64_t h = Mix64(Fnv1a64(id) ^ seed);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

CorpusDecomposition DecomposeCorpus(std::span<const CorpusEntry> corpus,
                                    bool dedupe) {
  CorpusDecomposition out;
  for (const CorpusEntry& entry : corpus) {
    try {
      auto samples = DecomposeTest(entry.test, entry.mut, entry.project_id,
                                   entry.test_class);
      for (auto& s : samples) out.samples.push_back(std::move(s));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoOracle &&
          e.code() != ErrorCode::kMalformedScaffold) {
        throw;
      }
      out.skipped.push_back(entry.test_class + "." + entry.test.name + ": " +
                            e.what());
    }
  }
  SortById(out.samples);
  if (dedupe) {
    std::set<std::string> seen;
    std::vector<OracleSample> kept;
    for (auto& s : out.samples) {
      if (seen.insert(DedupeKey(s)).second) kept.push_back(std::move(s));
    }
    out.samples = std::move(kept);
  }
  return out;
}

DatasetSplit SplitSamples(std::vector<OracleSample> samples,
                          std::uint64_t seed) {
  DatasetSplit split;
  split.seed = seed;
  std::vector<std::pair<double, std::size_t>> order;
  order.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    order.emplace_back(SplitKey(samples[i].id, seed), i);
  }
  std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    return std::tie(a.first, samples[a.second].id) <
           std::tie(b.first, samples[b.second].id);
  });
  const auto n = static_cast<double>(samples.size());
  const auto n_train = static_cast<std::size_t>(std::llround(n * kTrainShare));
  const auto n_validation =
      static_cast<std::size_t>(std::llround(n * kValidationShare));
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    OracleSample& sample = samples[order[rank].second];
    if (rank < n_train) {
      split.train.push_back(std::move(sample));
    } else if (rank < n_train + n_validation) {
      split.validation.push_back(std::move(sample));
    } else {
      split.test.push_back(std::move(sample));
    }
  }
  SortById(split.train);
  SortById(split.validation);
  SortById(split.test);
  return split;
}

DatasetSplit BuildDataset(std::span<const CorpusEntry> corpus,
                          const DatasetOptions& options) {
  CorpusDecomposition decomposed = DecomposeCorpus(corpus, options.dedupe);
  return SplitSamples(std::move(decomposed.samples), options.seed);
}

void WriteDatasetFiles(const DatasetSplit& split, const std::string& dir) {
  if (split.size() == 0) return;
  std::filesystem::path root(dir);
  WriteFile((root / "train.jsonl").string(), SamplesToJsonl(split.train));
  WriteFile((root / "validation.jsonl").string(),
            SamplesToJsonl(split.validation));
  WriteFile((root / "test.jsonl").string(), SamplesToJsonl(split.test));
}

std::string SampleToJsonLine(const OracleSample& sample) {
  ojson j;
  j["id"] = sample.id;
  j["project"] = sample.project_id;
  j["test_class"] = sample.test_class;
  j["test_name"] = sample.test_name;
  j["oracle_index"] = sample.oracle_index;
  j["prefix"] = sample.PrefixTexts();
  j["mut_signature"] = sample.mut.signature;
  j["mut_body"] = sample.mut.full_text;
  j["docstring"] = sample.mut.javadoc.value_or("");
  j["oracle_kind"] = std::string(OracleKindName(sample.ground_truth.kind));
  j["oracle_text"] = sample.ground_truth.text;
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

std::string SamplesToJsonl(std::span<const OracleSample> samples) {
  std::string out;
  for (const auto& s : samples) {
    out.append(SampleToJsonLine(s));
    out.push_back('\n');
  }
  return out;
}

std::vector<OracleSample> ParseSamplesJsonl(std::string_view jsonl,
                                            const jparse::ParseOptions& options) {
  std::vector<OracleSample> out;
  long row = 0;
  for (const std::string& line : SplitLines(jsonl)) {
    ++row;
    if (Trim(line).empty()) continue;
    ojson j;
    try {
      j = ojson::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError(std::string("invalid JSON: ") + e.what(), row);
    }
    if (!j.is_object() || j.size() != SampleKeys().size()) {
      throw SchemaError("sample record must have exactly the dataset keys", row);
    }
    for (const auto& key : SampleKeys()) {
      if (!j.contains(key)) throw SchemaError("missing key '" + key + "'", row);
    }
    try {
      OracleSample s;
      s.id = j.at("id").get<std::string>();
      s.project_id = j.at("project").get<std::string>();
      s.test_class = j.at("test_class").get<std::string>();
      s.test_name = j.at("test_name").get<std::string>();
      s.oracle_index = j.at("oracle_index").get<int>();
      for (const auto& text : j.at("prefix")) {
        s.prefix.push_back(
            jparse::ParseStatement(text.get<std::string>(), options));
      }
      s.mut.signature = j.at("mut_signature").get<std::string>();
      s.mut.full_text = j.at("mut_body").get<std::string>();
      std::string doc = j.at("docstring").get<std::string>();
      if (!doc.empty()) s.mut.javadoc = doc;
      std::string kind = j.at("oracle_kind").get<std::string>();
      std::string text = j.at("oracle_text").get<std::string>();
      if (kind == "assertion") {
        s.ground_truth = Oracle::Assertion(text);
      } else if (kind == "exception") {
        if (!IsQualifiedIdentifier(text)) {
          throw SchemaError("exception oracle_text is not a type name", row);
        }
        s.ground_truth = Oracle::Exception(text);
      } else {
        throw SchemaError("oracle_kind must be assertion or exception", row);
      }
      out.push_back(std::move(s));
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError(std::string("bad field type: ") + e.what(), row);
    } catch (const SourceError& e) {
      throw SchemaError(std::string("prefix statement: ") + e.what(), row);
    }
  }
  return out;
}

std::vector<OracleSample> ReadSamplesJsonl(const std::string& path,
                                           const jparse::ParseOptions& options) {
  return ParseSamplesJsonl(ReadFile(path), options);
}

}  // namespace oraclekit::decompose
