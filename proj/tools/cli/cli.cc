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

#include "cli/cli.h"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "cli/config.h"
#include "cli/report.h"
#include "json.hpp"
#include "oraclekit/common/error.h"
#include "oraclekit/common/text.h"
#include "oraclekit/decompose/corpus.h"
#include "oraclekit/decompose/dataset.h"
#include "oraclekit/genclient/backend.h"
#include "oraclekit/genclient/generate.h"
#include "oraclekit/integrate/suite.h"
#include "oraclekit/metrics/bugs.h"
#include "oraclekit/metrics/classification.h"
#include "oraclekit/metrics/kills.h"
#include "oraclekit/metrics/match.h"
#include "oraclekit/metrics/success.h"
#include "oraclekit/prompt/prompt.h"
#include "oraclekit/verdict/harness.h"
#include "oraclekit/verdict/pit.h"
#include "oraclekit/verdict/verdict.h"

namespace oraclekit::cli {
namespace {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

struct Context {
  PipelineConfig config;
  ReportFormat format = ReportFormat::kCsv;
  std::unique_ptr<genclient::TraceSink> trace;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;

  // Timestamps live only in the trace file so stage outputs stay
  // byte-identical across runs.
  void Log(std::string_view stage, std::string_view message) {
    if (!trace) return;
    ojson j;
    j["ts_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::system_clock::now().time_since_epoch())
                     .count();
    j["stage"] = std::string(stage);
    j["event"] = std::string(message);
    trace->Write(j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace));
  }

  std::string DefaultPath(const std::string& name) const {
    return (fs::path(config.output_root) / name).string();
  }
};

std::string Dump(const ojson& j) {
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

std::string ProjectOf(const std::string& id) {
  std::size_t colon = id.find(':');
  return colon == std::string::npos ? "default" : id.substr(0, colon);
}

std::string Percent(const metrics::Ratio& r) { return r.Percent(1); }

std::string Percent(double share) { return Fixed(100.0 * share, 1) + "%"; }

// ---------------------------------------------------------------- decompose

struct ProjectSources {
  std::string project;
  std::vector<std::string> tests;
  std::vector<std::string> cut;
};

std::vector<std::string> JavaFilesUnder(const fs::path& dir) {
  std::vector<std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".java") {
      files.push_back(entry.path().string());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

ProjectSources ClassifySources(const std::string& project,
                               const std::vector<std::string>& files) {
  ProjectSources sources{project, {}, {}};
  for (const auto& file : files) {
    if (ReadFile(file).find("@Test") != std::string::npos) {
      sources.tests.push_back(file);
    } else {
      sources.cut.push_back(file);
    }
  }
  return sources;
}

// A directory whose subdirectories hold .java files is a corpus of projects,
// one per subdirectory; any other directory is a single project.
std::vector<ProjectSources> ScanSource(const std::string& src,
                                       const std::string& project_override) {
  fs::path path(src);
  if (!fs::exists(path)) throw Error(ErrorCode::kIoError, "no such path: " + src);
  if (fs::is_regular_file(path)) {
    std::string project = project_override.empty() ? "default" : project_override;
    return {ClassifySources(project, {src})};
  }
  std::vector<fs::path> subdirs;
  for (const auto& entry : fs::directory_iterator(path)) {
    if (entry.is_directory() && !JavaFilesUnder(entry.path()).empty()) {
      subdirs.push_back(entry.path());
    }
  }
  std::sort(subdirs.begin(), subdirs.end());
  bool has_top_level_java = false;
  for (const auto& entry : fs::directory_iterator(path)) {
    has_top_level_java |= entry.is_regular_file() && entry.path().extension() == ".java";
  }
  if (!project_override.empty() || subdirs.empty() || has_top_level_java) {
    std::string project = project_override.empty()
                              ? fs::absolute(path).lexically_normal().filename().string()
                              : project_override;
    if (project.empty()) project = fs::absolute(path).parent_path().filename().string();
    return {ClassifySources(project, JavaFilesUnder(path))};
  }
  std::vector<ProjectSources> projects;
  for (const auto& dir : subdirs) {
    projects.push_back(ClassifySources(dir.filename().string(), JavaFilesUnder(dir)));
  }
  return projects;
}

jparse::SourceUnit LoadUnit(const std::string& path) {
  return jparse::SourceUnit{path, ReadFile(path)};
}

int RunDecompose(Context& ctx, const std::vector<std::string>& sources,
                 std::string output, const std::string& project,
                 const std::string& imports_out) {
  std::vector<ProjectSources> projects;
  for (const auto& src : sources) {
    auto scanned = ScanSource(src, project);
    projects.insert(projects.end(), scanned.begin(), scanned.end());
  }
  if (sources.empty()) {
    for (const auto& corpus : ctx.config.corpus) {
      projects.push_back(ProjectSources{corpus.project, corpus.tests, corpus.cut});
    }
  }
  if (projects.empty()) {
    *ctx.err << "decompose: no sources given and the config lists no corpus\n";
    return kExitUsage;
  }
  if (output.empty()) output = ctx.DefaultPath("dataset.jsonl");

  jparse::ParseOptions options = ctx.config.ParseOptions();
  options.skip_unparsable_methods = true;
  std::vector<decompose::CorpusEntry> entries;
  std::vector<std::string> notes;
  std::map<std::string, std::vector<std::string>> imports;
  std::size_t test_files = 0;
  for (const auto& p : projects) {
    std::vector<jparse::SourceUnit> cut_units;
    for (const auto& file : p.cut) cut_units.push_back(LoadUnit(file));
    for (const auto& file : p.tests) {
      ++test_files;
      try {
        auto found = decompose::EntriesFromSources(p.project, LoadUnit(file),
                                                   cut_units, options);
        imports[found.test_class] = found.imports;
        for (auto& note : found.notes) notes.push_back(std::move(note));
        for (auto& entry : found.entries) entries.push_back(std::move(entry));
      } catch (const SourceError& e) {
        notes.push_back(file + ": " + e.what());
      }
    }
  }
  decompose::CorpusDecomposition result =
      decompose::DecomposeCorpus(entries, ctx.config.dedupe);
  WriteFile(output, decompose::SamplesToJsonl(result.samples));
  if (!imports_out.empty()) {
    ojson j = ojson::object();
    for (const auto& [cls, list] : imports) j[cls] = list;
    WriteFile(imports_out, j.dump(2) + "\n");
  }
  for (const auto& note : notes) *ctx.err << "note: " << note << "\n";
  for (const auto& skip : result.skipped) *ctx.err << "skipped: " << skip << "\n";

  Table table{"decompose", {"projects", "test_files", "tests", "samples", "skipped"}, {}};
  table.AddRow({projects.size(), test_files, entries.size(), result.samples.size(),
                result.skipped.size()});
  *ctx.out << RenderTables({table}, ctx.format);
  ctx.Log("decompose", "wrote " + std::to_string(result.samples.size()) +
                           " samples to " + output);
  return kExitOk;
}

// ------------------------------------------------------------------ dataset

int RunSplit(Context& ctx, const std::string& input, std::string out_dir,
             std::optional<std::uint64_t> seed) {
  if (out_dir.empty()) out_dir = ctx.DefaultPath("splits");
  auto samples = decompose::ReadSamplesJsonl(input, ctx.config.ParseOptions());
  auto split = decompose::SplitSamples(std::move(samples), seed.value_or(ctx.config.seed));
  fs::create_directories(out_dir);
  fs::path root(out_dir);
  WriteFile((root / "train.jsonl").string(), decompose::SamplesToJsonl(split.train));
  WriteFile((root / "validation.jsonl").string(),
            decompose::SamplesToJsonl(split.validation));
  WriteFile((root / "test.jsonl").string(), decompose::SamplesToJsonl(split.test));
  Table table{"split", {"seed", "train", "validation", "test"}, {}};
  table.AddRow({split.seed, split.train.size(), split.validation.size(), split.test.size()});
  *ctx.out << RenderTables({table}, ctx.format);
  return kExitOk;
}

// ------------------------------------------------------------------- prompt

prompt::PromptFormat FormatOrDefault(const Context& ctx, const std::string& name) {
  if (name.empty()) return ctx.config.format;
  auto format = prompt::ParseFormat(name);
  if (!format) throw Error(ErrorCode::kConfigError, "unknown prompt format " + name);
  return *format;
}

int RunPromptBuild(Context& ctx, const std::string& input, const std::string& format_name,
                   std::string output, bool fallback) {
  prompt::PromptFormat format = FormatOrDefault(ctx, format_name);
  if (output.empty()) {
    output = ctx.DefaultPath("prompts_" + std::string(prompt::FormatName(format)) + ".jsonl");
  }
  auto samples = decompose::ReadSamplesJsonl(input, ctx.config.ParseOptions());
  std::string jsonl;
  std::size_t errors = 0;
  std::size_t truncated = 0;
  for (const auto& sample : samples) {
    ojson j;
    j["id"] = sample.id;
    try {
      prompt::PromptChoice choice;
      if (fallback) {
        choice = prompt::SelectFormatWithFallback(sample, ctx.config.prompt);
      } else {
        choice.format = format;
        choice.text = prompt::BuildPrompt(sample, format, ctx.config.prompt);
        choice.tokens = prompt::CountTokens(choice.text, ctx.config.prompt);
      }
      j["format"] = std::string(prompt::FormatName(choice.format));
      j["prompt"] = choice.text;
      j["tokens"] = choice.tokens;
      j["truncated"] = choice.truncated;
      j["skipped"] = choice.skipped;
      j["error"] = "";
      truncated += choice.truncated ? 1 : 0;
    } catch (const Error& e) {
      ++errors;
      j["format"] = std::string(prompt::FormatName(format));
      j["prompt"] = "";
      j["tokens"] = 0;
      j["truncated"] = false;
      j["skipped"] = false;
      j["error"] = std::string(ErrorCodeName(e.code())) + ": " + e.what();
    }
    jsonl.append(Dump(j)).push_back('\n');
  }
  WriteFile(output, jsonl);
  Table table{"prompts", {"samples", "truncated", "errors"}, {}};
  table.AddRow({samples.size(), truncated, errors});
  *ctx.out << RenderTables({table}, ctx.format);
  return errors == 0 ? kExitOk : kExitData;
}

int RunExportFt(Context& ctx, const std::string& input, const std::string& format_name,
                std::string output) {
  prompt::PromptFormat format = FormatOrDefault(ctx, format_name);
  if (output.empty()) output = ctx.DefaultPath("finetune.jsonl");
  decompose::DatasetSplit split;
  split.train = decompose::ReadSamplesJsonl(input, ctx.config.ParseOptions());
  auto pairs = prompt::ExportFinetunePairs(split, format, ctx.config.prompt);
  WriteFile(output, prompt::FinetunePairsToJsonl(pairs));
  Table table{"finetune", {"pairs", "format"}, {}};
  table.AddRow({pairs.size(), std::string(prompt::FormatName(format))});
  *ctx.out << RenderTables({table}, ctx.format);
  return kExitOk;
}

// ----------------------------------------------------------------- generate

int RunGenerate(Context& ctx, const std::string& input, std::string backend_kind,
                int parallelism, std::string output) {
  const BackendSettings& settings = ctx.config.backend;
  if (backend_kind.empty()) backend_kind = settings.kind;
  if (parallelism <= 0) parallelism = settings.parallelism;
  if (output.empty()) output = ctx.DefaultPath("generations.jsonl");

  jparse::ParseOptions options = ctx.config.ParseOptions();
  std::unique_ptr<genclient::GeneratorBackend> backend;
  if (backend_kind == "template") {
    backend = std::make_unique<genclient::TemplateBackend>(ctx.config.prompt.sep_token,
                                                           options);
  } else if (backend_kind == "http") {
    genclient::HttpBackendConfig http;
    http.url = settings.endpoint;
    http.model = settings.model;
    http.auth_env = settings.auth_env;
    http.max_new_tokens = settings.max_new_tokens;
    http.temperature = settings.temperature;
    http.timeout = std::chrono::milliseconds(settings.timeout_ms);
    if (http.url.empty()) {
      throw Error(ErrorCode::kConfigError, "the http backend needs backend.endpoint");
    }
    backend = std::make_unique<genclient::HttpBackend>(http);
  } else {
    *ctx.err << "generate: --backend must be template or http\n";
    return kExitUsage;
  }

  auto samples = decompose::ReadSamplesJsonl(input, options);
  genclient::GenerationConfig config;
  config.prompt = ctx.config.prompt;
  config.parse = options;
  config.retry.max_attempts = settings.max_attempts;
  config.retry.initial_backoff = std::chrono::milliseconds(settings.initial_backoff_ms);
  config.trace = ctx.trace.get();
  ctx.Log("generate", "start " + std::to_string(samples.size()) + " samples with " +
                          backend->Name());
  auto results = genclient::RunBatch(samples, *backend, config, parallelism);
  WriteFile(output, genclient::GenerationResultsToJsonl(results));

  std::map<std::string, std::int64_t> kinds;
  std::int64_t failed = 0;
  for (const auto& r : results) {
    ++kinds[std::string(genclient::ParsedKindName(r.parsed.kind))];
    failed += r.failed ? 1 : 0;
  }
  ctx.Log("generate", "done");
  Table table{"generate", {"samples", "assertion", "exception", "empty", "invalid", "failed"}, {}};
  table.AddRow({results.size(), kinds["assertion"], kinds["exception"], kinds["empty"],
                kinds["invalid"], failed});
  *ctx.out << RenderTables({table}, ctx.format);
  // Every request failing means the backend is unreachable, not bad data.
  if (!results.empty() && failed == static_cast<std::int64_t>(results.size())) {
    *ctx.err << "generate: every request failed: " << results.front().error << "\n";
    return kExitExternal;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- integrate

int RunIntegrate(Context& ctx, const std::string& suite_name, const std::string& input,
                 const std::string& generations, std::string out_dir,
                 const std::string& imports_path) {
  auto label = integrate::ParseSuiteLabel(suite_name);
  if (!label) {
    *ctx.err << "integrate: --suite must be gen, orig or implicit\n";
    return kExitUsage;
  }
  if (*label == integrate::SuiteLabel::kGen && generations.empty()) {
    *ctx.err << "integrate: --suite gen needs --generations\n";
    return kExitUsage;
  }
  if (out_dir.empty()) {
    out_dir = ctx.DefaultPath("suites/" + std::string(integrate::SuiteLabelName(*label)));
  }
  integrate::SuiteSpec spec;
  spec.label = *label;
  spec.output_dir = out_dir;
  spec.parse = ctx.config.ParseOptions();
  std::map<std::string, genclient::ParsedOracle> generated;
  if (!generations.empty()) {
    for (auto& r : genclient::ReadGenerationResultsJsonl(generations)) {
      generated.emplace(r.sample_id, std::move(r.parsed));
    }
  }
  for (auto& sample : decompose::ReadSamplesJsonl(input, spec.parse)) {
    integrate::SuiteEntry entry;
    auto it = generated.find(sample.id);
    if (it != generated.end()) entry.generated = it->second;
    entry.sample = std::move(sample);
    spec.entries.push_back(std::move(entry));
  }
  if (!imports_path.empty()) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(ReadFile(imports_path));
      for (const auto& [cls, list] : j.items()) {
        spec.imports_by_class[cls] = list.get<std::vector<std::string>>();
      }
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError(std::string("imports file: ") + e.what(), 0);
    }
  }
  auto output = integrate::EmitSuite(spec);
  std::size_t errors = 0;
  for (const auto& row : output.manifest) errors += row.error.empty() ? 0 : 1;
  Table table{"integrate", {"suite", "samples", "methods", "errors", "files"}, {}};
  table.AddRow({std::string(integrate::SuiteLabelName(*label)), output.manifest.size(),
                output.manifest.size() - errors, errors, output.files.size()});
  *ctx.out << RenderTables({table}, ctx.format);
  return kExitOk;
}

// ------------------------------------------------------------------ harness

int RunHarnessCommand(Context& ctx, const std::string& suite_dir, std::string work_dir,
                      std::string output) {
  if (work_dir.empty()) work_dir = ctx.DefaultPath("harness");
  if (output.empty()) output = (fs::path(work_dir) / "verdicts.jsonl").string();
  ctx.Log("harness", "running on " + suite_dir);
  auto verdicts = verdict::RunHarness(suite_dir, ctx.config.harness, work_dir);
  WriteFile(output, verdict::VerdictsToJsonl(verdicts));
  Table table{"harness", {"verdicts"}, {}};
  table.AddRow({verdicts.size()});
  *ctx.out << RenderTables({table}, ctx.format);
  return kExitOk;
}

// -------------------------------------------------------------------- score

int RunScore(Context& ctx, const std::string& verdicts_path, const std::string& manifest_path) {
  auto verdicts = verdict::ReadVerdictsJsonl(verdicts_path);
  verdict::ValidateVerdicts(verdicts);
  std::map<std::string, std::vector<verdict::Verdict>> by_project;
  std::map<std::string, std::set<std::string>> empty_ids;
  std::map<std::string, std::set<std::string>> invalid_ids;
  std::map<std::string, std::set<std::string>> emitted_ids;
  std::set<std::string> projects;
  for (const auto& v : verdicts) {
    by_project[ProjectOf(v.test_id)].push_back(v);
    projects.insert(ProjectOf(v.test_id));
  }
  if (!manifest_path.empty()) {
    for (const auto& row : integrate::ParseManifestJsonl(ReadFile(manifest_path))) {
      std::string project = ProjectOf(row.id);
      projects.insert(project);
      if (row.error.empty()) {
        emitted_ids[project].insert(row.id);
      } else if (row.kind == "empty" || row.kind == "missing") {
        empty_ids[project].insert(row.id);
      } else {
        invalid_ids[project].insert(row.id);
      }
    }
  }

  Table table{"success_rate",
              {"project", "T", "T_ce", "T_fp", "T_em", "passed", "harness_errors",
               "success_rate"},
              {}};
  verdict::VerdictCounts all;
  auto add_row = [&](const std::string& name, const verdict::VerdictCounts& c) {
    std::string rate = c.total > 0 ? Percent(metrics::SuccessRate(c)) : "n/a";
    table.AddRow({name, c.total, c.compile_errors, c.false_positives, c.empty, c.passed,
                  c.harness_errors, rate});
  };
  for (const auto& project : projects) {
    verdict::VerdictCounts c = verdict::ClassifyAndCount(
        by_project[project], empty_ids[project], invalid_ids[project]);
    // Emitted tests the harness never reported are harness errors.
    std::set<std::string> seen;
    for (const auto& v : by_project[project]) seen.insert(v.test_id);
    for (const auto& id : emitted_ids[project]) {
      if (!seen.count(id)) ++c.harness_errors;
    }
    add_row(project, c);
    all += c;
  }
  add_row("ALL", all);
  *ctx.out << RenderTables({table}, ctx.format);
  return kExitOk;
}

// ---------------------------------------------------------------- diversity

std::vector<std::pair<std::string, std::int64_t>> CountsFrom(const nlohmann::json& j,
                                                             const char* key) {
  std::vector<std::pair<std::string, std::int64_t>> out;
  if (!j.contains(key)) return out;
  for (const auto& [category, count] : j.at(key).items()) {
    out.emplace_back(category, count.get<std::int64_t>());
  }
  return out;
}

int RunDiversity(Context& ctx, const std::string& counts_path, const std::string& train_path,
                 const std::string& generations_path, const std::string& dataset_path) {
  std::vector<metrics::DistributionRow> training;
  std::vector<metrics::DistributionRow> inference;
  std::map<std::string, std::int64_t> exact;
  std::int64_t exact_total = 0;
  std::int64_t inference_total = 0;
  jparse::ParseOptions options = ctx.config.ParseOptions();

  if (!counts_path.empty()) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(ReadFile(counts_path));
      training = metrics::DistributionFromCounts(CountsFrom(j, "training"));
      inference = metrics::DistributionFromCounts(CountsFrom(j, "inference"));
      for (const auto& [category, count] : CountsFrom(j, "exact_match")) {
        exact[category] = count;
        exact_total += count;
      }
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError(std::string("counts file: ") + e.what(), 0);
    }
  } else {
    if (!train_path.empty()) {
      std::vector<decompose::Oracle> truths;
      for (const auto& s : decompose::ReadSamplesJsonl(train_path, options)) {
        truths.push_back(s.ground_truth);
      }
      training = metrics::AssertionDistribution(std::span<const decompose::Oracle>(truths),
                                                options);
    }
    if (!generations_path.empty()) {
      auto results = genclient::ReadGenerationResultsJsonl(generations_path);
      std::vector<genclient::ParsedOracle> parsed;
      for (const auto& r : results) parsed.push_back(r.parsed);
      inference = metrics::AssertionDistribution(
          std::span<const genclient::ParsedOracle>(parsed), options);
      if (!dataset_path.empty()) {
        std::map<std::string, std::string> truth_by_id;
        for (const auto& s : decompose::ReadSamplesJsonl(dataset_path, options)) {
          truth_by_id[s.id] = s.ground_truth.Completion();
        }
        std::vector<std::string> predictions;
        std::vector<std::string> truths;
        for (const auto& r : results) {
          auto it = truth_by_id.find(r.sample_id);
          if (it == truth_by_id.end()) continue;
          predictions.push_back(r.parsed.kind == genclient::ParsedKind::kException
                                    ? std::string(decompose::kThrowsMarker) + r.parsed.payload
                                    : r.parsed.payload);
          truths.push_back(it->second);
        }
        auto report = metrics::ExactMatchRate(predictions, truths, options);
        for (const auto& c : report.per_category) {
          exact[c.category] = c.matches;
          exact_total += c.matches;
        }
      }
    }
  }
  if (training.empty() && inference.empty()) {
    *ctx.err << "diversity: give --counts, or --train and/or --generations\n";
    return kExitUsage;
  }

  for (const auto& row : inference) inference_total += row.count;
  std::int64_t training_total = 0;
  for (const auto& row : training) training_total += row.count;

  Table table{"assertion_distribution",
              {"category", "training", "training_share", "inference", "inference_share",
               "exact_match", "exact_match_rate"},
              {}};
  for (const auto& category : metrics::DistributionCategories()) {
    auto find = [&](const std::vector<metrics::DistributionRow>& rows)
        -> const metrics::DistributionRow* {
      for (const auto& r : rows) {
        if (r.category == category) return &r;
      }
      return nullptr;
    };
    const auto* t = find(training);
    const auto* i = find(inference);
    if (t == nullptr && i == nullptr) continue;
    std::int64_t matches = exact.count(category) ? exact[category] : 0;
    std::string match_rate =
        (i != nullptr && i->count > 0 && category != metrics::kSyntacticallyIncorrect)
            ? Percent(static_cast<double>(matches) / static_cast<double>(i->count))
            : "-";
    table.AddRow({category, t ? ojson(t->count) : ojson("-"),
                  t ? ojson(Percent(t->share)) : ojson("-"),
                  i ? ojson(i->count) : ojson("-"), i ? ojson(Percent(i->share)) : ojson("-"),
                  category == metrics::kSyntacticallyIncorrect ? ojson("-") : ojson(matches),
                  match_rate});
  }
  table.AddRow({"total", training_total, training_total > 0 ? "100.0%" : "-", inference_total,
                inference_total > 0 ? "100.0%" : "-", exact_total,
                inference_total > 0
                    ? ojson(Percent(static_cast<double>(exact_total) /
                                    static_cast<double>(inference_total)))
                    : ojson("-")});
  *ctx.out << RenderTables({table}, ctx.format);
  return kExitOk;
}

// ------------------------------------------------------------------ mutants

int RunMutants(Context& ctx, const std::string& gen, const std::string& orig,
               const std::string& implicit, const std::string& detected) {
  std::set<verdict::KillStatus> statuses = ctx.config.detected_statuses;
  if (!detected.empty()) {
    statuses.clear();
    std::stringstream ss(detected);
    std::string name;
    while (std::getline(ss, name, ',')) {
      auto status = verdict::ParseKillStatus(std::string(Trim(name)));
      if (!status) {
        *ctx.err << "mutants: unknown status " << name << "\n";
        return kExitUsage;
      }
      statuses.insert(*status);
    }
  }
  std::map<std::string, std::vector<verdict::KillRecord>> records;
  records["GEN"] = verdict::IngestPitCsv(gen);
  records["ORIG"] = verdict::IngestPitCsv(orig);
  records["IMPLICIT"] = verdict::IngestPitCsv(implicit);
  verdict::KillMatrix matrix = verdict::BuildKillMatrix(records, statuses);
  metrics::KillAlgebraResult r = metrics::KillAlgebra(matrix);
  Table table{"mutant_detection",
              {"mutants", "orig_total", "orig_unique", "gen_total", "gen_unique", "overlap"},
              {}};
  table.AddRow({matrix.universe.size(), r.total_orig, r.unique_orig, r.total_gen,
                r.unique_gen, r.overlap});
  *ctx.out << RenderTables({table}, ctx.format);
  return kExitOk;
}

// ---------------------------------------------------------------------- d4j

struct D4jTest {
  std::string test_id;
  std::string bug_id;
  metrics::DetectionMethod method = metrics::DetectionMethod::kAssertionOracle;
  std::optional<metrics::OracleClass> expected;
  std::optional<metrics::OracleClass> predicted;
};

std::vector<D4jTest> ReadD4jTests(const std::string& path) {
  std::vector<D4jTest> out;
  long row = 0;
  for (const auto& line : SplitLines(ReadFile(path))) {
    ++row;
    if (Trim(line).empty()) continue;
    try {
      nlohmann::json j = nlohmann::json::parse(line);
      if (!j.is_object()) throw SchemaError("test row is not an object", row);
      for (const auto& [key, value] : j.items()) {
        if (key != "test_id" && key != "bug_id" && key != "method" &&
            key != "expected_kind" && key != "predicted_kind") {
          throw SchemaError("unknown key \"" + key + "\"", row);
        }
      }
      D4jTest t;
      t.test_id = j.at("test_id").get<std::string>();
      t.bug_id = j.at("bug_id").get<std::string>();
      auto method = metrics::ParseDetectionMethod(j.at("method").get<std::string>());
      if (!method) throw SchemaError("unknown detection method", row);
      t.method = *method;
      auto kind = [&](const char* key) -> std::optional<metrics::OracleClass> {
        if (!j.contains(key) || j[key].get<std::string>().empty()) return std::nullopt;
        auto c = metrics::ParseOracleClass(j[key].get<std::string>());
        if (!c) throw SchemaError(std::string("bad ") + key, row);
        return c;
      };
      t.expected = kind("expected_kind");
      t.predicted = kind("predicted_kind");
      out.push_back(std::move(t));
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError(std::string("d4j test row: ") + e.what(), row);
    }
  }
  return out;
}

int RunD4j(Context& ctx, const std::string& buggy_path, const std::string& fixed_path,
           const std::string& tests_path, bool include_prefix_only) {
  auto tests = ReadD4jTests(tests_path);
  auto execute_by_id = [](const std::vector<verdict::Verdict>& verdicts) {
    std::map<std::string, verdict::Verdict> out;
    for (const auto& v : verdicts) {
      if (v.phase == verdict::Phase::kExecute) out[v.test_id] = v;
    }
    return out;
  };
  auto buggy = execute_by_id(verdict::ReadVerdictsJsonl(buggy_path));
  auto fixed = execute_by_id(verdict::ReadVerdictsJsonl(fixed_path));

  std::vector<metrics::BugTestRun> runs;
  std::set<std::string> bugs;
  std::int64_t oracle_tests = 0;
  std::int64_t false_positives = 0;
  metrics::ConfusionMatrix confusion;
  for (const auto& t : tests) {
    bugs.insert(t.bug_id);
    if (t.expected && t.predicted) confusion.Add(*t.predicted, *t.expected);
    auto b = buggy.find(t.test_id);
    auto f = fixed.find(t.test_id);
    if (f != fixed.end() && t.method != metrics::DetectionMethod::kPrefixOnly) {
      ++oracle_tests;
      false_positives += f->second.status == verdict::Status::kFail ? 1 : 0;
    }
    if (b == buggy.end() || f == fixed.end()) continue;
    runs.push_back(metrics::BugTestRun{t.test_id, t.bug_id, t.method, b->second, f->second});
  }
  auto records = metrics::BuildDetectionRecords(runs);
  // Bugs whose tests never produced both verdicts stay undetected.
  for (const auto& bug : bugs) {
    bool present = std::any_of(records.begin(), records.end(),
                               [&](const auto& r) { return r.bug_id == bug; });
    if (!present) records.push_back(metrics::BugDetectionRecord{bug, {}});
  }
  auto summary = metrics::Defects4jAccounting(records, include_prefix_only);

  std::vector<Table> tables;
  Table bugs_table{"bug_detection",
                   {"bugs", "exception_oracle", "assertion_oracle", "prefix_only",
                    "total_unique", "total_excluding_prefix_only", "fp_ratio"},
                   {}};
  ojson fp = oracle_tests > 0
                 ? ojson(Fixed(metrics::FalsePositiveRatio(false_positives, oracle_tests).Value(), 2))
                 : ojson("n/a");
  bugs_table.AddRow({bugs.size(), summary.by_exception, summary.by_assertion,
                     summary.by_prefix_only, summary.total_unique,
                     summary.total_excluding_prefix_only, fp});
  tables.push_back(std::move(bugs_table));
  if (confusion.Total() > 0) {
    auto report = metrics::ClassificationMetrics(confusion);
    Table cls{"classification", {"class", "precision", "recall", "f1"}, {}};
    for (auto c : {metrics::OracleClass::kAssertion, metrics::OracleClass::kException}) {
      const auto& m = report.For(c);
      cls.AddRow({std::string(metrics::OracleClassName(c)), Fixed(m.precision, 2),
                  Fixed(m.recall, 2), Fixed(m.f1, 2)});
    }
    cls.AddRow({"macro", Fixed(report.macro_precision, 2), Fixed(report.macro_recall, 2),
                Fixed(report.macro_f1, 2)});
    cls.AddRow({"accuracy", Fixed(report.accuracy, 2), "", ""});
    tables.push_back(std::move(cls));
  }
  *ctx.out << RenderTables(tables, ctx.format);
  return kExitOk;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kHarnessFailed:
    case ErrorCode::kBackendUnavailable:
    case ErrorCode::kTransientBackend:
      return kExitExternal;
    default:
      return kExitData;
  }
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Test oracle pipeline: decompose, prompt, generate, integrate, score"};
  app.name("oraclekit");
  app.require_subcommand(1);
  app.set_version_flag("--version", "oraclekit 0.1.0");

  std::string config_path;
  std::string trace_path;
  std::string format_name = "csv";
  app.add_option("--config", config_path, "Pipeline configuration (JSON)");
  app.add_option("--trace", trace_path, "Append request/response and stage logs here");
  app.add_option("--format", format_name, "Report format")
      ->check(CLI::IsMember({"csv", "json", "md"}));

  std::function<int(Context&)> action;

  // decompose
  auto* decompose_cmd = app.add_subcommand("decompose", "Split tests into oracle samples");
  std::vector<std::string> sources;
  std::string decompose_out;
  std::string project;
  std::string imports_out;
  decompose_cmd->add_option("src", sources, "Test sources: files or directories");
  decompose_cmd->add_option("-o,--output", decompose_out, "Dataset JSONL");
  decompose_cmd->add_option("--project", project, "Project id for the sources");
  decompose_cmd->add_option("--imports-out", imports_out, "Write test class imports (JSON)");
  decompose_cmd->callback([&] {
    action = [&](Context& ctx) {
      return RunDecompose(ctx, sources, decompose_out, project, imports_out);
    };
  });

  // dataset split
  auto* dataset_cmd = app.add_subcommand("dataset", "Dataset operations");
  dataset_cmd->require_subcommand(1);
  auto* split_cmd = dataset_cmd->add_subcommand("split", "90/5/5 train/validation/test split");
  std::string split_input;
  std::string split_dir;
  std::optional<std::uint64_t> split_seed;
  split_cmd->add_option("-i,--input", split_input, "Dataset JSONL")->required();
  split_cmd->add_option("--out-dir", split_dir, "Directory for the split files");
  split_cmd->add_option("--seed", split_seed, "Split seed");
  split_cmd->callback([&] {
    action = [&](Context& ctx) { return RunSplit(ctx, split_input, split_dir, split_seed); };
  });

  // prompt build / export-ft
  auto* prompt_cmd = app.add_subcommand("prompt", "Prompt construction");
  prompt_cmd->require_subcommand(1);
  auto* build_cmd = prompt_cmd->add_subcommand("build", "Build prompts for samples");
  std::string prompt_input;
  std::string prompt_format;
  std::string prompt_out;
  bool prompt_fallback = false;
  build_cmd->add_option("-i,--input", prompt_input, "Samples JSONL")->required();
  build_cmd->add_option("--format", prompt_format, "P1..P6");
  build_cmd->add_option("-o,--output", prompt_out, "Prompts JSONL");
  build_cmd->add_flag("--fallback", prompt_fallback, "Use the configured fallback chain");
  build_cmd->callback([&] {
    action = [&](Context& ctx) {
      return RunPromptBuild(ctx, prompt_input, prompt_format, prompt_out, prompt_fallback);
    };
  });
  auto* ft_cmd = prompt_cmd->add_subcommand("export-ft", "Fine-tuning pairs for a train split");
  std::string ft_input;
  std::string ft_format;
  std::string ft_out;
  ft_cmd->add_option("-i,--input", ft_input, "Train split JSONL")->required();
  ft_cmd->add_option("--format", ft_format, "P1..P6");
  ft_cmd->add_option("-o,--output", ft_out, "Pairs JSONL");
  ft_cmd->callback([&] {
    action = [&](Context& ctx) { return RunExportFt(ctx, ft_input, ft_format, ft_out); };
  });

  // generate
  auto* generate_cmd = app.add_subcommand("generate", "Generate oracles for samples");
  std::string gen_input;
  std::string gen_backend;
  int gen_parallelism = 0;
  std::string gen_out;
  generate_cmd->add_option("-i,--input", gen_input, "Samples JSONL")->required();
  generate_cmd->add_option("--backend", gen_backend, "template or http")
      ->check(CLI::IsMember({"template", "http"}));
  generate_cmd->add_option("--parallelism", gen_parallelism, "Requests in flight")
      ->check(CLI::PositiveNumber);
  generate_cmd->add_option("-o,--output", gen_out, "Generation JSONL");
  generate_cmd->callback([&] {
    action = [&](Context& ctx) {
      return RunGenerate(ctx, gen_input, gen_backend, gen_parallelism, gen_out);
    };
  });

  // integrate
  auto* integrate_cmd = app.add_subcommand("integrate", "Emit a JUnit suite");
  std::string suite;
  std::string int_input;
  std::string int_generations;
  std::string int_dir;
  std::string int_imports;
  integrate_cmd->add_option("--suite", suite, "gen, orig or implicit")->required();
  integrate_cmd->add_option("-i,--input", int_input, "Samples JSONL")->required();
  integrate_cmd->add_option("--generations", int_generations, "Generation JSONL (gen suite)");
  integrate_cmd->add_option("--out-dir", int_dir, "Suite directory");
  integrate_cmd->add_option("--imports", int_imports, "Imports JSON from decompose");
  integrate_cmd->callback([&] {
    action = [&](Context& ctx) {
      return RunIntegrate(ctx, suite, int_input, int_generations, int_dir, int_imports);
    };
  });

  // harness
  auto* harness_cmd = app.add_subcommand("harness", "Run the compile/execute harness");
  std::string suite_dir;
  std::string work_dir;
  std::string verdicts_out;
  harness_cmd->add_option("--suite-dir", suite_dir, "Emitted suite directory")->required();
  harness_cmd->add_option("--work-dir", work_dir, "Directory for verdict files");
  harness_cmd->add_option("-o,--output", verdicts_out, "Combined verdict JSONL");
  harness_cmd->callback([&] {
    action = [&](Context& ctx) { return RunHarnessCommand(ctx, suite_dir, work_dir, verdicts_out); };
  });

  // score
  auto* score_cmd = app.add_subcommand("score", "Success-rate report");
  std::string score_verdicts;
  std::string score_manifest;
  score_cmd->add_option("--verdicts", score_verdicts, "Verdict JSONL")->required();
  score_cmd->add_option("--manifest", score_manifest, "Suite manifest JSONL");
  score_cmd->callback([&] {
    action = [&](Context& ctx) { return RunScore(ctx, score_verdicts, score_manifest); };
  });

  // diversity
  auto* diversity_cmd = app.add_subcommand("diversity", "Assertion distribution report");
  std::string div_counts;
  std::string div_train;
  std::string div_generations;
  std::string div_dataset;
  diversity_cmd->add_option("--counts", div_counts, "Category count table (JSON)");
  diversity_cmd->add_option("--train", div_train, "Training samples JSONL");
  diversity_cmd->add_option("--generations", div_generations, "Generation JSONL");
  diversity_cmd->add_option("--dataset", div_dataset, "Samples the generations answer");
  diversity_cmd->callback([&] {
    action = [&](Context& ctx) {
      return RunDiversity(ctx, div_counts, div_train, div_generations, div_dataset);
    };
  });

  // mutants
  auto* mutants_cmd = app.add_subcommand("mutants", "Kill-set report from PIT CSVs");
  std::string m_gen;
  std::string m_orig;
  std::string m_implicit;
  std::string m_detected;
  mutants_cmd->add_option("--gen", m_gen, "PIT CSV for the generated suite")->required();
  mutants_cmd->add_option("--orig", m_orig, "PIT CSV for the original suite")->required();
  mutants_cmd->add_option("--implicit", m_implicit, "PIT CSV for prefixes only")->required();
  mutants_cmd->add_option("--detected", m_detected, "Comma-separated detected statuses");
  mutants_cmd->callback([&] {
    action = [&](Context& ctx) { return RunMutants(ctx, m_gen, m_orig, m_implicit, m_detected); };
  });

  // d4j
  auto* d4j_cmd = app.add_subcommand("d4j", "Bug detection and classification report");
  std::string d_buggy;
  std::string d_fixed;
  std::string d_tests;
  bool include_prefix = false;
  d4j_cmd->add_option("--buggy", d_buggy, "Verdicts on buggy versions")->required();
  d4j_cmd->add_option("--fixed", d_fixed, "Verdicts on fixed versions")->required();
  d4j_cmd->add_option("--tests", d_tests, "Test metadata JSONL")->required();
  d4j_cmd->add_flag("--include-prefix-only", include_prefix,
                    "Credit bugs only bare prefixes detect");
  d4j_cmd->callback([&] {
    action = [&](Context& ctx) { return RunD4j(ctx, d_buggy, d_fixed, d_tests, include_prefix); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream usage_out;
    std::ostringstream usage_err;
    int code = app.exit(e, usage_out, usage_err);
    out << usage_out.str();
    err << usage_err.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  Context ctx;
  ctx.out = &out;
  ctx.err = &err;
  try {
    if (!config_path.empty()) ctx.config = LoadConfig(config_path);
    ctx.format = *ParseReportFormat(format_name);
    if (!trace_path.empty()) ctx.trace = std::make_unique<genclient::TraceSink>(trace_path);
    return action(ctx);
  } catch (const Error& e) {
    err << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: IoError: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace oraclekit::cli
