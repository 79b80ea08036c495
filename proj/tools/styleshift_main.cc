// Copyright 2026 The Styleshift Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// styleshift: build chunk-aligned AI/human corpora, profile their stylistic
// markers and score rewrites against the human reference.
//
// Exit codes: 0 success, 1 validation failure, 2 I/O failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "styleshift/commands.h"
#include "styleshift/corpus.h"
#include "styleshift/errors.h"
#include "styleshift/report.h"

namespace {

using namespace styleshift;

constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

struct Options {
  RunConfig config;
  std::vector<double> ratios = {0.9, 0.05, 0.05};
  std::string format = "markdown";
  std::string input;
  std::string corpus;
  std::string out_dir;
  std::string population = "both";
  std::vector<std::string> outputs;
  std::string external;
  std::string table;
  std::string report;
  std::string save_report;
};

void Finalize(Options& o) {
  if (o.ratios.size() != 3) {
    throw std::invalid_argument("--ratios takes exactly three values");
  }
  o.config.ratios = {o.ratios[0], o.ratios[1], o.ratios[2]};
  o.config.format = ParseFormat(o.format);
  o.config.Validate();
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw IoError("write failure on " + path);
}

void WriteSplits(std::span<const CorpusRecord> records,
                 const SplitAssignment& assignment, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir + ": " + ec.message());
  for (const auto& [split, part] : PartitionBySplit(records, assignment)) {
    WriteCorpusFile(part, dir + "/" + std::string(SplitName(split)) + ".jsonl");
  }
}

int RunBuild(Options& o) {
  Finalize(o);
  std::ifstream in(o.input);
  if (!in) throw IoError("cannot open input " + o.input);
  const auto documents = LoadRawDocuments(in);
  const BuildResult result = BuildCorpus(documents, o.config);
  WriteSplits(result.records, result.assignment, o.out_dir);
  WriteText(o.out_dir + "/build_report.json",
            RenderBuildReport(result.report, Format::kStructuredText));
  std::cout << RenderBuildReport(result.report, o.config.format);
  return 0;
}

int RunSplit(Options& o) {
  Finalize(o);
  const auto records = LoadCorpusFile(o.corpus);
  const SplitAssignment assignment =
      SplitByDocument(records, o.config.ratios, o.config.seed);
  WriteSplits(records, assignment, o.out_dir);
  BuildReport report;
  for (const auto& [doc_id, split] : assignment.by_doc) {
    ++report.split_documents[split];
  }
  for (const CorpusRecord& r : records) {
    ++report.split_records[assignment.Of(r.doc_id)];
  }
  Table table;
  table.name = "splits";
  table.title = "Document-disjoint splits";
  table.columns = {"Split", "Documents", "Records"};
  for (Split s : {Split::kTrain, Split::kValidation, Split::kTest}) {
    table.rows.push_back({std::string(SplitName(s)),
                          std::to_string(report.split_documents[s]),
                          std::to_string(report.split_records[s])});
  }
  std::cout << RenderTable(table, o.config.format);
  return 0;
}

int RunAnalyze(Options& o) {
  Finalize(o);
  const auto records = LoadCorpusFile(o.corpus);
  const Analysis analysis =
      AnalyzeCorpus(records, ParsePopulation(o.population), o.config.jobs);
  std::cout << RenderAnalysis(analysis, o.config.format);
  return 0;
}

std::optional<std::string_view> TableName(const Options& o) {
  if (o.table.empty()) return std::nullopt;
  return o.table;
}

int RunEvaluate(Options& o) {
  Finalize(o);
  const auto corpus = LoadCorpusFile(o.corpus);
  std::vector<ModelOutputs> models;
  for (const std::string& arg : o.outputs) {
    ModelOutputs model;
    std::string path = arg;
    const auto eq = arg.find('=');
    if (eq != std::string::npos) {
      model.label = arg.substr(0, eq);
      path = arg.substr(eq + 1);
    } else {
      model.label = std::filesystem::path(arg).stem().string();
    }
    model.records = LoadEvaluationFile(path);
    models.push_back(std::move(model));
  }
  EvaluationReport report = EvaluateOutputs(corpus, models, o.config);
  if (!o.external.empty()) {
    MergeExternalMetrics(report, LoadExternalMetricsFile(o.external));
  }
  if (!o.save_report.empty()) {
    WriteText(o.save_report,
              RenderEvaluation(report, Format::kStructuredText));
  }
  std::cout << RenderEvaluation(report, o.config.format, TableName(o));
  return 0;
}

int RunRender(Options& o) {
  Finalize(o);
  std::ifstream in(o.report);
  if (!in) throw IoError("cannot open report " + o.report);
  Json json;
  try {
    json = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError(o.report + ": " + e.what());
  }
  EvaluationReport report = ReportFromJson(json);
  if (!o.external.empty()) {
    MergeExternalMetrics(report, LoadExternalMetricsFile(o.external));
  }
  std::cout << RenderEvaluation(report, o.config.format, TableName(o));
  return 0;
}

void AddFormat(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format,
                  "Output format: markdown, csv or structured-text")
      ->capture_default_str();
}

void AddSplitFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--ratios", o.ratios, "Train, validation and test fractions")
      ->expected(3)
      ->capture_default_str();
  cmd->add_option("--seed", o.config.seed, "Split hash seed")
      ->capture_default_str();
}

void AddJobs(CLI::App* cmd, Options& o) {
  cmd->add_option("--jobs", o.config.jobs, "Worker threads")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stylometric marker analysis and style-transfer evaluation"};
  app.require_subcommand(1);
  Options o;

  CLI::App* build = app.add_subcommand(
      "build", "Chunk, align, filter and split raw AI/human documents");
  build->add_option("--input", o.input, "Raw documents (JSON lines)")
      ->required();
  build->add_option("--out-dir", o.out_dir, "Directory for split files")
      ->required();
  build->add_option("--budget", o.config.budget, "Chunk token budget")
      ->capture_default_str();
  AddSplitFlags(build, o);
  AddFormat(build, o);
  AddJobs(build, o);

  CLI::App* split =
      app.add_subcommand("split", "Re-split a corpus file by document");
  split->add_option("--corpus", o.corpus, "Corpus file")->required();
  split->add_option("--out-dir", o.out_dir, "Directory for split files")
      ->required();
  AddSplitFlags(split, o);
  AddFormat(split, o);

  CLI::App* analyze =
      app.add_subcommand("analyze", "Marker profile of a corpus");
  analyze->add_option("--corpus", o.corpus, "Corpus file")->required();
  analyze->add_option("--population", o.population, "ai, human or both")
      ->capture_default_str();
  AddFormat(analyze, o);
  AddJobs(analyze, o);

  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Score model outputs against a corpus");
  evaluate->add_option("--corpus", o.corpus, "Corpus file")->required();
  evaluate
      ->add_option("--outputs", o.outputs,
                   "Evaluation file, optionally LABEL=PATH (repeatable)")
      ->required();
  evaluate->add_option("--external", o.external,
                       "Externally computed metrics (JSON lines)");
  evaluate->add_option("--epsilon", o.config.epsilon,
                       "Degeneracy threshold for |human - ai|")
      ->capture_default_str();
  evaluate->add_option("--tau", o.config.tau, "On-target tolerance")
      ->capture_default_str();
  evaluate->add_flag("--pooled-chrf", o.config.pooled_chrf,
                     "chrF++ from n-gram counts pooled over the corpus");
  evaluate->add_flag("--per-example-shift", o.config.per_example_shift,
                     "Average per-example shifts instead of shifting means");
  evaluate->add_option("--table", o.table,
                       "Only this table: similarity, profiles, shifts or "
                       "deviations");
  evaluate->add_option("--save-report", o.save_report,
                       "Also write the full report as structured text");
  AddFormat(evaluate, o);
  AddJobs(evaluate, o);

  CLI::App* render =
      app.add_subcommand("render", "Render a saved evaluation report");
  render->add_option("--report", o.report, "Report written by --save-report")
      ->required();
  render->add_option("--external", o.external,
                     "Externally computed metrics (JSON lines)");
  render->add_option("--table", o.table, "Only this table");
  AddFormat(render, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*build) return RunBuild(o);
    if (*split) return RunSplit(o);
    if (*analyze) return RunAnalyze(o);
    if (*evaluate) return RunEvaluate(o);
    if (*render) return RunRender(o);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
