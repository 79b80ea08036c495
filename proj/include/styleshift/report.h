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

// Evaluation reports, externally supplied neural metrics, and rendering of
// report tables as Markdown, CSV or structured text (JSON).

#ifndef STYLESHIFT_REPORT_H_
#define STYLESHIFT_REPORT_H_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "styleshift/markers.h"
#include "styleshift/overlap.h"
#include "styleshift/shift.h"

namespace styleshift {

using Json = nlohmann::ordered_json;

enum class Format { kMarkdown, kCsv, kStructuredText };

// "markdown", "csv" or "structured-text". Throws std::invalid_argument
// otherwise.
Format ParseFormat(std::string_view name);
std::string_view FormatName(Format format);

// Reserved label for the human-reference baseline row (perplexity only).
inline constexpr std::string_view kHumanReferenceLabel = "human_ref";

// Neural metrics computed elsewhere and ingested as data.
struct ExternalValues {
  std::optional<double> bertscore_precision;
  std::optional<double> bertscore_recall;
  std::optional<double> bertscore_f1;
  std::optional<double> gpt2_perplexity;

  bool operator==(const ExternalValues&) const = default;
};

struct ExternalMetrics {
  std::map<std::string, ExternalValues> by_model;
};

// Throws ValidationError unless BERTScore values lie in [0, 1] and perplexity
// is positive.
void ValidateExternalMetrics(const ExternalMetrics& metrics);

// One JSON object per line: {"model": label, "bertscore_precision": x,
// "bertscore_recall": x, "bertscore_f1": x, "gpt2_perplexity": x}, each metric
// optional. Validated on load.
ExternalMetrics LoadExternalMetrics(std::istream& in);
ExternalMetrics LoadExternalMetricsFile(const std::string& path);

struct ModelEvaluation {
  std::string label;
  OverlapScores overlap;  // output against the human reference
  MarkerProfile profile;  // profile of the model outputs
  ShiftReport shift;
  std::optional<ExternalValues> external;
};

struct EvaluationReport {
  MarkerProfile ai_profile;
  MarkerProfile human_profile;
  std::vector<ModelEvaluation> models;
  std::optional<ExternalValues> human_external;
  ShiftOptions options;
  bool pooled_chrf = false;
  bool per_example_shift = false;
};

// Attaches external values by model label; kHumanReferenceLabel fills the
// baseline row. Throws ValidationError for out-of-range values or labels
// that match no evaluated model.
void MergeExternalMetrics(EvaluationReport& report,
                          const ExternalMetrics& metrics);

// A rendered table. Footer rows are shown in Markdown and structured text but
// left out of CSV, which keeps CSV rows homogeneous.
struct Table {
  std::string name;
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::vector<std::string>> footer;
  std::vector<std::string> notes;
  // Left-aligned in Markdown; all other columns are right-aligned.
  std::vector<std::size_t> text_columns = {0};
};

std::string RenderTable(const Table& table, Format format);
// Markdown: tables separated by blank lines. CSV: blocks separated by a blank
// line. Structured text: a JSON array of tables.
std::string RenderTables(const std::vector<Table>& tables, Format format);

// Fixed-precision formatting that never prints "-0".
std::string FormatFixed(double value, int decimals);

// Per-model reference similarity with the mean shift (external columns only
// when some value is present).
Table SimilarityTable(const EvaluationReport& report);
// Per-marker averages: AI input, each model, human reference.
Table ProfileTable(const EvaluationReport& report);
// Per-marker directional shifts with a note column; mean in the footer.
Table ShiftTable(const EvaluationReport& report);
// Absolute and normalized distance to the human profile.
Table DeviationTable(const EvaluationReport& report);

std::vector<Table> EvaluationTables(const EvaluationReport& report);

// Markdown/CSV render the tables (optionally only the one named `table`:
// similarity, profiles, shifts or deviations). Structured text without a
// table name is the full report JSON, which ReportFromJson reads back.
std::string RenderEvaluation(const EvaluationReport& report, Format format,
                             std::optional<std::string_view> table = {});

// Single-population profile table.
Table PopulationTable(const MarkerProfile& profile, std::string_view label);
// Human vs AI with a percent-change column, (ai - human) / human.
Table ComparisonTable(const MarkerProfile& human, const MarkerProfile& ai);

Json ProfileToJson(const MarkerProfile& profile);
// Throws std::invalid_argument naming the first missing marker.
MarkerProfile ProfileFromJson(const Json& json);

Json ReportToJson(const EvaluationReport& report);
// Throws ValidationError on a malformed report.
EvaluationReport ReportFromJson(const Json& json);

}  // namespace styleshift

#endif  // STYLESHIFT_REPORT_H_
