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

#include "styleshift/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "styleshift/errors.h"

namespace styleshift {
namespace {

constexpr int kShiftDecimals = 4;
constexpr int kProfileDecimals = 2;
constexpr const char* kMissing = "---";
constexpr const char* kExternalNote =
    "* externally supplied; computed outside this toolkit, provenance "
    "unspecified";

std::string Optional(const std::optional<double>& value, int decimals) {
  return value ? FormatFixed(*value, decimals) : kMissing;
}

std::string CsvField(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void AppendCsvRow(const std::vector<std::string>& row, std::string& out) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += CsvField(row[i]);
  }
  out.push_back('\n');
}

std::string MarkdownCell(const std::string& cell) {
  std::string out;
  for (char c : cell) {
    if (c == '|') out.push_back('\\');
    out.push_back(c == '\n' ? ' ' : c);
  }
  return out;
}

void AppendMarkdownRow(const std::vector<std::string>& row, bool bold_first,
                       std::string& out) {
  out += "|";
  for (std::size_t i = 0; i < row.size(); ++i) {
    const std::string cell = MarkdownCell(row[i]);
    out += " ";
    out += (i == 0 && bold_first && !cell.empty()) ? "**" + cell + "**" : cell;
    out += " |";
  }
  out += "\n";
}

Json TableToJson(const Table& table) {
  Json json;
  json["name"] = table.name;
  json["title"] = table.title;
  json["columns"] = table.columns;
  json["rows"] = table.rows;
  json["footer"] = table.footer;
  json["notes"] = table.notes;
  return json;
}

Json OptionalToJson(const std::optional<double>& value) {
  return value ? Json(*value) : Json(nullptr);
}

std::optional<double> OptionalFromJson(const Json& json) {
  if (json.is_null()) return std::nullopt;
  return json.get<double>();
}

Json ExternalToJson(const ExternalValues& v) {
  Json json;
  json["bertscore_precision"] = OptionalToJson(v.bertscore_precision);
  json["bertscore_recall"] = OptionalToJson(v.bertscore_recall);
  json["bertscore_f1"] = OptionalToJson(v.bertscore_f1);
  json["gpt2_perplexity"] = OptionalToJson(v.gpt2_perplexity);
  return json;
}

ExternalValues ExternalFromJson(const Json& json, std::size_t line) {
  static const std::set<std::string> kFields = {
      "model", "bertscore_precision", "bertscore_recall", "bertscore_f1",
      "gpt2_perplexity"};
  for (const auto& [name, value] : json.items()) {
    if (!kFields.contains(name)) {
      throw ValidationError("line " + std::to_string(line) +
                            ": unknown external metric \"" + name + "\"");
    }
    if (name != "model" && !value.is_null() && !value.is_number()) {
      throw ValidationError("line " + std::to_string(line) + ": \"" + name +
                            "\" must be a number or null");
    }
  }
  const auto get = [&](const char* name) -> std::optional<double> {
    if (!json.contains(name)) return std::nullopt;
    return OptionalFromJson(json.at(name));
  };
  ExternalValues values;
  values.bertscore_precision = get("bertscore_precision");
  values.bertscore_recall = get("bertscore_recall");
  values.bertscore_f1 = get("bertscore_f1");
  values.gpt2_perplexity = get("gpt2_perplexity");
  return values;
}

void CheckExternal(const std::string& label, const ExternalValues& v) {
  const auto unit = [&](const std::optional<double>& x, const char* name) {
    if (x && !(*x >= 0 && *x <= 1)) {
      throw ValidationError("external metrics for \"" + label + "\": " + name +
                            " must lie in [0, 1]");
    }
  };
  unit(v.bertscore_precision, "bertscore_precision");
  unit(v.bertscore_recall, "bertscore_recall");
  unit(v.bertscore_f1, "bertscore_f1");
  if (v.gpt2_perplexity &&
      !(*v.gpt2_perplexity > 0 && std::isfinite(*v.gpt2_perplexity))) {
    throw ValidationError("external metrics for \"" + label +
                          "\": gpt2_perplexity must be positive");
  }
}

Json OverlapToJson(const OverlapScores& s) {
  Json json;
  json["rouge_l_precision"] = s.rouge_l_precision;
  json["rouge_l_recall"] = s.rouge_l_recall;
  json["rouge_l_f1"] = s.rouge_l_f1;
  json["chrf_pp"] = s.chrf_pp;
  json["vocab_jaccard"] = s.vocab_jaccard;
  json["pairs"] = s.pairs;
  json["degenerate_jaccard"] = s.degenerate_jaccard;
  return json;
}

OverlapScores OverlapFromJson(const Json& json) {
  OverlapScores s;
  s.rouge_l_precision = json.at("rouge_l_precision").get<double>();
  s.rouge_l_recall = json.at("rouge_l_recall").get<double>();
  s.rouge_l_f1 = json.at("rouge_l_f1").get<double>();
  s.chrf_pp = json.at("chrf_pp").get<double>();
  s.vocab_jaccard = json.at("vocab_jaccard").get<double>();
  s.pairs = json.at("pairs").get<std::size_t>();
  s.degenerate_jaccard = json.at("degenerate_jaccard").get<std::size_t>();
  return s;
}

Json ShiftToJson(const ShiftReport& report) {
  Json markers = Json::array();
  for (const ShiftScore& s : report.scores) {
    Json entry;
    entry["marker"] = std::string(MarkerName(s.marker));
    entry["raw_shift"] = OptionalToJson(s.raw_shift);
    entry["shift"] = OptionalToJson(s.shift);
    entry["classification"] = std::string(ShiftClassName(s.classification));
    entry["capped"] = s.capped;
    const auto k = static_cast<std::size_t>(s.marker);
    entry["abs_deviation"] = report.deviation.absolute[k];
    entry["normalized_deviation"] =
        OptionalToJson(report.deviation.normalized[k]);
    markers.push_back(std::move(entry));
  }
  Json json;
  json["mean_shift"] = OptionalToJson(report.mean_shift);
  json["mean_abs_deviation"] = report.deviation.mean_absolute;
  json["mean_normalized_deviation"] =
      OptionalToJson(report.deviation.mean_normalized);
  json["markers"] = std::move(markers);
  return json;
}

ShiftClass ShiftClassFromName(const std::string& name) {
  for (ShiftClass c :
       {ShiftClass::kWrongDirection, ShiftClass::kUndershoot,
        ShiftClass::kOnTarget, ShiftClass::kOvershoot,
        ShiftClass::kDegenerate}) {
    if (ShiftClassName(c) == name) return c;
  }
  throw ValidationError("unknown shift classification \"" + name + "\"");
}

ShiftReport ShiftFromJson(const Json& json) {
  ShiftReport report;
  const Json& markers = json.at("markers");
  if (!markers.is_array() || markers.size() != kMarkerCount) {
    throw ValidationError("shift report must list all 11 markers");
  }
  for (const Json& entry : markers) {
    const auto marker =
        MarkerFromName(entry.at("marker").get<std::string>());
    if (!marker) throw ValidationError("unknown marker in shift report");
    const auto k = static_cast<std::size_t>(*marker);
    ShiftScore& s = report.scores[k];
    s.marker = *marker;
    s.raw_shift = OptionalFromJson(entry.at("raw_shift"));
    s.shift = OptionalFromJson(entry.at("shift"));
    s.classification =
        ShiftClassFromName(entry.at("classification").get<std::string>());
    s.capped = entry.at("capped").get<bool>();
    report.deviation.absolute[k] = entry.at("abs_deviation").get<double>();
    report.deviation.normalized[k] =
        OptionalFromJson(entry.at("normalized_deviation"));
  }
  report.mean_shift = OptionalFromJson(json.at("mean_shift"));
  report.deviation.mean_absolute =
      json.at("mean_abs_deviation").get<double>();
  report.deviation.mean_normalized =
      OptionalFromJson(json.at("mean_normalized_deviation"));
  return report;
}

// "<label> overshoots" and the like, one phrase per model that is off target
// or on target, joined by "; ".
std::string ShiftNote(const EvaluationReport& report, Marker marker) {
  std::string note;
  for (const ModelEvaluation& model : report.models) {
    const ShiftScore& s = model.shift[marker];
    std::string phrase;
    switch (s.classification) {
      case ShiftClass::kOvershoot:
        phrase = " overshoots";
        break;
      case ShiftClass::kWrongDirection:
        phrase = " wrong direction";
        break;
      case ShiftClass::kOnTarget:
        phrase = " on target";
        break;
      default:
        continue;
    }
    if (!note.empty()) note += "; ";
    note += model.label + phrase;
  }
  return note;
}

}  // namespace

Format ParseFormat(std::string_view name) {
  if (name == "markdown") return Format::kMarkdown;
  if (name == "csv") return Format::kCsv;
  if (name == "structured-text") return Format::kStructuredText;
  throw std::invalid_argument("unknown format \"" + std::string(name) +
                              "\" (expected markdown, csv or structured-text)");
}

std::string_view FormatName(Format format) {
  switch (format) {
    case Format::kMarkdown:
      return "markdown";
    case Format::kCsv:
      return "csv";
    case Format::kStructuredText:
      return "structured-text";
  }
  return "unknown";
}

std::string FormatFixed(double value, int decimals) {
  if (std::isnan(value)) return "nan";
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
  std::string out = buffer;
  if (out.front() == '-' &&
      out.find_first_not_of("-0.") == std::string::npos) {
    out.erase(0, 1);
  }
  return out;
}

void ValidateExternalMetrics(const ExternalMetrics& metrics) {
  for (const auto& [label, values] : metrics.by_model) {
    CheckExternal(label, values);
  }
}

ExternalMetrics LoadExternalMetrics(std::istream& in) {
  ExternalMetrics metrics;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json json;
    try {
      json = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw ParseError(number, e.what());
    }
    if (!json.is_object() || !json.contains("model") ||
        !json.at("model").is_string()) {
      throw ValidationError("line " + std::to_string(number) +
                            ": external metrics need a string \"model\"");
    }
    const std::string label = json.at("model").get<std::string>();
    if (!metrics.by_model.emplace(label, ExternalFromJson(json, number))
             .second) {
      throw ValidationError("line " + std::to_string(number) +
                            ": duplicate model \"" + label + "\"");
    }
  }
  ValidateExternalMetrics(metrics);
  return metrics;
}

ExternalMetrics LoadExternalMetricsFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open external metrics file " + path);
  try {
    return LoadExternalMetrics(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void MergeExternalMetrics(EvaluationReport& report,
                          const ExternalMetrics& metrics) {
  ValidateExternalMetrics(metrics);
  for (const auto& [label, values] : metrics.by_model) {
    if (label == kHumanReferenceLabel) {
      report.human_external = values;
      continue;
    }
    auto it = std::find_if(
        report.models.begin(), report.models.end(),
        [&](const ModelEvaluation& m) { return m.label == label; });
    if (it == report.models.end()) {
      throw ValidationError("external metrics name unknown model \"" + label +
                            "\"");
    }
    it->external = values;
  }
}

std::string RenderTable(const Table& table, Format format) {
  std::string out;
  switch (format) {
    case Format::kMarkdown: {
      out += "## " + table.title + "\n\n";
      AppendMarkdownRow(table.columns, false, out);
      out += "|";
      for (std::size_t i = 0; i < table.columns.size(); ++i) {
        const bool text = std::find(table.text_columns.begin(),
                                    table.text_columns.end(),
                                    i) != table.text_columns.end();
        out += text ? " --- |" : " ---: |";
      }
      out += "\n";
      for (const auto& row : table.rows) AppendMarkdownRow(row, false, out);
      for (const auto& row : table.footer) AppendMarkdownRow(row, true, out);
      if (!table.notes.empty()) {
        out += "\n";
        for (const std::string& note : table.notes) out += note + "\n";
      }
      break;
    }
    case Format::kCsv:
      AppendCsvRow(table.columns, out);
      for (const auto& row : table.rows) AppendCsvRow(row, out);
      break;
    case Format::kStructuredText:
      out = TableToJson(table).dump(2) + "\n";
      break;
  }
  return out;
}

std::string RenderTables(const std::vector<Table>& tables, Format format) {
  if (format == Format::kStructuredText) {
    Json array = Json::array();
    for (const Table& t : tables) array.push_back(TableToJson(t));
    return array.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (i > 0) out += "\n";
    out += RenderTable(tables[i], format);
  }
  return out;
}

Table SimilarityTable(const EvaluationReport& report) {
  bool any_p = false, any_r = false, any_f1 = false, any_ppl = false;
  const auto scan = [&](const std::optional<ExternalValues>& v) {
    if (!v) return;
    any_p |= v->bertscore_precision.has_value();
    any_r |= v->bertscore_recall.has_value();
    any_f1 |= v->bertscore_f1.has_value();
    any_ppl |= v->gpt2_perplexity.has_value();
  };
  for (const ModelEvaluation& m : report.models) scan(m.external);
  scan(report.human_external);

  Table table;
  table.name = "similarity";
  table.title = "Reference similarity and mean marker shift";
  table.columns = {"Model"};
  if (any_p) table.columns.push_back("BERTScore P*");
  if (any_r) table.columns.push_back("BERTScore R*");
  if (any_f1) table.columns.push_back("BERTScore F1*");
  table.columns.insert(table.columns.end(),
                       {"ROUGE-L", "chrF++", "Vocab Jaccard"});
  if (any_ppl) table.columns.push_back("PPL*");
  table.columns.push_back("Mean Shift");

  const auto external_cells = [&](const std::optional<ExternalValues>& v,
                                  std::vector<std::string>& row) {
    const ExternalValues values = v.value_or(ExternalValues{});
    if (any_p) row.push_back(Optional(values.bertscore_precision, 4));
    if (any_r) row.push_back(Optional(values.bertscore_recall, 4));
    if (any_f1) row.push_back(Optional(values.bertscore_f1, 4));
  };
  for (const ModelEvaluation& m : report.models) {
    std::vector<std::string> row = {m.label};
    external_cells(m.external, row);
    row.push_back(FormatFixed(m.overlap.rouge_l_f1, 4));
    row.push_back(FormatFixed(m.overlap.chrf_pp, 2));
    row.push_back(FormatFixed(m.overlap.vocab_jaccard, 4));
    if (any_ppl) {
      row.push_back(Optional(
          m.external ? m.external->gpt2_perplexity : std::nullopt, 2));
    }
    row.push_back(Optional(m.shift.mean_shift, kShiftDecimals));
    table.rows.push_back(std::move(row));
  }
  if (report.human_external) {
    std::vector<std::string> row = {"Human ref"};
    external_cells(report.human_external, row);
    row.insert(row.end(), {kMissing, kMissing, kMissing});
    if (any_ppl) row.push_back(Optional(report.human_external->gpt2_perplexity, 2));
    row.push_back(kMissing);
    table.rows.push_back(std::move(row));
  }
  if (any_p || any_r || any_f1 || any_ppl) table.notes.push_back(kExternalNote);
  return table;
}

Table ProfileTable(const EvaluationReport& report) {
  Table table;
  table.name = "profiles";
  table.title = "Per-marker averages";
  table.columns = {"Marker", "AI Input"};
  for (const ModelEvaluation& m : report.models) table.columns.push_back(m.label);
  table.columns.push_back("Human Ref");
  for (Marker marker : kAllMarkers) {
    std::vector<std::string> row = {std::string(MarkerLabel(marker)),
                                    FormatFixed(report.ai_profile[marker],
                                                kProfileDecimals)};
    for (const ModelEvaluation& m : report.models) {
      row.push_back(FormatFixed(m.profile[marker], kProfileDecimals));
    }
    row.push_back(FormatFixed(report.human_profile[marker], kProfileDecimals));
    table.rows.push_back(std::move(row));
  }
  std::vector<std::string> n_row = {"n", std::to_string(report.ai_profile.n)};
  for (const ModelEvaluation& m : report.models) {
    n_row.push_back(std::to_string(m.profile.n));
  }
  n_row.push_back(std::to_string(report.human_profile.n));
  table.footer.push_back(std::move(n_row));
  return table;
}

Table ShiftTable(const EvaluationReport& report) {
  Table table;
  table.name = "shifts";
  table.title = "Directional marker shift scores";
  table.columns = {"Marker"};
  for (const ModelEvaluation& m : report.models) table.columns.push_back(m.label);
  table.columns.push_back("Note");
  table.text_columns = {0, table.columns.size() - 1};
  for (Marker marker : kAllMarkers) {
    std::vector<std::string> row = {std::string(MarkerLabel(marker))};
    for (const ModelEvaluation& m : report.models) {
      row.push_back(Optional(m.shift[marker].shift, kShiftDecimals));
    }
    row.push_back(ShiftNote(report, marker));
    table.rows.push_back(std::move(row));
  }
  std::vector<std::string> mean = {"Mean"};
  for (const ModelEvaluation& m : report.models) {
    mean.push_back(Optional(m.shift.mean_shift, kShiftDecimals));
  }
  mean.push_back("");
  table.footer.push_back(std::move(mean));
  table.notes.push_back(
      "shift = (output - AI) / (human - AI), clipped to [-1, 2]; --- marks "
      "markers where human and AI means coincide");
  return table;
}

Table DeviationTable(const EvaluationReport& report) {
  Table table;
  table.name = "deviations";
  table.title = "Absolute distance to the human profile";
  table.columns = {"Marker"};
  for (const ModelEvaluation& m : report.models) {
    table.columns.push_back(m.label + " |out-human|");
    table.columns.push_back(m.label + " normalized");
  }
  for (Marker marker : kAllMarkers) {
    const auto k = static_cast<std::size_t>(marker);
    std::vector<std::string> row = {std::string(MarkerLabel(marker))};
    for (const ModelEvaluation& m : report.models) {
      row.push_back(FormatFixed(m.shift.deviation.absolute[k], kShiftDecimals));
      row.push_back(Optional(m.shift.deviation.normalized[k], kShiftDecimals));
    }
    table.rows.push_back(std::move(row));
  }
  std::vector<std::string> mean = {"Mean"};
  for (const ModelEvaluation& m : report.models) {
    mean.push_back(FormatFixed(m.shift.deviation.mean_absolute, kShiftDecimals));
    mean.push_back(Optional(m.shift.deviation.mean_normalized, kShiftDecimals));
  }
  table.footer.push_back(std::move(mean));
  table.notes.push_back("normalized = |output - human| / |human - AI|");
  return table;
}

std::vector<Table> EvaluationTables(const EvaluationReport& report) {
  return {SimilarityTable(report), ProfileTable(report), ShiftTable(report),
          DeviationTable(report)};
}

std::string RenderEvaluation(const EvaluationReport& report, Format format,
                             std::optional<std::string_view> table) {
  if (!table) {
    if (format == Format::kStructuredText) {
      return ReportToJson(report).dump(2) + "\n";
    }
    return RenderTables(EvaluationTables(report), format);
  }
  for (const Table& t : EvaluationTables(report)) {
    if (t.name == *table) return RenderTable(t, format);
  }
  throw std::invalid_argument("unknown table \"" + std::string(*table) +
                              "\" (expected similarity, profiles, shifts or "
                              "deviations)");
}

Table PopulationTable(const MarkerProfile& profile, std::string_view label) {
  Table table;
  table.name = "profile";
  table.title = "Marker profile (" + std::string(label) + ", n = " +
                std::to_string(profile.n) + ")";
  table.columns = {"Marker", std::string(label)};
  for (Marker marker : kAllMarkers) {
    table.rows.push_back({std::string(MarkerLabel(marker)),
                          FormatFixed(profile[marker], kProfileDecimals)});
  }
  return table;
}

Table ComparisonTable(const MarkerProfile& human, const MarkerProfile& ai) {
  Table table;
  table.name = "comparison";
  table.title = "Chunk-level marker comparison (n = " +
                std::to_string(human.n) + ")";
  table.columns = {"Marker", "Human", "AI", "Change"};
  for (Marker marker : kAllMarkers) {
    const auto change = PercentChange(human[marker], ai[marker]);
    std::string cell = "n/a";
    if (change) {
      cell = FormatFixed(*change, 1);
      if (cell.front() != '-' && cell != "0.0") cell.insert(0, "+");
      cell += "%";
    }
    table.rows.push_back({std::string(MarkerLabel(marker)),
                          FormatFixed(human[marker], kProfileDecimals),
                          FormatFixed(ai[marker], kProfileDecimals), cell});
  }
  return table;
}

Json ProfileToJson(const MarkerProfile& profile) {
  Json means;
  for (Marker m : kAllMarkers) means[std::string(MarkerName(m))] = profile[m];
  Json json;
  json["n"] = profile.n;
  json["means"] = std::move(means);
  return json;
}

MarkerProfile ProfileFromJson(const Json& json) {
  MarkerProfile profile;
  if (!json.is_object() || !json.contains("means") ||
      !json.at("means").is_object()) {
    throw std::invalid_argument("profile: expected an object with \"means\"");
  }
  if (json.contains("n")) profile.n = json.at("n").get<std::size_t>();
  const Json& means = json.at("means");
  for (Marker m : kAllMarkers) {
    const std::string name(MarkerName(m));
    if (!means.contains(name) || !means.at(name).is_number()) {
      throw std::invalid_argument("profile: missing marker \"" + name + "\"");
    }
    profile.means[m] = means.at(name).get<double>();
  }
  return profile;
}

Json ReportToJson(const EvaluationReport& report) {
  Json config;
  config["epsilon"] = report.options.epsilon;
  config["tau"] = report.options.tau;
  config["chrf"] = report.pooled_chrf ? "pooled" : "segment_mean";
  config["shift"] = report.per_example_shift ? "per_example" : "profile_mean";

  Json models = Json::array();
  for (const ModelEvaluation& m : report.models) {
    Json entry;
    entry["label"] = m.label;
    entry["overlap"] = OverlapToJson(m.overlap);
    entry["profile"] = ProfileToJson(m.profile);
    entry["shift"] = ShiftToJson(m.shift);
    entry["external"] = m.external ? ExternalToJson(*m.external) : Json(nullptr);
    models.push_back(std::move(entry));
  }
  Json json;
  json["config"] = std::move(config);
  json["ai_profile"] = ProfileToJson(report.ai_profile);
  json["human_profile"] = ProfileToJson(report.human_profile);
  json["human_external"] = report.human_external
                               ? ExternalToJson(*report.human_external)
                               : Json(nullptr);
  json["models"] = std::move(models);
  return json;
}

EvaluationReport ReportFromJson(const Json& json) {
  try {
    EvaluationReport report;
    const Json& config = json.at("config");
    report.options.epsilon = config.at("epsilon").get<double>();
    report.options.tau = config.at("tau").get<double>();
    report.pooled_chrf = config.at("chrf").get<std::string>() == "pooled";
    report.per_example_shift =
        config.at("shift").get<std::string>() == "per_example";
    report.ai_profile = ProfileFromJson(json.at("ai_profile"));
    report.human_profile = ProfileFromJson(json.at("human_profile"));
    if (!json.at("human_external").is_null()) {
      report.human_external = ExternalFromJson(json.at("human_external"), 0);
    }
    for (const Json& entry : json.at("models")) {
      ModelEvaluation m;
      m.label = entry.at("label").get<std::string>();
      m.overlap = OverlapFromJson(entry.at("overlap"));
      m.profile = ProfileFromJson(entry.at("profile"));
      m.shift = ShiftFromJson(entry.at("shift"));
      if (!entry.at("external").is_null()) {
        m.external = ExternalFromJson(entry.at("external"), 0);
      }
      report.models.push_back(std::move(m));
    }
    return report;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed report: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace styleshift
