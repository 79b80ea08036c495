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

#include "styleshift/commands.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <istream>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "styleshift/errors.h"
#include "styleshift/overlap.h"

namespace styleshift {
namespace {

struct DocumentResult {
  std::vector<CorpusRecord> records;
  std::size_t slots = 0;
  std::size_t dropped = 0;
  std::size_t unpaired = 0;
  std::optional<DocumentMismatch> mismatch;
};

DocumentResult BuildDocument(const RawDocument& doc, const RunConfig& config,
                             const TokenCounter& counter) {
  const auto ai_chunks =
      ChunkDocument(SplitSentences(doc.ai), config.budget, counter);
  const auto human_chunks =
      ChunkDocument(SplitSentences(doc.human), config.budget, counter);
  const Alignment alignment = AlignChunks(ai_chunks, human_chunks);

  DocumentResult result;
  result.slots = std::max(ai_chunks.size(), human_chunks.size());
  result.unpaired = alignment.surplus_ai + alignment.surplus_human;
  if (alignment.mismatch) {
    result.mismatch =
        DocumentMismatch{doc.doc_id, ai_chunks.size(), human_chunks.size()};
  }
  for (const ChunkPair& pair : alignment.pairs) {
    if (pair.ai.word_count < kMinChunkWords ||
        pair.human.word_count < kMinChunkWords) {
      ++result.dropped;
      continue;
    }
    result.records.push_back({doc.doc_id,
                              static_cast<std::int64_t>(pair.index),
                              pair.ai.text, pair.human.text, doc.style,
                              doc.model, doc.prompt_id});
  }
  return result;
}

using KeyedRecord = std::pair<std::string, std::int64_t>;

bool KeyLess(const CorpusRecord* a, const CorpusRecord* b) {
  return std::tie(a->doc_id, a->chunk_idx) < std::tie(b->doc_id, b->chunk_idx);
}

std::vector<MarkerVector> MarkersOf(const std::vector<const std::string*>& texts,
                                    const std::vector<std::string>& keys,
                                    const char* what, std::size_t jobs) {
  std::vector<MarkerVector> vectors(texts.size());
  ParallelFor(texts.size(), jobs, [&](std::size_t i) {
    try {
      vectors[i] = ComputeMarkers(*texts[i]);
    } catch (const std::invalid_argument&) {
      throw ValidationError(keys[i] + " " + what + ": text has no word tokens");
    }
  });
  return vectors;
}

Json BuildReportToJson(const BuildReport& report) {
  Json json;
  json["documents"] = report.documents;
  json["chunks_in"] = report.chunks_in;
  json["chunks_paired"] = report.chunks_paired;
  json["chunks_dropped_short"] = report.chunks_dropped_short;
  json["chunks_unpaired_mismatch"] = report.chunks_unpaired_mismatch;
  Json mismatches = Json::array();
  for (const DocumentMismatch& m : report.mismatches) {
    mismatches.push_back(
        {{"doc_id", m.doc_id}, {"ai_chunks", m.ai_chunks},
         {"human_chunks", m.human_chunks}});
  }
  json["mismatches"] = std::move(mismatches);
  Json splits;
  for (Split s : {Split::kTrain, Split::kValidation, Split::kTest}) {
    const auto count = [&](const std::map<Split, std::size_t>& m) {
      auto it = m.find(s);
      return it == m.end() ? std::size_t{0} : it->second;
    };
    splits[std::string(SplitName(s))] = {
        {"documents", count(report.split_documents)},
        {"records", count(report.split_records)}};
  }
  json["splits"] = std::move(splits);
  return json;
}

}  // namespace

void RunConfig::Validate() const {
  if (budget < 1) throw std::invalid_argument("--budget must be >= 1");
  CheckRatios(ratios);
  if (!(epsilon > 0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("--epsilon must be a positive number");
  }
  if (!(tau >= 0) || !std::isfinite(tau)) {
    throw std::invalid_argument("--tau must be a non-negative number");
  }
  if (jobs < 1) throw std::invalid_argument("--jobs must be >= 1");
}

void ParallelFor(std::size_t n, std::size_t jobs,
                 const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min(std::max<std::size_t>(jobs, 1), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
            next = n;
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

std::vector<RawDocument> LoadRawDocuments(std::istream& in) {
  static const std::set<std::string> kAllowed = {
      "doc_id", "ai", "human", "style", "model", "prompt_id"};
  std::vector<RawDocument> documents;
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
    if (!json.is_object()) throw ParseError(number, "expected a JSON object");
    const std::string where = "line " + std::to_string(number) + ": ";
    for (const auto& [name, value] : json.items()) {
      if (!kAllowed.contains(name)) {
        throw ValidationError(where + "unknown field \"" + name + "\"");
      }
      if (!value.is_string()) {
        throw ValidationError(where + "field \"" + name +
                              "\" must be a string");
      }
    }
    RawDocument doc;
    const auto get = [&](const char* name, bool required) {
      if (!json.contains(name)) {
        if (required) {
          throw ValidationError(where + "missing field \"" + name + "\"");
        }
        return std::string();
      }
      return json.at(name).get<std::string>();
    };
    doc.doc_id = get("doc_id", true);
    doc.ai = get("ai", true);
    doc.human = get("human", true);
    doc.style = get("style", false);
    doc.model = get("model", false);
    doc.prompt_id = get("prompt_id", false);
    documents.push_back(std::move(doc));
  }
  if (in.bad()) throw IoError("read failure");
  return documents;
}

BuildResult BuildCorpus(std::span<const RawDocument> documents,
                        const RunConfig& config, const TokenCounter& counter) {
  config.Validate();
  std::set<std::string> ids;
  for (const RawDocument& doc : documents) {
    if (!ids.insert(doc.doc_id).second) {
      throw ValidationError("duplicate doc_id \"" + doc.doc_id + "\"");
    }
  }
  std::vector<DocumentResult> per_doc(documents.size());
  ParallelFor(documents.size(), config.jobs, [&](std::size_t i) {
    per_doc[i] = BuildDocument(documents[i], config, counter);
  });

  BuildResult result;
  BuildReport& report = result.report;
  report.documents = documents.size();
  for (DocumentResult& doc : per_doc) {
    report.chunks_in += doc.slots;
    report.chunks_paired += doc.records.size();
    report.chunks_dropped_short += doc.dropped;
    report.chunks_unpaired_mismatch += doc.unpaired;
    if (doc.mismatch) report.mismatches.push_back(std::move(*doc.mismatch));
    for (CorpusRecord& r : doc.records) result.records.push_back(std::move(r));
  }
  result.assignment =
      SplitByDocument(result.records, config.ratios, config.seed);
  for (const auto& [doc_id, split] : result.assignment.by_doc) {
    ++report.split_documents[split];
  }
  for (const CorpusRecord& r : result.records) {
    ++report.split_records[result.assignment.Of(r.doc_id)];
  }
  return result;
}

std::map<Split, std::vector<CorpusRecord>> PartitionBySplit(
    std::span<const CorpusRecord> records, const SplitAssignment& assignment) {
  std::map<Split, std::vector<CorpusRecord>> parts;
  for (Split s : {Split::kTrain, Split::kValidation, Split::kTest}) parts[s];
  for (const CorpusRecord& r : records) {
    parts[assignment.Of(r.doc_id)].push_back(r);
  }
  return parts;
}

std::string RenderBuildReport(const BuildReport& report, Format format) {
  if (format == Format::kStructuredText) {
    return BuildReportToJson(report).dump(2) + "\n";
  }
  Table counts;
  counts.name = "build";
  counts.title = "Corpus build";
  counts.columns = {"Quantity", "Value"};
  counts.rows = {
      {"documents", std::to_string(report.documents)},
      {"chunks_in", std::to_string(report.chunks_in)},
      {"chunks_paired", std::to_string(report.chunks_paired)},
      {"chunks_dropped_short", std::to_string(report.chunks_dropped_short)},
      {"chunks_unpaired_mismatch",
       std::to_string(report.chunks_unpaired_mismatch)},
  };
  Table splits;
  splits.name = "splits";
  splits.title = "Document-disjoint splits";
  splits.columns = {"Split", "Documents", "Records"};
  for (Split s : {Split::kTrain, Split::kValidation, Split::kTest}) {
    const auto count = [&](const std::map<Split, std::size_t>& m) {
      auto it = m.find(s);
      return std::to_string(it == m.end() ? 0 : it->second);
    };
    splits.rows.push_back({std::string(SplitName(s)),
                           count(report.split_documents),
                           count(report.split_records)});
  }
  std::vector<Table> tables = {counts, splits};
  if (!report.mismatches.empty()) {
    Table mismatches;
    mismatches.name = "mismatches";
    mismatches.title = "Chunk-count mismatches";
    mismatches.columns = {"doc_id", "AI chunks", "Human chunks"};
    for (const DocumentMismatch& m : report.mismatches) {
      mismatches.rows.push_back({m.doc_id, std::to_string(m.ai_chunks),
                                 std::to_string(m.human_chunks)});
    }
    tables.push_back(std::move(mismatches));
  }
  return RenderTables(tables, format);
}

Population ParsePopulation(std::string_view name) {
  if (name == "ai") return Population::kAi;
  if (name == "human") return Population::kHuman;
  if (name == "both") return Population::kBoth;
  throw std::invalid_argument("unknown population \"" + std::string(name) +
                              "\" (expected ai, human or both)");
}

Analysis AnalyzeCorpus(std::span<const CorpusRecord> records,
                       Population population, std::size_t jobs) {
  if (records.empty()) throw ValidationError("corpus is empty");
  std::vector<const CorpusRecord*> sorted;
  for (const CorpusRecord& r : records) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(), KeyLess);

  std::vector<std::string> keys;
  std::vector<const std::string*> ai_texts, human_texts;
  for (const CorpusRecord* r : sorted) {
    keys.push_back(RecordKey(r->doc_id, r->chunk_idx));
    ai_texts.push_back(&r->ai);
    human_texts.push_back(&r->human);
  }
  Analysis analysis;
  if (population != Population::kHuman) {
    analysis.ai = AggregateProfile(MarkersOf(ai_texts, keys, "ai", jobs));
  }
  if (population != Population::kAi) {
    analysis.human =
        AggregateProfile(MarkersOf(human_texts, keys, "human", jobs));
  }
  return analysis;
}

std::string RenderAnalysis(const Analysis& analysis, Format format) {
  Table table;
  if (analysis.ai && analysis.human) {
    table = ComparisonTable(*analysis.human, *analysis.ai);
  } else if (analysis.ai) {
    table = PopulationTable(*analysis.ai, "AI");
  } else if (analysis.human) {
    table = PopulationTable(*analysis.human, "Human");
  } else {
    throw std::invalid_argument("analysis holds no profile");
  }
  if (format == Format::kStructuredText) {
    Json json;
    if (analysis.ai) json["ai"] = ProfileToJson(*analysis.ai);
    if (analysis.human) json["human"] = ProfileToJson(*analysis.human);
    return json.dump(2) + "\n";
  }
  return RenderTable(table, format);
}

EvaluationReport EvaluateOutputs(std::span<const CorpusRecord> corpus,
                                 std::span<const ModelOutputs> models,
                                 const RunConfig& config) {
  config.Validate();
  if (corpus.empty()) throw ValidationError("corpus is empty");
  if (models.empty()) throw ValidationError("no evaluation files given");

  std::vector<const CorpusRecord*> sorted;
  for (const CorpusRecord& r : corpus) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(), KeyLess);
  std::map<KeyedRecord, std::size_t> position;
  std::vector<std::string> keys;
  std::vector<const std::string*> ai_texts, human_texts;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (!position.emplace(KeyedRecord{sorted[i]->doc_id, sorted[i]->chunk_idx},
                          i)
             .second) {
      throw ValidationError("duplicate corpus key " +
                            RecordKey(sorted[i]->doc_id, sorted[i]->chunk_idx));
    }
    keys.push_back(RecordKey(sorted[i]->doc_id, sorted[i]->chunk_idx));
    ai_texts.push_back(&sorted[i]->ai);
    human_texts.push_back(&sorted[i]->human);
  }
  const auto ai_vectors = MarkersOf(ai_texts, keys, "ai", config.jobs);
  const auto human_vectors = MarkersOf(human_texts, keys, "human", config.jobs);

  EvaluationReport report;
  report.ai_profile = AggregateProfile(ai_vectors);
  report.human_profile = AggregateProfile(human_vectors);
  report.options = {config.epsilon, config.tau};
  report.pooled_chrf = config.pooled_chrf;
  report.per_example_shift = config.per_example_shift;

  std::set<std::string> labels;
  for (const ModelOutputs& model : models) {
    if (!labels.insert(model.label).second) {
      throw ValidationError("duplicate model label \"" + model.label + "\"");
    }
    if (model.records.empty()) {
      throw ValidationError("model \"" + model.label + "\" has no outputs");
    }
    std::vector<std::pair<std::size_t, const EvaluationRecord*>> matched;
    std::vector<std::string> unmatched;
    for (const EvaluationRecord& e : model.records) {
      auto it = position.find({e.doc_id, e.chunk_idx});
      if (it == position.end()) {
        unmatched.push_back(RecordKey(e.doc_id, e.chunk_idx));
      } else {
        matched.emplace_back(it->second, &e);
      }
    }
    if (!unmatched.empty()) {
      std::string list;
      for (const std::string& key : unmatched) {
        list += list.empty() ? key : ", " + key;
      }
      throw ValidationError("model \"" + model.label +
                            "\": evaluation keys not in corpus: " + list);
    }
    std::sort(matched.begin(), matched.end());
    for (std::size_t i = 1; i < matched.size(); ++i) {
      if (matched[i].first == matched[i - 1].first) {
        throw ValidationError("model \"" + model.label + "\": duplicate key " +
                              keys[matched[i].first]);
      }
    }

    std::vector<const std::string*> outputs;
    std::vector<std::string> output_keys;
    for (const auto& [pos, e] : matched) {
      outputs.push_back(&e->output);
      output_keys.push_back(keys[pos]);
    }
    const auto output_vectors =
        MarkersOf(outputs, output_keys, "output", config.jobs);

    std::vector<OverlapScores> overlaps(matched.size());
    std::vector<ChrfStats> chrf(config.pooled_chrf ? matched.size() : 0);
    ParallelFor(matched.size(), config.jobs, [&](std::size_t i) {
      const std::string& reference = sorted[matched[i].first]->human;
      overlaps[i] = PairOverlap(reference, *outputs[i]);
      if (config.pooled_chrf) chrf[i] = ComputeChrfStats(reference, *outputs[i]);
    });
    ChrfStats pooled;
    for (const ChrfStats& s : chrf) pooled += s;

    ModelEvaluation evaluation;
    evaluation.label = model.label;
    evaluation.overlap =
        AverageOverlap(overlaps, config.pooled_chrf ? &pooled : nullptr);
    evaluation.profile = AggregateProfile(output_vectors);
    if (config.per_example_shift) {
      std::vector<MarkerVector> ai_matched, human_matched;
      for (const auto& [pos, e] : matched) {
        ai_matched.push_back(ai_vectors[pos]);
        human_matched.push_back(human_vectors[pos]);
      }
      evaluation.shift = ComputePerExampleShiftReport(
          output_vectors, ai_matched, human_matched, report.options);
      evaluation.shift.deviation =
          AbsDeviationReport(evaluation.profile, report.human_profile,
                             report.ai_profile, config.epsilon);
    } else {
      evaluation.shift =
          ComputeShiftReport(evaluation.profile, report.ai_profile,
                             report.human_profile, report.options);
    }
    report.models.push_back(std::move(evaluation));
  }
  return report;
}

}  // namespace styleshift
