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

// The pipelines behind the command-line subcommands: corpus build, split,
// marker analysis and evaluation of model outputs.

#ifndef STYLESHIFT_COMMANDS_H_
#define STYLESHIFT_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "styleshift/corpus.h"
#include "styleshift/markers.h"
#include "styleshift/report.h"
#include "styleshift/segment.h"
#include "styleshift/shift.h"

namespace styleshift {

struct RunConfig {
  std::size_t budget = kDefaultChunkBudget;
  SplitRatios ratios;
  std::uint64_t seed = 0;
  double epsilon = kDefaultEpsilon;
  double tau = kDefaultTau;
  Format format = Format::kMarkdown;
  std::size_t jobs = 1;
  bool pooled_chrf = false;
  bool per_example_shift = false;

  // Throws std::invalid_argument for out-of-range settings.
  void Validate() const;
};

// Runs fn(i) for i in [0, n) on up to `jobs` threads. The first exception
// thrown by any call is rethrown after all workers finish.
void ParallelFor(std::size_t n, std::size_t jobs,
                 const std::function<void(std::size_t)>& fn);

// Full-text AI/human versions of one source document.
struct RawDocument {
  std::string doc_id;
  std::string ai;
  std::string human;
  std::string style;
  std::string model;
  std::string prompt_id;
};

// One JSON object per line with doc_id, ai and human (strings) and optional
// style, model and prompt_id.
std::vector<RawDocument> LoadRawDocuments(std::istream& in);

struct DocumentMismatch {
  std::string doc_id;
  std::size_t ai_chunks = 0;
  std::size_t human_chunks = 0;
};

// Chunk accounting; chunks_in counts positional slots, the larger of the two
// chunk counts per document, so
// chunks_in == chunks_paired + chunks_dropped_short + chunks_unpaired_mismatch.
struct BuildReport {
  std::size_t documents = 0;
  std::size_t chunks_in = 0;
  std::size_t chunks_paired = 0;
  std::size_t chunks_dropped_short = 0;
  std::size_t chunks_unpaired_mismatch = 0;
  std::vector<DocumentMismatch> mismatches;
  std::map<Split, std::size_t> split_records;
  std::map<Split, std::size_t> split_documents;
};

struct BuildResult {
  std::vector<CorpusRecord> records;  // input document order, then chunk_idx
  SplitAssignment assignment;
  BuildReport report;
};

// Sentence-split, chunk, align and filter each document, then assign
// documents to splits. chunk_idx is the positional chunk index, so indices of
// dropped pairs leave gaps. Throws ValidationError on duplicate doc_ids.
BuildResult BuildCorpus(std::span<const RawDocument> documents,
                        const RunConfig& config,
                        const TokenCounter& counter = DefaultTokenCount);

// Records of each split, in input order.
std::map<Split, std::vector<CorpusRecord>> PartitionBySplit(
    std::span<const CorpusRecord> records, const SplitAssignment& assignment);

std::string RenderBuildReport(const BuildReport& report, Format format);

enum class Population { kAi, kHuman, kBoth };

// Throws std::invalid_argument for anything but "ai", "human" or "both".
Population ParsePopulation(std::string_view name);

struct Analysis {
  std::optional<MarkerProfile> ai;
  std::optional<MarkerProfile> human;
};

// Marker profiles of the selected population(s). Throws ValidationError on an
// empty corpus.
Analysis AnalyzeCorpus(std::span<const CorpusRecord> records,
                       Population population, std::size_t jobs = 1);

std::string RenderAnalysis(const Analysis& analysis, Format format);

struct ModelOutputs {
  std::string label;
  std::vector<EvaluationRecord> records;
};

// AI and human profiles come from the whole corpus; each model is scored on
// the records it covers. Every evaluation key must exist in the corpus,
// otherwise ValidationError lists the unmatched keys. Results do not depend
// on `config.jobs`.
EvaluationReport EvaluateOutputs(std::span<const CorpusRecord> corpus,
                                 std::span<const ModelOutputs> models,
                                 const RunConfig& config);

}  // namespace styleshift

#endif  // STYLESHIFT_COMMANDS_H_
