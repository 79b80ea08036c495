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

// Parallel AI/human corpus records, their validation, line-delimited JSON
// persistence and document-disjoint train/validation/test splitting.

#ifndef STYLESHIFT_CORPUS_H_
#define STYLESHIFT_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace styleshift {

inline constexpr std::size_t kMinChunkWords = 10;

struct CorpusRecord {
  std::string doc_id;
  std::int64_t chunk_idx = 0;
  std::string ai;
  std::string human;
  std::string style;
  std::string model;
  std::string prompt_id;

  bool operator==(const CorpusRecord&) const = default;
};

// A model's rewrite of the AI text of one corpus record.
struct EvaluationRecord {
  std::string doc_id;
  std::int64_t chunk_idx = 0;
  std::string output;

  bool operator==(const EvaluationRecord&) const = default;
};

// "doc_id#chunk_idx", used in error messages.
std::string RecordKey(std::string_view doc_id, std::int64_t chunk_idx);

struct Violation {
  std::string key;    // record key, see RecordKey
  std::string field;  // offending field name
  std::string rule;   // "non_empty", "min_words", "non_negative", "duplicate_key"
  std::string message;
};

// Every violated invariant of one record, in field order. Empty when valid.
std::vector<Violation> ValidateRecord(const CorpusRecord& record);

// Per-record violations plus duplicate (doc_id, chunk_idx) keys.
std::vector<Violation> ValidateRecords(std::span<const CorpusRecord> records);

// Strict load: throws ParseError (with line number) on malformed lines and
// ValidationError on the first invalid record or duplicate key.
std::vector<CorpusRecord> LoadCorpus(std::istream& in);
std::vector<CorpusRecord> LoadCorpusFile(const std::string& path);

struct PermissiveLoad {
  std::vector<CorpusRecord> records;
  std::size_t dropped = 0;
  std::vector<Violation> violations;
};

// Drops invalid or duplicate records instead of failing. Malformed lines still
// throw ParseError.
PermissiveLoad LoadCorpusPermissive(std::istream& in);

// One JSON object per line with the seven fields in schema order. Returns the
// number of bytes written. Throws ValidationError if a record is invalid and
// IoError if the stream fails.
std::size_t WriteCorpus(std::span<const CorpusRecord> records,
                        std::ostream& out);
void WriteCorpusFile(std::span<const CorpusRecord> records,
                     const std::string& path);

std::vector<EvaluationRecord> LoadEvaluations(std::istream& in);
std::vector<EvaluationRecord> LoadEvaluationFile(const std::string& path);
std::size_t WriteEvaluations(std::span<const EvaluationRecord> records,
                             std::ostream& out);

enum class Split { kTrain, kValidation, kTest };

std::string_view SplitName(Split split);

struct SplitRatios {
  double train = 0.9;
  double validation = 0.05;
  double test = 0.05;
};

// Throws std::invalid_argument unless all ratios are non-negative and sum to
// 1 within 1e-9.
void CheckRatios(const SplitRatios& ratios);

struct SplitAssignment {
  std::map<std::string, Split> by_doc;
  SplitRatios ratios;
  std::uint64_t seed = 0;

  Split Of(const std::string& doc_id) const { return by_doc.at(doc_id); }
};

// Position of a document in [0, 1), a stable function of (doc_id, seed).
double DocumentPosition(std::string_view doc_id, std::uint64_t seed);

// Each document lands in the bucket of the cumulative ratios that contains its
// DocumentPosition, so the result does not depend on record order.
SplitAssignment SplitByDocument(std::span<const CorpusRecord> records,
                                const SplitRatios& ratios, std::uint64_t seed);

}  // namespace styleshift

#endif  // STYLESHIFT_CORPUS_H_
