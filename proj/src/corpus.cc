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

#include "styleshift/corpus.h"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "styleshift/errors.h"
#include "styleshift/segment.h"

namespace styleshift {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kCorpusFields[] = {"doc_id", "ai",    "human",
                                         "style",  "model", "prompt_id"};

// Reads non-blank lines, calling `fn(line_number, parsed_object)`.
template <typename Fn>
void ForEachObject(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json value;
    try {
      value = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw ParseError(number, e.what());
    }
    if (!value.is_object()) throw ParseError(number, "expected a JSON object");
    fn(number, value);
  }
  if (in.bad()) throw IoError("read failure");
}

std::string SchemaError(std::size_t line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

void CheckFields(const Json& object, std::size_t line,
                 const std::set<std::string>& allowed) {
  for (const auto& [name, value] : object.items()) {
    if (!allowed.contains(name)) {
      throw ValidationError(SchemaError(line, "unknown field \"" + name + "\""));
    }
  }
  for (const std::string& name : allowed) {
    if (!object.contains(name)) {
      throw ValidationError(
          SchemaError(line, "missing field \"" + name + "\""));
    }
  }
}

std::string GetString(const Json& object, const char* field, std::size_t line) {
  const Json& value = object.at(field);
  if (!value.is_string()) {
    throw ValidationError(SchemaError(
        line, std::string("field \"") + field + "\" must be a string"));
  }
  return value.get<std::string>();
}

std::int64_t GetIndex(const Json& object, std::size_t line) {
  const Json& value = object.at("chunk_idx");
  if (!value.is_number_integer()) {
    throw ValidationError(
        SchemaError(line, "field \"chunk_idx\" must be an integer"));
  }
  return value.get<std::int64_t>();
}

CorpusRecord RecordFromJson(const Json& object, std::size_t line) {
  static const std::set<std::string> kAllowed = {
      "doc_id", "chunk_idx", "ai", "human", "style", "model", "prompt_id"};
  CheckFields(object, line, kAllowed);
  CorpusRecord record;
  record.doc_id = GetString(object, "doc_id", line);
  record.chunk_idx = GetIndex(object, line);
  record.ai = GetString(object, "ai", line);
  record.human = GetString(object, "human", line);
  record.style = GetString(object, "style", line);
  record.model = GetString(object, "model", line);
  record.prompt_id = GetString(object, "prompt_id", line);
  return record;
}

std::string Describe(const std::vector<Violation>& violations) {
  std::string out;
  for (const Violation& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.key + " " + v.field + ": " + v.message;
  }
  return out;
}

bool IsBlank(std::string_view text) {
  return text.find_first_not_of(" \t\r\n\f\v") == std::string_view::npos;
}

void CheckText(const std::string& key, const char* field,
               const std::string& text, std::vector<Violation>& out) {
  if (IsBlank(text)) {
    out.push_back({key, field, "non_empty", "text is empty after trimming"});
  }
  const std::size_t words = TokenizeWords(text).size();
  if (words < kMinChunkWords) {
    out.push_back({key, field, "min_words",
                   std::to_string(words) + " words, below the " +
                       std::to_string(kMinChunkWords) + "-word minimum"});
  }
}

std::size_t WriteLine(const Json& object, std::ostream& out) {
  std::string line;
  try {
    line = object.dump();
  } catch (const Json::type_error& e) {
    throw ValidationError(std::string("cannot encode record: ") + e.what());
  }
  line.push_back('\n');
  out.write(line.data(), static_cast<std::streamsize>(line.size()));
  if (!out) throw IoError("write failure");
  return line.size();
}

std::uint64_t Fnv1a(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::string RecordKey(std::string_view doc_id, std::int64_t chunk_idx) {
  return std::string(doc_id) + "#" + std::to_string(chunk_idx);
}

std::vector<Violation> ValidateRecord(const CorpusRecord& record) {
  std::vector<Violation> violations;
  const std::string key = RecordKey(record.doc_id, record.chunk_idx);
  if (IsBlank(record.doc_id)) {
    violations.push_back({key, "doc_id", "non_empty", "doc_id is empty"});
  }
  if (record.chunk_idx < 0) {
    violations.push_back(
        {key, "chunk_idx", "non_negative", "chunk_idx is negative"});
  }
  CheckText(key, "ai", record.ai, violations);
  CheckText(key, "human", record.human, violations);
  return violations;
}

std::vector<Violation> ValidateRecords(std::span<const CorpusRecord> records) {
  std::vector<Violation> violations;
  std::set<std::pair<std::string, std::int64_t>> seen;
  for (const CorpusRecord& record : records) {
    auto own = ValidateRecord(record);
    violations.insert(violations.end(), own.begin(), own.end());
    if (!seen.emplace(record.doc_id, record.chunk_idx).second) {
      violations.push_back({RecordKey(record.doc_id, record.chunk_idx),
                            "doc_id", "duplicate_key",
                            "duplicate (doc_id, chunk_idx)"});
    }
  }
  return violations;
}

std::vector<CorpusRecord> LoadCorpus(std::istream& in) {
  std::vector<CorpusRecord> records;
  std::set<std::pair<std::string, std::int64_t>> seen;
  ForEachObject(in, [&](std::size_t line, const Json& object) {
    CorpusRecord record = RecordFromJson(object, line);
    const auto violations = ValidateRecord(record);
    if (!violations.empty()) {
      throw ValidationError(SchemaError(line, Describe(violations)));
    }
    if (!seen.emplace(record.doc_id, record.chunk_idx).second) {
      throw ValidationError(SchemaError(
          line, "duplicate key " + RecordKey(record.doc_id, record.chunk_idx)));
    }
    records.push_back(std::move(record));
  });
  return records;
}

std::vector<CorpusRecord> LoadCorpusFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus file " + path);
  try {
    return LoadCorpus(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

PermissiveLoad LoadCorpusPermissive(std::istream& in) {
  PermissiveLoad result;
  std::set<std::pair<std::string, std::int64_t>> seen;
  ForEachObject(in, [&](std::size_t line, const Json& object) {
    CorpusRecord record;
    try {
      record = RecordFromJson(object, line);
    } catch (const ValidationError& e) {
      ++result.dropped;
      result.violations.push_back({"line " + std::to_string(line), "", "schema",
                                   e.what()});
      return;
    }
    auto violations = ValidateRecord(record);
    if (violations.empty() &&
        !seen.emplace(record.doc_id, record.chunk_idx).second) {
      violations.push_back({RecordKey(record.doc_id, record.chunk_idx),
                            "doc_id", "duplicate_key",
                            "duplicate (doc_id, chunk_idx)"});
    }
    if (!violations.empty()) {
      ++result.dropped;
      result.violations.insert(result.violations.end(), violations.begin(),
                               violations.end());
      return;
    }
    result.records.push_back(std::move(record));
  });
  return result;
}

std::size_t WriteCorpus(std::span<const CorpusRecord> records,
                        std::ostream& out) {
  const auto violations = ValidateRecords(records);
  if (!violations.empty()) throw ValidationError(Describe(violations));
  std::size_t bytes = 0;
  for (const CorpusRecord& r : records) {
    Json object;
    object["doc_id"] = r.doc_id;
    object["chunk_idx"] = r.chunk_idx;
    object["ai"] = r.ai;
    object["human"] = r.human;
    object["style"] = r.style;
    object["model"] = r.model;
    object["prompt_id"] = r.prompt_id;
    bytes += WriteLine(object, out);
  }
  return bytes;
}

void WriteCorpusFile(std::span<const CorpusRecord> records,
                     const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  WriteCorpus(records, out);
  out.close();
  if (!out) throw IoError("write failure on " + path);
}

std::vector<EvaluationRecord> LoadEvaluations(std::istream& in) {
  static const std::set<std::string> kAllowed = {"doc_id", "chunk_idx",
                                                 "output"};
  std::vector<EvaluationRecord> records;
  std::set<std::pair<std::string, std::int64_t>> seen;
  ForEachObject(in, [&](std::size_t line, const Json& object) {
    CheckFields(object, line, kAllowed);
    EvaluationRecord record;
    record.doc_id = GetString(object, "doc_id", line);
    record.chunk_idx = GetIndex(object, line);
    record.output = GetString(object, "output", line);
    const std::string key = RecordKey(record.doc_id, record.chunk_idx);
    if (IsBlank(record.output)) {
      throw ValidationError(SchemaError(line, key + " output: text is empty"));
    }
    if (!seen.emplace(record.doc_id, record.chunk_idx).second) {
      throw ValidationError(SchemaError(line, "duplicate key " + key));
    }
    records.push_back(std::move(record));
  });
  return records;
}

std::vector<EvaluationRecord> LoadEvaluationFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open evaluation file " + path);
  try {
    return LoadEvaluations(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::size_t WriteEvaluations(std::span<const EvaluationRecord> records,
                             std::ostream& out) {
  std::size_t bytes = 0;
  for (const EvaluationRecord& r : records) {
    Json object;
    object["doc_id"] = r.doc_id;
    object["chunk_idx"] = r.chunk_idx;
    object["output"] = r.output;
    bytes += WriteLine(object, out);
  }
  return bytes;
}

std::string_view SplitName(Split split) {
  switch (split) {
    case Split::kTrain:
      return "train";
    case Split::kValidation:
      return "validation";
    case Split::kTest:
      return "test";
  }
  return "unknown";
}

void CheckRatios(const SplitRatios& ratios) {
  if (!(ratios.train >= 0) || !(ratios.validation >= 0) ||
      !(ratios.test >= 0)) {
    throw std::invalid_argument("split ratios must be non-negative");
  }
  const double sum = ratios.train + ratios.validation + ratios.test;
  if (std::abs(sum - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "split ratios must sum to 1, got " << sum;
    throw std::invalid_argument(msg.str());
  }
}

double DocumentPosition(std::string_view doc_id, std::uint64_t seed) {
  const std::uint64_t hash = SplitMix64(Fnv1a(doc_id) ^ SplitMix64(seed));
  return static_cast<double>(hash >> 11) * 0x1.0p-53;
}

SplitAssignment SplitByDocument(std::span<const CorpusRecord> records,
                                const SplitRatios& ratios, std::uint64_t seed) {
  CheckRatios(ratios);
  SplitAssignment assignment;
  assignment.ratios = ratios;
  assignment.seed = seed;
  const double train_end = ratios.train;
  const double validation_end = ratios.train + ratios.validation;
  for (const CorpusRecord& record : records) {
    if (assignment.by_doc.contains(record.doc_id)) continue;
    const double u = DocumentPosition(record.doc_id, seed);
    Split split = Split::kTest;
    if (u < train_end) {
      split = Split::kTrain;
    } else if (u < validation_end) {
      split = Split::kValidation;
    }
    assignment.by_doc.emplace(record.doc_id, split);
  }
  return assignment;
}

}  // namespace styleshift
