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

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "styleshift/errors.h"

namespace styleshift {
namespace {

const std::string kTenWords =
    "one two three four five six seven eight nine ten";

CorpusRecord Valid(std::string doc, std::int64_t idx) {
  return {std::move(doc), idx, "The AI wrote " + kTenWords + ".",
          "A person wrote " + kTenWords + ".", "essay", "llama", "p1"};
}

bool HasRule(const std::vector<Violation>& vs, const std::string& field,
             const std::string& rule) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) {
    return v.field == field && v.rule == rule;
  });
}

TEST_CASE("LoadCorpus reads a well-formed line") {
  std::istringstream in(
      R"({"doc_id":"d1","chunk_idx":0,"ai":"The AI wrote one two three four five six seven eight nine ten.","human":"A person wrote one two three four five six seven eight nine ten.","style":"essay","model":"llama","prompt_id":"p1"})"
      "\n");
  const auto records = LoadCorpus(in);
  REQUIRE(records.size() == 1);
  CHECK(records[0] == Valid("d1", 0));
}

TEST_CASE("LoadCorpus names the missing field") {
  std::istringstream in(
      R"({"doc_id":"d1","chunk_idx":0,"ai":"x","style":"s","model":"m","prompt_id":"p"})");
  try {
    LoadCorpus(in);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("\"human\"") != std::string::npos);
  }
}

TEST_CASE("LoadCorpus rejects short text citing the word minimum") {
  CorpusRecord r = Valid("d1", 0);
  r.ai = "only eight words are in this AI text";
  std::ostringstream line;
  line << R"({"doc_id":"d1","chunk_idx":0,"ai":")" << r.ai
       << R"(","human":")" << r.human
       << R"(","style":"s","model":"m","prompt_id":"p"})";
  std::istringstream in(line.str());
  try {
    LoadCorpus(in);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    CHECK(what.find("ai") != std::string::npos);
    CHECK(what.find("8 words") != std::string::npos);
    CHECK(what.find("10-word minimum") != std::string::npos);
  }
}

TEST_CASE("LoadCorpus reports malformed lines with their number") {
  std::ostringstream text;
  WriteCorpus(std::vector<CorpusRecord>{Valid("d1", 0)}, text);
  text << "{not json\n";
  std::istringstream in(text.str());
  try {
    LoadCorpus(in);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  std::istringstream array_line("[1,2]\n");
  CHECK_THROWS_AS(LoadCorpus(array_line), ParseError);
}

TEST_CASE("LoadCorpus schema errors") {
  std::istringstream negative(
      R"({"doc_id":"d","chunk_idx":-1,"ai":"a","human":"h","style":"s","model":"m","prompt_id":"p"})");
  CHECK_THROWS_AS(LoadCorpus(negative), ValidationError);
  std::istringstream extra(
      R"({"doc_id":"d","chunk_idx":0,"ai":"a","human":"h","style":"s","model":"m","prompt_id":"p","x":1})");
  CHECK_THROWS_AS(LoadCorpus(extra), ValidationError);
  std::istringstream wrong_type(
      R"({"doc_id":"d","chunk_idx":"0","ai":"a","human":"h","style":"s","model":"m","prompt_id":"p"})");
  CHECK_THROWS_AS(LoadCorpus(wrong_type), ValidationError);
}

TEST_CASE("ValidateRecord reports every violation") {
  CHECK(ValidateRecord(Valid("d", 0)).empty());

  CorpusRecord empty_ai = Valid("d", 0);
  empty_ai.ai = "   ";
  const auto violations = ValidateRecord(empty_ai);
  CHECK(HasRule(violations, "ai", "non_empty"));
  CHECK(HasRule(violations, "ai", "min_words"));
  CHECK_FALSE(HasRule(violations, "human", "min_words"));

  CorpusRecord both = Valid("d", -2);
  both.human = "short";
  const auto more = ValidateRecord(both);
  CHECK(HasRule(more, "chunk_idx", "non_negative"));
  CHECK(HasRule(more, "human", "min_words"));
}

TEST_CASE("ValidateRecords finds duplicate keys") {
  const std::vector<CorpusRecord> batch = {Valid("d", 0), Valid("d", 1),
                                           Valid("d", 0)};
  const auto violations = ValidateRecords(batch);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].rule == "duplicate_key");
  CHECK(violations[0].key == "d#0");

  std::ostringstream out;
  CHECK_THROWS_AS(WriteCorpus(batch, out), ValidationError);
}

TEST_CASE("LoadCorpusPermissive counts dropped records") {
  CorpusRecord short_one = Valid("d", 1);
  short_one.human = "too short";
  std::ostringstream text;
  WriteCorpus(std::vector<CorpusRecord>{Valid("d", 0)}, text);
  text << R"({"doc_id":"d","chunk_idx":1,"ai":")" << short_one.ai
       << R"(","human":"too short","style":"s","model":"m","prompt_id":"p"})"
       << "\n";
  WriteCorpus(std::vector<CorpusRecord>{Valid("d", 0)}, text);
  text << R"({"doc_id":"d"})" << "\n";
  std::istringstream in(text.str());
  const PermissiveLoad load = LoadCorpusPermissive(in);
  CHECK(load.records.size() == 1);
  CHECK(load.dropped == 3);
  CHECK(HasRule(load.violations, "human", "min_words"));
  CHECK(HasRule(load.violations, "doc_id", "duplicate_key"));
}

TEST_CASE("WriteCorpus round trip") {
  SUBCASE("empty list") {
    std::ostringstream out;
    CHECK(WriteCorpus(std::vector<CorpusRecord>{}, out) == 0);
    std::istringstream in(out.str());
    CHECK(LoadCorpus(in).empty());
  }
  SUBCASE("three records with awkward text") {
    std::vector<CorpusRecord> records = {Valid("a", 0), Valid("a", 1),
                                         Valid("b\"q", 7)};
    records[1].human = "Line one has words.\nLine two, \"quoted\", \t tab " +
                       kTenWords + " caf\xC3\xA9 \xE2\x80\x94 done";
    std::ostringstream out;
    const std::size_t bytes = WriteCorpus(records, out);
    const std::string text = out.str();
    CHECK(bytes == text.size());
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);
    std::istringstream in(text);
    CHECK(LoadCorpus(in) == records);
  }
}

TEST_CASE("Round trip property over random valid records") {
  std::mt19937 rng(23);
  const std::string alphabet = "abc XYZ\n\t\"\\,.'-\xC3\xA9";
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<CorpusRecord> records;
    const int n = std::uniform_int_distribution<int>(0, 6)(rng);
    for (int i = 0; i < n; ++i) {
      CorpusRecord r = Valid("doc" + std::to_string(rng() % 3), i);
      for (int k = 0; k < 20; ++k) {
        r.ai.push_back(alphabet[rng() % (alphabet.size() - 2)]);
        r.style.push_back(alphabet[rng() % (alphabet.size() - 2)]);
      }
      records.push_back(std::move(r));
    }
    std::ostringstream out;
    WriteCorpus(records, out);
    std::istringstream in(out.str());
    CHECK(LoadCorpus(in) == records);
  }
}

TEST_CASE("Evaluation records round trip and validate") {
  const std::vector<EvaluationRecord> records = {{"d", 0, "An output.\nMore."},
                                                 {"e", 3, "Other."}};
  std::ostringstream out;
  WriteEvaluations(records, out);
  std::istringstream in(out.str());
  CHECK(LoadEvaluations(in) == records);

  std::istringstream blank(R"({"doc_id":"d","chunk_idx":0,"output":"  "})");
  CHECK_THROWS_AS(LoadEvaluations(blank), ValidationError);
  std::istringstream dup(
      R"({"doc_id":"d","chunk_idx":0,"output":"x"})"
      "\n"
      R"({"doc_id":"d","chunk_idx":0,"output":"y"})");
  CHECK_THROWS_AS(LoadEvaluations(dup), ValidationError);
}

TEST_CASE("SplitByDocument keeps documents together") {
  std::vector<CorpusRecord> one_doc;
  for (int i = 0; i < 5; ++i) one_doc.push_back(Valid("only", i));
  const auto assignment = SplitByDocument(one_doc, {0.5, 0.25, 0.25}, 1);
  CHECK(assignment.by_doc.size() == 1);

  const auto again = SplitByDocument(one_doc, {0.5, 0.25, 0.25}, 1);
  CHECK(again.by_doc == assignment.by_doc);
}

TEST_CASE("SplitByDocument argument checks") {
  const std::vector<CorpusRecord> records = {Valid("a", 0)};
  CHECK_THROWS_AS(SplitByDocument(records, {0.5, 0.5, 0.5}, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(SplitByDocument(records, {1.1, -0.1, 0.0}, 0),
                  std::invalid_argument);
  CHECK(SplitByDocument(records, {0, 0, 1}, 0).Of("a") == Split::kTest);
  CHECK(SplitByDocument(records, {1, 0, 0}, 0).Of("a") == Split::kTrain);
}

TEST_CASE("SplitByDocument realized sizes track the ratios") {
  std::vector<CorpusRecord> records;
  for (int i = 0; i < 10000; ++i) records.push_back(Valid("doc-" + std::to_string(i), 0));
  for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 2026ULL}) {
    const auto assignment = SplitByDocument(records, {0.9, 0.05, 0.05}, seed);
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& [doc, split] : assignment.by_doc) {
      ++counts[static_cast<int>(split)];
    }
    CHECK(counts[0] + counts[1] + counts[2] == 10000);
    CHECK(std::abs(static_cast<double>(counts[0]) - 9000) <= 200);
    CHECK(std::abs(static_cast<double>(counts[1]) - 500) <= 200);
    CHECK(std::abs(static_cast<double>(counts[2]) - 500) <= 200);
  }
}

TEST_CASE("DocumentPosition is stable and seed dependent") {
  CHECK(DocumentPosition("abc", 1) == DocumentPosition("abc", 1));
  CHECK(DocumentPosition("abc", 1) != DocumentPosition("abc", 2));
  const double u = DocumentPosition("abc", 1);
  CHECK(u >= 0.0);
  CHECK(u < 1.0);
}

}  // namespace
}  // namespace styleshift
