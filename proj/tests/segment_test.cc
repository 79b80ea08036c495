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

#include "styleshift/segment.h"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"

namespace styleshift {
namespace {

using Words = std::vector<std::string>;

std::vector<std::string> Texts(const std::vector<Sentence>& sentences) {
  std::vector<std::string> out;
  for (const Sentence& s : sentences) out.push_back(s.text);
  return out;
}

std::string NonSpace(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c != ' ' && c != '\n' && c != '\t') out.push_back(c);
  }
  return out;
}

Sentence WordsSentence(std::size_t n) {
  std::string text;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) text.push_back(' ');
    text += "w" + std::to_string(i);
  }
  return {text, n};
}

TEST_CASE("SplitSentences on plain terminators") {
  CHECK(Texts(SplitSentences("It rained. We left.")) ==
        Words{"It rained.", "We left."});
  CHECK(Texts(SplitSentences("No terminator here")) ==
        Words{"No terminator here"});
  CHECK(SplitSentences("").empty());
  CHECK(SplitSentences("   \n ").empty());
}

TEST_CASE("SplitSentences keeps abbreviations inside sentences") {
  CHECK(Texts(SplitSentences("Dr. Smith arrived. He sat.")) ==
        Words{"Dr. Smith arrived.", "He sat."});
  CHECK(Texts(SplitSentences("Use tools, e.g. Hammers. Then stop.")) ==
        Words{"Use tools, e.g. Hammers.", "Then stop."});
  CHECK(Texts(SplitSentences("See Fig. 3 for details. It helps.")) ==
        Words{"See Fig. 3 for details.", "It helps."});
}

TEST_CASE("SplitSentences needs an opener after the terminator") {
  CHECK(Texts(SplitSentences("It costs 3.5 dollars. ok then")) ==
        Words{"It costs 3.5 dollars. ok then"});
  CHECK(Texts(SplitSentences("Really?! \"Yes.\" Fine.")) ==
        Words{"Really?!", "\"Yes.\"", "Fine."});
  CHECK(Texts(SplitSentences("It ended. 2024 began.")) ==
        Words{"It ended.", "2024 began."});
}

TEST_CASE("SplitSentences merges word-less fragments") {
  const auto sentences = SplitSentences("Wait. ... Then go.");
  CHECK(Texts(sentences) == Words{"Wait. ...", "Then go."});
  const auto leading = SplitSentences("... Then go.");
  REQUIRE(leading.size() == 1);
  CHECK(leading[0].word_count == 2);

  const auto only_punct = SplitSentences("?! ...");
  REQUIRE(only_punct.size() == 1);
  CHECK(only_punct[0].word_count == 0);
}

TEST_CASE("SplitSentences preserves non-space characters in order") {
  std::mt19937 rng(7);
  const std::vector<std::string> pieces = {
      "Alpha", "beta", "Dr.", "e.g.", "x.", "Y!", "?", "\"Quoted.\"", "3.",
      "don't", ",",    "...", "Mr.",  "z",  "End.", "(Paren)", "St."};
  for (int trial = 0; trial < 300; ++trial) {
    std::string text;
    const int n = std::uniform_int_distribution<int>(0, 25)(rng);
    for (int i = 0; i < n; ++i) {
      text += pieces[std::uniform_int_distribution<std::size_t>(
          0, pieces.size() - 1)(rng)];
      text += (rng() % 5 == 0) ? "  \n" : " ";
    }
    std::string joined;
    for (const Sentence& s : SplitSentences(text)) {
      CHECK_FALSE(NonSpace(s.text).empty());
      CHECK(s.word_count == TokenizeWords(s.text).size());
      joined += s.text + " ";
    }
    CHECK(NonSpace(joined) == NonSpace(text));
  }
}

TEST_CASE("TokenizeWords keeps internal apostrophes and hyphens") {
  CHECK(TokenizeWords("don't stop") == Words{"don't", "stop"});
  CHECK(TokenizeWords("well-known fact.") == Words{"well-known", "fact"});
  CHECK(TokenizeWords("...").empty());
  CHECK(TokenizeWords("").empty());
  CHECK(TokenizeWords("'quoted' -dash- end-") ==
        Words{"quoted", "dash", "end"});
  CHECK(TokenizeWords("well--known") == Words{"well", "known"});
  CHECK(TokenizeWords("It\xE2\x80\x99s caf\xC3\xA9 \xE2\x80\x94 ok") ==
        Words{"It\xE2\x80\x99s", "caf\xC3\xA9", "ok"});
  CHECK(TokenizeWords("\xE2\x80\x9CHi\xE2\x80\x9D") == Words{"Hi"});
  CHECK(TokenizeWords("covid-19 in 2020") == Words{"covid-19", "in", "2020"});
}

TEST_CASE("TokenizeWords is idempotent over its own output") {
  std::mt19937 rng(11);
  const std::string alphabet = "ab'- .,!?Z9\"";
  for (int trial = 0; trial < 500; ++trial) {
    std::string text;
    const int n = std::uniform_int_distribution<int>(0, 40)(rng);
    for (int i = 0; i < n; ++i) text.push_back(alphabet[rng() % alphabet.size()]);
    const auto tokens = TokenizeWords(text);
    std::string joined;
    for (const auto& t : tokens) joined += t + " ";
    CHECK(TokenizeWords(joined) == tokens);
  }
}

TEST_CASE("DefaultTokenCount counts words and punctuation") {
  CHECK(DefaultTokenCount("") == 0);
  CHECK(DefaultTokenCount("Hello, world!") == 4);
  CHECK(DefaultTokenCount("don't stop.") == 3);
  CHECK(DefaultTokenCount("\xE2\x80\x9CHi\xE2\x80\x9D") == 3);
}

TEST_CASE("DefaultTokenCount is additive over space-joined text") {
  std::mt19937 rng(3);
  const std::string alphabet = "ab'- .,!?";
  const auto random_text = [&] {
    std::string s;
    const int n = std::uniform_int_distribution<int>(0, 20)(rng);
    for (int i = 0; i < n; ++i) s.push_back(alphabet[rng() % alphabet.size()]);
    return s;
  };
  for (int trial = 0; trial < 300; ++trial) {
    const std::string a = random_text(), b = random_text();
    const std::size_t joined = DefaultTokenCount(a + " " + b);
    CHECK(joined == DefaultTokenCount(a) + DefaultTokenCount(b));
    CHECK(joined >= std::max(DefaultTokenCount(a), DefaultTokenCount(b)));
  }
}

TEST_CASE("CountSyllables heuristic") {
  CHECK(CountSyllables("cat") == 1);
  CHECK(CountSyllables("table") == 2);
  CHECK(CountSyllables("rhythm") == 1);
  CHECK(CountSyllables("cake") == 1);
  CHECK(CountSyllables("the") == 1);
  CHECK(CountSyllables("agree") == 2);
  CHECK(CountSyllables("Reading") == 2);
  CHECK(CountSyllables("2024") == 1);
  CHECK_THROWS_AS(CountSyllables(""), std::invalid_argument);
}

TEST_CASE("CountSyllables never returns zero") {
  std::mt19937 rng(5);
  const std::string alphabet = "abcdeilmnorstuyz'-";
  for (int trial = 0; trial < 1000; ++trial) {
    std::string word;
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    for (int i = 0; i < n; ++i) word.push_back(alphabet[rng() % alphabet.size()]);
    CHECK(CountSyllables(word) >= 1);
  }
}

TEST_CASE("ChunkDocument greedy examples") {
  SUBCASE("single sentence under budget") {
    const auto chunks = ChunkDocument({WordsSentence(30)}, 200);
    REQUIRE(chunks.size() == 1);
    CHECK(chunks[0].token_count == 30);
  }
  SUBCASE("two sentences overflowing the budget") {
    const auto chunks =
        ChunkDocument({WordsSentence(120), WordsSentence(120)}, 200);
    CHECK(chunks.size() == 2);
  }
  SUBCASE("oversized sentence becomes its own chunk") {
    const auto chunks = ChunkDocument(
        {WordsSentence(10), WordsSentence(250), WordsSentence(10)}, 200);
    REQUIRE(chunks.size() == 3);
    CHECK(chunks[1].token_count == 250);
    CHECK(chunks[1].sentences.size() == 1);
  }
  SUBCASE("text joins sentences with single spaces") {
    const auto chunks = ChunkDocument(
        {{"It rained.", 2}, {"We left.", 2}}, 200);
    REQUIRE(chunks.size() == 1);
    CHECK(chunks[0].text == "It rained. We left.");
    CHECK(chunks[0].word_count == 4);
    CHECK(chunks[0].token_count == 6);
  }
  SUBCASE("empty input and zero budget") {
    CHECK(ChunkDocument({}, 200).empty());
    CHECK_THROWS_AS(ChunkDocument({WordsSentence(3)}, 0),
                    std::invalid_argument);
  }
  SUBCASE("custom counter") {
    const TokenCounter bytes = [](std::string_view t) { return t.size(); };
    const auto chunks =
        ChunkDocument({{"aaaa", 1}, {"bbbb", 1}, {"cc", 1}}, 6, bytes);
    REQUIRE(chunks.size() == 2);
    CHECK(chunks[1].text == "bbbb cc");
  }
}

TEST_CASE("ChunkDocument properties over random documents") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t budget =
        std::uniform_int_distribution<std::size_t>(1, 60)(rng);
    std::vector<Sentence> sentences;
    const int n = std::uniform_int_distribution<int>(0, 30)(rng);
    for (int i = 0; i < n; ++i) {
      sentences.push_back(WordsSentence(
          std::uniform_int_distribution<std::size_t>(1, 70)(rng)));
    }
    const auto chunks = ChunkDocument(sentences, budget);
    std::vector<Sentence> flattened;
    for (std::size_t c = 0; c < chunks.size(); ++c) {
      const Chunk& chunk = chunks[c];
      REQUIRE_FALSE(chunk.sentences.empty());
      if (chunk.sentences.size() > 1) CHECK(chunk.token_count <= budget);
      if (c + 1 < chunks.size()) {
        const std::size_t next =
            DefaultTokenCount(chunks[c + 1].sentences.front().text);
        CHECK(chunk.token_count + next > budget);
      }
      flattened.insert(flattened.end(), chunk.sentences.begin(),
                       chunk.sentences.end());
    }
    CHECK(flattened == sentences);
  }
}

TEST_CASE("AlignChunks pairs positionally") {
  const auto make = [](std::size_t n) {
    std::vector<Chunk> chunks(n);
    for (std::size_t i = 0; i < n; ++i) chunks[i].text = std::to_string(i);
    return chunks;
  };
  const Alignment even = AlignChunks(make(3), make(3));
  CHECK(even.pairs.size() == 3);
  CHECK_FALSE(even.mismatch);
  CHECK(even.pairs[2].index == 2);
  CHECK(even.pairs[2].ai.text == "2");

  const Alignment uneven = AlignChunks(make(4), make(3));
  CHECK(uneven.pairs.size() == 3);
  CHECK(uneven.mismatch);
  CHECK(uneven.surplus_ai == 1);
  CHECK(uneven.surplus_human == 0);

  const Alignment empty = AlignChunks({}, {});
  CHECK(empty.pairs.empty());
  CHECK_FALSE(empty.mismatch);
}

}  // namespace
}  // namespace styleshift
