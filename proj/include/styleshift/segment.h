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

// Sentence splitting, word tokenization, syllable estimation and the
// sentence-aware chunker used to build aligned AI/human chunk pairs.

#ifndef STYLESHIFT_SEGMENT_H_
#define STYLESHIFT_SEGMENT_H_

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace styleshift {

struct Sentence {
  std::string text;
  std::size_t word_count = 0;

  bool operator==(const Sentence&) const = default;
};

// A run of whole sentences. `text` is the sentences joined by single spaces.
struct Chunk {
  std::string text;
  std::vector<Sentence> sentences;
  std::size_t token_count = 0;
  std::size_t word_count = 0;
};

// Counts tokens in a piece of text. Must return 0 for empty text.
using TokenCounter = std::function<std::size_t(std::string_view)>;

inline constexpr std::size_t kDefaultChunkBudget = 200;

// Splits on '.', '!' or '?' (plus any trailing terminators and closing
// quotes/brackets) when followed by whitespace and an uppercase letter, digit,
// opening quote or bracket. A period ending one of the fixed abbreviations
// (Dr. Mr. Mrs. Ms. Prof. e.g. i.e. etc. vs. Fig. Eq. No. St.) never splits.
//
// Fragments with no word tokens are merged into a neighbouring sentence so
// every returned sentence carries at least one word, except when the whole
// input has no words, in which case a single zero-word sentence is returned.
std::vector<Sentence> SplitSentences(std::string_view text);

// Maximal runs of letters and digits, keeping apostrophes and hyphens that sit
// between two word characters. Any code point >= U+0080 outside the
// punctuation blocks counts as a letter.
std::vector<std::string> TokenizeWords(std::string_view text);

// Word tokens plus every non-space character outside a word token. An
// approximation of a subword tokenizer's count; see TokenCounter.
std::size_t DefaultTokenCount(std::string_view text);

// Vowel-group syllable heuristic. Throws std::invalid_argument on empty input.
std::size_t CountSyllables(std::string_view word);

// Greedy left-to-right grouping: a sentence joins the current chunk iff the
// chunk's token count plus the sentence's stays within `budget`. A sentence
// that alone exceeds the budget becomes its own chunk.
std::vector<Chunk> ChunkDocument(const std::vector<Sentence>& sentences,
                                 std::size_t budget,
                                 const TokenCounter& counter);

// Convenience overload using DefaultTokenCount.
std::vector<Chunk> ChunkDocument(const std::vector<Sentence>& sentences,
                                 std::size_t budget = kDefaultChunkBudget);

struct ChunkPair {
  std::size_t index = 0;
  Chunk ai;
  Chunk human;
};

struct Alignment {
  std::vector<ChunkPair> pairs;
  bool mismatch = false;
  std::size_t surplus_ai = 0;
  std::size_t surplus_human = 0;
};

// Positional alignment: pair i holds the i-th chunk of each side. Surplus
// chunks on the longer side are counted but not paired.
Alignment AlignChunks(const std::vector<Chunk>& ai_chunks,
                      const std::vector<Chunk>& human_chunks);

// ASCII lowercase; bytes >= 0x80 pass through unchanged.
std::string AsciiLower(std::string_view text);

// Number of UTF-8 code points (continuation bytes are not counted).
std::size_t Utf8Length(std::string_view text);

}  // namespace styleshift

#endif  // STYLESHIFT_SEGMENT_H_
