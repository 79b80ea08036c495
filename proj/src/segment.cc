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

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace styleshift {
namespace {

struct CodePoint {
  char32_t value;
  std::size_t length;
};

// Decodes one UTF-8 sequence at `pos`. Invalid bytes decode as U+FFFD with
// length 1 so scanning always makes progress.
CodePoint DecodeAt(std::string_view text, std::size_t pos) {
  const auto byte = [&](std::size_t i) {
    return static_cast<unsigned char>(text[i]);
  };
  const unsigned char lead = byte(pos);
  if (lead < 0x80) return {lead, 1};
  std::size_t length = 0;
  char32_t value = 0;
  if ((lead & 0xE0) == 0xC0) {
    length = 2;
    value = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    length = 3;
    value = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    length = 4;
    value = lead & 0x07;
  } else {
    return {0xFFFD, 1};
  }
  if (pos + length > text.size()) return {0xFFFD, 1};
  for (std::size_t i = 1; i < length; ++i) {
    const unsigned char next = byte(pos + i);
    if ((next & 0xC0) != 0x80) return {0xFFFD, 1};
    value = (value << 6) | (next & 0x3F);
  }
  return {value, length};
}

bool IsSpace(char32_t c) {
  switch (c) {
    case ' ': case '\t': case '\n': case '\r': case '\f': case '\v':
    case 0x00A0: case 0x1680: case 0x2028: case 0x2029: case 0x202F:
    case 0x205F: case 0x3000: case 0xFEFF:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200B;
  }
}

bool IsApostrophe(char32_t c) { return c == '\'' || c == 0x2019 || c == 0x02BC; }

bool IsHyphen(char32_t c) { return c == '-' || c == 0x2010 || c == 0x2011; }

bool IsWordChar(char32_t c) {
  if (c < 0x80) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9');
  }
  if (c <= 0xBF || c == 0xD7 || c == 0xF7) return false;
  if (c >= 0x2000 && c <= 0x2BFF) return false;  // punctuation, symbols
  if (c >= 0x2E00 && c <= 0x2E7F) return false;
  if (c >= 0x3000 && c <= 0x303F) return false;
  if (c >= 0xFE30 && c <= 0xFE6F) return false;
  if (c >= 0xFF00 && c <= 0xFF0F) return false;
  if (c >= 0x1F000) return false;  // emoji and pictographs
  return c != 0xFFFD && c != 0xFEFF;
}

// Byte spans [begin, end) of word tokens.
std::vector<std::pair<std::size_t, std::size_t>> WordSpans(
    std::string_view text) {
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  std::size_t pos = 0;
  bool in_word = false;
  std::size_t begin = 0;
  while (pos < text.size()) {
    const CodePoint cp = DecodeAt(text, pos);
    if (IsWordChar(cp.value)) {
      if (!in_word) {
        in_word = true;
        begin = pos;
      }
      pos += cp.length;
      continue;
    }
    if (in_word && (IsApostrophe(cp.value) || IsHyphen(cp.value)) &&
        pos + cp.length < text.size() &&
        IsWordChar(DecodeAt(text, pos + cp.length).value)) {
      pos += cp.length;
      continue;
    }
    if (in_word) {
      spans.emplace_back(begin, pos);
      in_word = false;
    }
    pos += cp.length;
  }
  if (in_word) spans.emplace_back(begin, text.size());
  return spans;
}

std::string_view Trim(std::string_view text) {
  std::size_t begin = 0;
  while (begin < text.size()) {
    const CodePoint cp = DecodeAt(text, begin);
    if (!IsSpace(cp.value)) break;
    begin += cp.length;
  }
  std::size_t end = text.size();
  while (end > begin) {
    // Walk back to the start of the last code point.
    std::size_t start = end - 1;
    while (start > begin &&
           (static_cast<unsigned char>(text[start]) & 0xC0) == 0x80) {
      --start;
    }
    if (!IsSpace(DecodeAt(text, start).value)) break;
    end = start;
  }
  return text.substr(begin, end - begin);
}

bool IsTerminator(char32_t c) { return c == '.' || c == '!' || c == '?'; }

bool IsCloser(char32_t c) {
  return c == '"' || c == '\'' || c == ')' || c == ']' || c == 0x2019 ||
         c == 0x201D || c == 0x00BB;
}

bool IsOpener(char32_t c) {
  if ((c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9')) return true;
  if (c >= 0x00C0 && c <= 0x00DE && c != 0x00D7) return true;
  return c == '"' || c == '\'' || c == '(' || c == '[' || c == 0x2018 ||
         c == 0x201C || c == 0x00AB;
}

constexpr std::array<std::string_view, 13> kAbbreviations = {
    "dr.", "mr.", "mrs.", "ms.", "prof.", "e.g.", "i.e.",
    "etc.", "vs.", "fig.", "eq.", "no.", "st."};

// True when the period at `period` ends a listed abbreviation.
bool EndsAbbreviation(std::string_view text, std::size_t period) {
  std::size_t begin = period;
  while (begin > 0 && !IsSpace(static_cast<unsigned char>(text[begin - 1]))) {
    --begin;
  }
  while (begin < period && (text[begin] == '"' || text[begin] == '\'' ||
                            text[begin] == '(' || text[begin] == '[')) {
    ++begin;
  }
  const std::string word = AsciiLower(text.substr(begin, period - begin + 1));
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), word) !=
         kAbbreviations.end();
}

std::vector<std::string_view> SplitRaw(std::string_view text) {
  std::vector<std::string_view> pieces;
  std::size_t start = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const CodePoint cp = DecodeAt(text, pos);
    if (!IsTerminator(cp.value)) {
      pos += cp.length;
      continue;
    }
    std::size_t end = pos + cp.length;
    while (end < text.size()) {
      const CodePoint next = DecodeAt(text, end);
      if (!IsTerminator(next.value) && !IsCloser(next.value)) break;
      end += next.length;
    }
    if (end >= text.size() || !IsSpace(DecodeAt(text, end).value)) {
      pos = end;
      continue;
    }
    std::size_t opener = end;
    while (opener < text.size()) {
      const CodePoint next = DecodeAt(text, opener);
      if (!IsSpace(next.value)) break;
      opener += next.length;
    }
    const bool boundary =
        opener < text.size() && IsOpener(DecodeAt(text, opener).value) &&
        !(cp.value == '.' && end == pos + 1 && EndsAbbreviation(text, pos));
    if (boundary) {
      pieces.push_back(text.substr(start, end - start));
      start = opener;
    }
    pos = opener;
  }
  pieces.push_back(text.substr(start));
  return pieces;
}

}  // namespace

std::string AsciiLower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::size_t Utf8Length(std::string_view text) {
  return static_cast<std::size_t>(std::count_if(
      text.begin(), text.end(),
      [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::vector<Sentence> SplitSentences(std::string_view text) {
  std::vector<Sentence> sentences;
  std::string pending;
  for (std::string_view raw : SplitRaw(text)) {
    const std::string_view piece = Trim(raw);
    if (piece.empty()) continue;
    const std::size_t words = WordSpans(piece).size();
    if (words == 0) {
      if (!sentences.empty()) {
        sentences.back().text.append(" ").append(piece);
      } else {
        if (!pending.empty()) pending.push_back(' ');
        pending.append(piece);
      }
      continue;
    }
    Sentence sentence;
    if (!pending.empty()) {
      sentence.text = std::move(pending);
      sentence.text.push_back(' ');
      pending.clear();
    }
    sentence.text.append(piece);
    sentence.word_count = words;
    sentences.push_back(std::move(sentence));
  }
  if (!pending.empty()) sentences.push_back({std::move(pending), 0});
  return sentences;
}

std::vector<std::string> TokenizeWords(std::string_view text) {
  std::vector<std::string> tokens;
  for (const auto& [begin, end] : WordSpans(text)) {
    tokens.emplace_back(text.substr(begin, end - begin));
  }
  return tokens;
}

std::size_t DefaultTokenCount(std::string_view text) {
  const auto spans = WordSpans(text);
  std::size_t count = spans.size();
  std::size_t pos = 0;
  auto span = spans.begin();
  while (pos < text.size()) {
    if (span != spans.end() && pos == span->first) {
      pos = span->second;
      ++span;
      continue;
    }
    const CodePoint cp = DecodeAt(text, pos);
    if (!IsSpace(cp.value)) ++count;
    pos += cp.length;
  }
  return count;
}

std::size_t CountSyllables(std::string_view word) {
  if (word.empty()) {
    throw std::invalid_argument("CountSyllables: empty word");
  }
  const std::string lower = AsciiLower(word);
  const auto is_vowel = [](char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' ||
           c == 'y';
  };
  std::size_t groups = 0;
  bool in_group = false;
  for (char c : lower) {
    const bool vowel = is_vowel(c);
    if (vowel && !in_group) ++groups;
    in_group = vowel;
  }
  // Silent final "e": only when it forms its own vowel group, and not in the
  // "-le" ending.
  std::string letters;
  for (char c : lower) {
    if (c >= 'a' && c <= 'z') letters.push_back(c);
  }
  const std::size_t n = letters.size();
  if (groups > 0 && n >= 2 && letters[n - 1] == 'e' &&
      !is_vowel(letters[n - 2]) && letters[n - 2] != 'l') {
    --groups;
  }
  return std::max<std::size_t>(groups, 1);
}

std::vector<Chunk> ChunkDocument(const std::vector<Sentence>& sentences,
                                 std::size_t budget,
                                 const TokenCounter& counter) {
  if (budget == 0) {
    throw std::invalid_argument("ChunkDocument: budget must be >= 1");
  }
  std::vector<Chunk> chunks;
  Chunk current;
  for (const Sentence& sentence : sentences) {
    const std::size_t tokens = counter(sentence.text);
    if (!current.sentences.empty() && current.token_count + tokens > budget) {
      chunks.push_back(std::move(current));
      current = Chunk{};
    }
    if (!current.text.empty()) current.text.push_back(' ');
    current.text.append(sentence.text);
    current.sentences.push_back(sentence);
    current.token_count += tokens;
    current.word_count += sentence.word_count;
  }
  if (!current.sentences.empty()) chunks.push_back(std::move(current));
  return chunks;
}

std::vector<Chunk> ChunkDocument(const std::vector<Sentence>& sentences,
                                 std::size_t budget) {
  return ChunkDocument(sentences, budget, DefaultTokenCount);
}

Alignment AlignChunks(const std::vector<Chunk>& ai_chunks,
                      const std::vector<Chunk>& human_chunks) {
  Alignment alignment;
  const std::size_t paired = std::min(ai_chunks.size(), human_chunks.size());
  alignment.pairs.reserve(paired);
  for (std::size_t i = 0; i < paired; ++i) {
    alignment.pairs.push_back({i, ai_chunks[i], human_chunks[i]});
  }
  alignment.surplus_ai = ai_chunks.size() - paired;
  alignment.surplus_human = human_chunks.size() - paired;
  alignment.mismatch = ai_chunks.size() != human_chunks.size();
  return alignment;
}

}  // namespace styleshift
