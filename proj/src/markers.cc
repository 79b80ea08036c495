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

#include "styleshift/markers.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "styleshift/segment.h"

namespace styleshift {
namespace {

struct MarkerNames {
  std::string_view name;
  std::string_view label;
};

constexpr std::array<MarkerNames, kMarkerCount> kNames = {{
    {"word_count", "Word count"},
    {"sentence_count", "Sentence count"},
    {"avg_word_length", "Avg word length"},
    {"lexical_diversity", "Lexical diversity"},
    {"contractions", "Contractions"},
    {"question_marks", "Question marks"},
    {"exclamations", "Exclamations"},
    {"commas", "Commas"},
    {"sentence_length_variance", "Sentence length variance"},
    {"flesch_reading_ease", "Flesch Reading Ease"},
    {"fk_grade", "Flesch-Kincaid Grade"},
}};

// Lowercases and folds U+2019 / U+02BC to an ASCII apostrophe.
std::string NormalizeToken(std::string_view token) {
  std::string out;
  out.reserve(token.size());
  for (std::size_t i = 0; i < token.size(); ++i) {
    if (token.compare(i, 3, "\xE2\x80\x99") == 0) {
      out.push_back('\'');
      i += 2;
    } else if (token.compare(i, 2, "\xCA\xBC") == 0) {
      out.push_back('\'');
      i += 1;
    } else {
      out.push_back(token[i]);
    }
  }
  return AsciiLower(out);
}

bool EndsWith(std::string_view text, std::string_view suffix) {
  return text.size() > suffix.size() &&
         text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void CheckCounts(std::size_t words, std::size_t sentences,
                 std::size_t syllables) {
  if (words == 0 || sentences == 0 || syllables == 0) {
    throw std::invalid_argument(
        "readability: words, sentences and syllables must be >= 1");
  }
}

}  // namespace

std::string_view MarkerName(Marker marker) {
  return kNames[static_cast<std::size_t>(marker)].name;
}

std::string_view MarkerLabel(Marker marker) {
  return kNames[static_cast<std::size_t>(marker)].label;
}

std::optional<Marker> MarkerFromName(std::string_view name) {
  for (Marker m : kAllMarkers) {
    if (MarkerName(m) == name) return m;
  }
  return std::nullopt;
}

std::size_t CountContractions(std::span<const std::string> tokens) {
  static constexpr std::string_view kSuffixes[] = {"n't", "'re", "'ve",
                                                   "'ll", "'d",  "'m"};
  std::size_t count = 0;
  for (const std::string& token : tokens) {
    const std::string t = NormalizeToken(token);
    bool hit = t == "y'all";
    for (std::string_view suffix : kSuffixes) {
      if (hit) break;
      hit = EndsWith(t, suffix);
    }
    if (hit) ++count;
  }
  return count;
}

double FleschReadingEase(std::size_t words, std::size_t sentences,
                         std::size_t syllables) {
  CheckCounts(words, sentences, syllables);
  const double w = static_cast<double>(words);
  return 206.835 - 1.015 * (w / static_cast<double>(sentences)) -
         84.6 * (static_cast<double>(syllables) / w);
}

double FleschKincaidGrade(std::size_t words, std::size_t sentences,
                          std::size_t syllables) {
  CheckCounts(words, sentences, syllables);
  const double w = static_cast<double>(words);
  return 0.39 * (w / static_cast<double>(sentences)) +
         11.8 * (static_cast<double>(syllables) / w) - 15.59;
}

double LengthVariance(std::span<const std::size_t> sentence_word_counts) {
  if (sentence_word_counts.empty()) {
    throw std::invalid_argument("LengthVariance: empty list");
  }
  const double n = static_cast<double>(sentence_word_counts.size());
  double mean = 0;
  for (std::size_t c : sentence_word_counts) mean += static_cast<double>(c);
  mean /= n;
  double sum_sq = 0;
  for (std::size_t c : sentence_word_counts) {
    const double d = static_cast<double>(c) - mean;
    sum_sq += d * d;
  }
  return sum_sq / n;
}

MarkerVector ComputeMarkers(std::string_view chunk_text) {
  const std::vector<std::string> words = TokenizeWords(chunk_text);
  if (words.empty()) {
    throw std::invalid_argument("ComputeMarkers: chunk has no word tokens");
  }
  const std::vector<Sentence> sentences = SplitSentences(chunk_text);

  std::vector<std::size_t> lengths;
  lengths.reserve(sentences.size());
  for (const Sentence& s : sentences) lengths.push_back(s.word_count);

  std::size_t characters = 0;
  std::size_t syllables = 0;
  std::set<std::string> types;
  for (const std::string& w : words) {
    characters += Utf8Length(w);
    syllables += CountSyllables(w);
    types.insert(AsciiLower(w));
  }

  std::size_t questions = 0, exclamations = 0, commas = 0;
  for (char c : chunk_text) {
    questions += c == '?';
    exclamations += c == '!';
    commas += c == ',';
  }

  const double n_words = static_cast<double>(words.size());
  MarkerVector v;
  v[Marker::kWordCount] = n_words;
  v[Marker::kSentenceCount] = static_cast<double>(sentences.size());
  v[Marker::kAvgWordLength] = static_cast<double>(characters) / n_words;
  v[Marker::kLexicalDiversity] = static_cast<double>(types.size()) / n_words;
  v[Marker::kContractions] = static_cast<double>(CountContractions(words));
  v[Marker::kQuestionMarks] = static_cast<double>(questions);
  v[Marker::kExclamations] = static_cast<double>(exclamations);
  v[Marker::kCommas] = static_cast<double>(commas);
  v[Marker::kSentenceLengthVariance] = LengthVariance(lengths);
  v[Marker::kFleschReadingEase] =
      FleschReadingEase(words.size(), sentences.size(), syllables);
  v[Marker::kFkGrade] =
      FleschKincaidGrade(words.size(), sentences.size(), syllables);
  return v;
}

double PairwiseSum(std::span<const double> values) {
  if (values.size() <= 8) {
    double sum = 0;
    for (double v : values) sum += v;
    return sum;
  }
  const std::size_t half = values.size() / 2;
  return PairwiseSum(values.first(half)) + PairwiseSum(values.subspan(half));
}

MarkerProfile AggregateProfile(std::span<const MarkerVector> vectors) {
  if (vectors.empty()) {
    throw std::invalid_argument("AggregateProfile: no marker vectors");
  }
  MarkerProfile profile;
  profile.n = vectors.size();
  std::vector<double> column(vectors.size());
  for (std::size_t k = 0; k < kMarkerCount; ++k) {
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      column[i] = vectors[i].values[k];
    }
    const double mean =
        PairwiseSum(column) / static_cast<double>(vectors.size());
    // Rounding can push a mean of identical values a hair outside their range.
    const auto [lo, hi] = std::minmax_element(column.begin(), column.end());
    profile.means.values[k] = std::clamp(mean, *lo, *hi);
  }
  return profile;
}

std::optional<double> PercentChange(double human, double ai) {
  if (human == 0) return std::nullopt;
  return (ai - human) / human * 100.0;
}

}  // namespace styleshift
