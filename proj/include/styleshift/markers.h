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

// The eleven per-chunk stylistic markers and their corpus-level profiles.

#ifndef STYLESHIFT_MARKERS_H_
#define STYLESHIFT_MARKERS_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace styleshift {

// Fixed order; also the row order of every rendered marker table.
enum class Marker {
  kWordCount,
  kSentenceCount,
  kAvgWordLength,
  kLexicalDiversity,
  kContractions,
  kQuestionMarks,
  kExclamations,
  kCommas,
  kSentenceLengthVariance,
  kFleschReadingEase,
  kFkGrade,
};

inline constexpr std::size_t kMarkerCount = 11;

inline constexpr std::array<Marker, kMarkerCount> kAllMarkers = {
    Marker::kWordCount,     Marker::kSentenceCount,
    Marker::kAvgWordLength, Marker::kLexicalDiversity,
    Marker::kContractions,  Marker::kQuestionMarks,
    Marker::kExclamations,  Marker::kCommas,
    Marker::kSentenceLengthVariance, Marker::kFleschReadingEase,
    Marker::kFkGrade};

// Canonical serialization name, e.g. "sentence_length_variance".
std::string_view MarkerName(Marker marker);
// Human-readable table label, e.g. "Sentence length variance".
std::string_view MarkerLabel(Marker marker);
std::optional<Marker> MarkerFromName(std::string_view name);

struct MarkerVector {
  std::array<double, kMarkerCount> values{};

  double& operator[](Marker m) { return values[static_cast<std::size_t>(m)]; }
  double operator[](Marker m) const {
    return values[static_cast<std::size_t>(m)];
  }
  bool operator==(const MarkerVector&) const = default;
};

// Component-wise mean of `n` marker vectors.
struct MarkerProfile {
  MarkerVector means;
  std::size_t n = 0;

  double operator[](Marker m) const { return means[m]; }
  bool operator==(const MarkerProfile&) const = default;
};

// All eleven markers of one chunk. Throws std::invalid_argument when the text
// has no word tokens.
MarkerVector ComputeMarkers(std::string_view chunk_text);

// Tokens ending in n't, 're, 've, 'll, 'd or 'm (case-insensitive, curly
// apostrophes accepted), plus "y'all". Tokens ending in 's are not counted.
std::size_t CountContractions(std::span<const std::string> tokens);

// 206.835 - 1.015 (words / sentences) - 84.6 (syllables / words), unclamped.
double FleschReadingEase(std::size_t words, std::size_t sentences,
                         std::size_t syllables);

// 0.39 (words / sentences) + 11.8 (syllables / words) - 15.59, unclamped.
double FleschKincaidGrade(std::size_t words, std::size_t sentences,
                          std::size_t syllables);

// Population variance. Throws std::invalid_argument on an empty list.
double LengthVariance(std::span<const std::size_t> sentence_word_counts);

// Component-wise arithmetic mean using pairwise summation.
MarkerProfile AggregateProfile(std::span<const MarkerVector> vectors);

// (ai - human) / human * 100, or nullopt when human is zero.
std::optional<double> PercentChange(double human, double ai);

// Pairwise (cascade) summation.
double PairwiseSum(std::span<const double> values);

}  // namespace styleshift

#endif  // STYLESHIFT_MARKERS_H_
