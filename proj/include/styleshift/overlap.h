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

// Reference-overlap metrics: ROUGE-L, chrF++ and vocabulary Jaccard.

#ifndef STYLESHIFT_OVERLAP_H_
#define STYLESHIFT_OVERLAP_H_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>

namespace styleshift {

struct RougeLScore {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

// Longest common subsequence length, O(|a||b|) time and O(min) space.
std::size_t LcsLength(std::span<const std::string> a,
                      std::span<const std::string> b);

// precision = LCS / |hypothesis|, recall = LCS / |reference|, f1 their
// harmonic mean. Any empty side gives all zeros.
RougeLScore RougeL(std::span<const std::string> reference,
                   std::span<const std::string> hypothesis);

inline constexpr int kChrfCharOrder = 6;
inline constexpr int kChrfWordOrder = 2;
inline constexpr double kChrfBeta = 2.0;

// Clipped n-gram statistics per order: character orders 1..6 first, then word
// orders 1..2. Additive across segments, which gives the pooled corpus score.
struct ChrfStats {
  static constexpr std::size_t kOrders = kChrfCharOrder + kChrfWordOrder;
  std::array<double, kOrders> matches{};
  std::array<double, kOrders> hypothesis_total{};
  std::array<double, kOrders> reference_total{};

  ChrfStats& operator+=(const ChrfStats& other);
};

// Character n-grams skip whitespace; word n-grams use whitespace-separated
// tokens.
ChrfStats ComputeChrfStats(std::string_view reference,
                           std::string_view hypothesis);

// Mean over orders with a non-zero n-gram total on either side of
// F-beta(beta = 2), scaled to [0, 100]. With no such order the score is 100.
double ChrfFromStats(const ChrfStats& stats);

// chrF++ of one segment pair. Both sides empty gives 100, one side empty 0.
double ChrfPlusPlus(std::string_view reference, std::string_view hypothesis);

struct JaccardScore {
  double value = 0;
  bool degenerate = false;  // both sides empty; value is 1 by convention
};

// Jaccard index of the lowercased type sets.
JaccardScore VocabJaccard(std::span<const std::string> a,
                          std::span<const std::string> b);

struct OverlapScores {
  double rouge_l_precision = 0;
  double rouge_l_recall = 0;
  double rouge_l_f1 = 0;
  double chrf_pp = 0;
  double vocab_jaccard = 0;
  std::size_t pairs = 0;
  std::size_t degenerate_jaccard = 0;
};

enum class ChrfAggregation { kSegmentMean, kPooled };

// Scores of one (reference, hypothesis) pair. ROUGE-L and Jaccard run on
// lowercased word tokens.
OverlapScores PairOverlap(std::string_view reference,
                          std::string_view hypothesis);

// Mean of per-pair scores. In pooled mode chrF++ is instead computed from
// n-gram statistics summed over all pairs. Throws std::invalid_argument on an
// empty list.
OverlapScores CorpusOverlap(
    std::span<const std::pair<std::string, std::string>> pairs,
    ChrfAggregation chrf = ChrfAggregation::kSegmentMean);

// Same, from already computed per-pair scores; `pooled_chrf` is used when set.
OverlapScores AverageOverlap(std::span<const OverlapScores> per_pair,
                             const ChrfStats* pooled_chrf = nullptr);

}  // namespace styleshift

#endif  // STYLESHIFT_OVERLAP_H_
