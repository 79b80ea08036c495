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

#include "styleshift/overlap.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "styleshift/markers.h"
#include "styleshift/segment.h"

namespace styleshift {
namespace {

bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Code points of `text` with ASCII whitespace removed, each as its UTF-8 bytes.
std::vector<std::string> Characters(std::string_view text) {
  std::vector<std::string> chars;
  for (std::size_t i = 0; i < text.size();) {
    std::size_t len = 1;
    while (i + len < text.size() &&
           (static_cast<unsigned char>(text[i + len]) & 0xC0) == 0x80) {
      ++len;
    }
    if (!IsAsciiSpace(text[i])) chars.emplace_back(text.substr(i, len));
    i += len;
  }
  return chars;
}

std::vector<std::string> WhitespaceTokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsAsciiSpace(text[i])) ++i;
    const std::size_t begin = i;
    while (i < text.size() && !IsAsciiSpace(text[i])) ++i;
    if (i > begin) tokens.emplace_back(text.substr(begin, i - begin));
  }
  return tokens;
}

// n-gram counts; `separator` joins units so that word n-grams stay distinct.
std::map<std::string, double> Ngrams(const std::vector<std::string>& units,
                                     std::size_t n, char separator) {
  std::map<std::string, double> counts;
  if (units.size() < n) return counts;
  for (std::size_t i = 0; i + n <= units.size(); ++i) {
    std::string gram = units[i];
    for (std::size_t j = 1; j < n; ++j) {
      if (separator) gram.push_back(separator);
      gram += units[i + j];
    }
    counts[gram] += 1;
  }
  return counts;
}

void AddOrder(const std::vector<std::string>& ref,
              const std::vector<std::string>& hyp, std::size_t n,
              char separator, std::size_t slot, ChrfStats& stats) {
  const auto ref_counts = Ngrams(ref, n, separator);
  const auto hyp_counts = Ngrams(hyp, n, separator);
  double matches = 0;
  for (const auto& [gram, count] : hyp_counts) {
    auto it = ref_counts.find(gram);
    if (it != ref_counts.end()) matches += std::min(count, it->second);
  }
  stats.matches[slot] = matches;
  stats.hypothesis_total[slot] =
      hyp.size() >= n ? static_cast<double>(hyp.size() - n + 1) : 0;
  stats.reference_total[slot] =
      ref.size() >= n ? static_cast<double>(ref.size() - n + 1) : 0;
}

std::set<std::string> Types(std::span<const std::string> tokens) {
  std::set<std::string> types;
  for (const std::string& t : tokens) types.insert(AsciiLower(t));
  return types;
}

std::vector<std::string> LowerWords(std::string_view text) {
  std::vector<std::string> words = TokenizeWords(text);
  for (std::string& w : words) w = AsciiLower(w);
  return words;
}

}  // namespace

std::size_t LcsLength(std::span<const std::string> a,
                      std::span<const std::string> b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> prev(b.size() + 1, 0), curr(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      curr[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                     : std::max(prev[j], curr[j - 1]);
    }
    std::swap(prev, curr);
  }
  return prev[b.size()];
}

RougeLScore RougeL(std::span<const std::string> reference,
                   std::span<const std::string> hypothesis) {
  if (reference.empty() || hypothesis.empty()) return {};
  const double lcs = static_cast<double>(LcsLength(reference, hypothesis));
  RougeLScore score;
  score.precision = lcs / static_cast<double>(hypothesis.size());
  score.recall = lcs / static_cast<double>(reference.size());
  if (score.precision + score.recall > 0) {
    score.f1 = 2 * score.precision * score.recall /
               (score.precision + score.recall);
  }
  return score;
}

ChrfStats& ChrfStats::operator+=(const ChrfStats& other) {
  for (std::size_t k = 0; k < kOrders; ++k) {
    matches[k] += other.matches[k];
    hypothesis_total[k] += other.hypothesis_total[k];
    reference_total[k] += other.reference_total[k];
  }
  return *this;
}

ChrfStats ComputeChrfStats(std::string_view reference,
                           std::string_view hypothesis) {
  ChrfStats stats;
  const auto ref_chars = Characters(reference);
  const auto hyp_chars = Characters(hypothesis);
  for (int n = 1; n <= kChrfCharOrder; ++n) {
    AddOrder(ref_chars, hyp_chars, n, '\0', n - 1, stats);
  }
  const auto ref_words = WhitespaceTokens(reference);
  const auto hyp_words = WhitespaceTokens(hypothesis);
  for (int n = 1; n <= kChrfWordOrder; ++n) {
    AddOrder(ref_words, hyp_words, n, ' ', kChrfCharOrder + n - 1, stats);
  }
  return stats;
}

double ChrfFromStats(const ChrfStats& stats) {
  const double beta2 = kChrfBeta * kChrfBeta;
  double sum = 0;
  int orders = 0;
  for (std::size_t k = 0; k < ChrfStats::kOrders; ++k) {
    const double hyp = stats.hypothesis_total[k];
    const double ref = stats.reference_total[k];
    if (hyp == 0 && ref == 0) continue;
    ++orders;
    if (hyp == 0 || ref == 0 || stats.matches[k] == 0) continue;
    const double precision = stats.matches[k] / hyp;
    const double recall = stats.matches[k] / ref;
    sum += (1 + beta2) * precision * recall / (beta2 * precision + recall);
  }
  if (orders == 0) return 100.0;
  return 100.0 * sum / orders;
}

double ChrfPlusPlus(std::string_view reference, std::string_view hypothesis) {
  return ChrfFromStats(ComputeChrfStats(reference, hypothesis));
}

JaccardScore VocabJaccard(std::span<const std::string> a,
                          std::span<const std::string> b) {
  const auto types_a = Types(a);
  const auto types_b = Types(b);
  if (types_a.empty() && types_b.empty()) return {1.0, true};
  std::size_t common = 0;
  for (const std::string& t : types_a) common += types_b.contains(t);
  const std::size_t total = types_a.size() + types_b.size() - common;
  return {static_cast<double>(common) / static_cast<double>(total), false};
}

OverlapScores PairOverlap(std::string_view reference,
                          std::string_view hypothesis) {
  const auto ref = LowerWords(reference);
  const auto hyp = LowerWords(hypothesis);
  const RougeLScore rouge = RougeL(ref, hyp);
  const JaccardScore jaccard = VocabJaccard(ref, hyp);
  OverlapScores scores;
  scores.rouge_l_precision = rouge.precision;
  scores.rouge_l_recall = rouge.recall;
  scores.rouge_l_f1 = rouge.f1;
  scores.chrf_pp = ChrfPlusPlus(reference, hypothesis);
  scores.vocab_jaccard = jaccard.value;
  scores.pairs = 1;
  scores.degenerate_jaccard = jaccard.degenerate ? 1 : 0;
  return scores;
}

OverlapScores AverageOverlap(std::span<const OverlapScores> per_pair,
                             const ChrfStats* pooled_chrf) {
  if (per_pair.empty()) {
    throw std::invalid_argument("corpus overlap needs at least one pair");
  }
  const auto mean = [&](double OverlapScores::*field) {
    std::vector<double> column;
    column.reserve(per_pair.size());
    for (const OverlapScores& s : per_pair) column.push_back(s.*field);
    return PairwiseSum(column) / static_cast<double>(column.size());
  };
  OverlapScores scores;
  scores.rouge_l_precision = mean(&OverlapScores::rouge_l_precision);
  scores.rouge_l_recall = mean(&OverlapScores::rouge_l_recall);
  scores.rouge_l_f1 = mean(&OverlapScores::rouge_l_f1);
  scores.chrf_pp =
      pooled_chrf ? ChrfFromStats(*pooled_chrf) : mean(&OverlapScores::chrf_pp);
  scores.vocab_jaccard = mean(&OverlapScores::vocab_jaccard);
  scores.pairs = per_pair.size();
  for (const OverlapScores& s : per_pair) {
    scores.degenerate_jaccard += s.degenerate_jaccard;
  }
  return scores;
}

OverlapScores CorpusOverlap(
    std::span<const std::pair<std::string, std::string>> pairs,
    ChrfAggregation chrf) {
  std::vector<OverlapScores> per_pair;
  per_pair.reserve(pairs.size());
  ChrfStats pooled;
  for (const auto& [reference, hypothesis] : pairs) {
    per_pair.push_back(PairOverlap(reference, hypothesis));
    if (chrf == ChrfAggregation::kPooled) {
      pooled += ComputeChrfStats(reference, hypothesis);
    }
  }
  return AverageOverlap(per_pair,
                        chrf == ChrfAggregation::kPooled ? &pooled : nullptr);
}

}  // namespace styleshift
