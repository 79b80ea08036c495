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

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "styleshift/segment.h"

namespace styleshift {
namespace {

using doctest::Approx;

TEST_CASE("ComputeMarkers on a short two-sentence chunk") {
  const MarkerVector v = ComputeMarkers("I don't know. It's fine!");
  CHECK(v[Marker::kWordCount] == 5);
  CHECK(v[Marker::kSentenceCount] == 2);
  CHECK(v[Marker::kContractions] == 1);
  CHECK(v[Marker::kExclamations] == 1);
  CHECK(v[Marker::kQuestionMarks] == 0);
  CHECK(v[Marker::kCommas] == 0);
  CHECK(v[Marker::kSentenceLengthVariance] == Approx(0.25));
  CHECK(v[Marker::kLexicalDiversity] == 1.0);
  // I(1) don't(5) know(4) It's(4) fine(4)
  CHECK(v[Marker::kAvgWordLength] == Approx(18.0 / 5));
  // Syllables: I 1, don't 1, know 1, It's 1, fine 1.
  CHECK(v[Marker::kFleschReadingEase] ==
        Approx(206.835 - 1.015 * 2.5 - 84.6 * 1.0));
  CHECK(v[Marker::kFkGrade] == Approx(0.39 * 2.5 + 11.8 - 15.59));
}

TEST_CASE("ComputeMarkers degenerate and punctuation cases") {
  const MarkerVector hello = ComputeMarkers("Hello.");
  CHECK(hello[Marker::kWordCount] == 1);
  CHECK(hello[Marker::kSentenceCount] == 1);
  CHECK(hello[Marker::kLexicalDiversity] == 1.0);
  CHECK(hello[Marker::kSentenceLengthVariance] == 0);

  CHECK(ComputeMarkers("One, two, three.")[Marker::kCommas] == 2);
  CHECK(ComputeMarkers("Why? Why not? Go!")[Marker::kQuestionMarks] == 2);
  CHECK(ComputeMarkers("The the THE cat.")[Marker::kLexicalDiversity] ==
        Approx(0.5));
  CHECK_THROWS_AS(ComputeMarkers("... !?"), std::invalid_argument);
  CHECK_THROWS_AS(ComputeMarkers(""), std::invalid_argument);
}

TEST_CASE("ComputeMarkers is deterministic and scales with duplication") {
  const std::string chunk =
      "Reading is fun, and writers know it. We don't stop early! Why not?";
  const MarkerVector once = ComputeMarkers(chunk);
  CHECK(ComputeMarkers(chunk) == once);
  const MarkerVector twice = ComputeMarkers(chunk + " " + chunk);
  CHECK(twice[Marker::kWordCount] == 2 * once[Marker::kWordCount]);
  CHECK(twice[Marker::kSentenceCount] == 2 * once[Marker::kSentenceCount]);
  CHECK(twice[Marker::kAvgWordLength] == Approx(once[Marker::kAvgWordLength]));
  CHECK(twice[Marker::kSentenceLengthVariance] ==
        Approx(once[Marker::kSentenceLengthVariance]));
}

TEST_CASE("Lexical diversity of all-distinct words is exactly one") {
  CHECK(ComputeMarkers("alpha beta gamma delta. Epsilon zeta!")
            [Marker::kLexicalDiversity] == 1.0);
}

TEST_CASE("CountContractions") {
  using T = std::vector<std::string>;
  CHECK(CountContractions(T{"don't", "can't", "we're"}) == 3);
  CHECK(CountContractions(T{"do", "not"}) == 0);
  CHECK(CountContractions(T{"John's", "isn't"}) == 1);
  CHECK(CountContractions(T{"I'm", "you'll", "they've", "she'd", "WON'T"}) ==
        5);
  CHECK(CountContractions(T{"y'all", "o'clock", "let's"}) == 1);
  CHECK(CountContractions(T{"can\xE2\x80\x99t"}) == 1);
  CHECK(CountContractions(T{"'m", "n't"}) == 0);
}

TEST_CASE("Readability formulas against hand computation") {
  CHECK(FleschReadingEase(6, 1, 6) == Approx(116.145).epsilon(1e-12));
  CHECK(FleschReadingEase(1, 1, 1) == Approx(121.22).epsilon(1e-12));
  CHECK(FleschReadingEase(20, 1, 40) == Approx(17.335).epsilon(1e-12));
  CHECK(FleschKincaidGrade(6, 1, 6) == Approx(-1.45).epsilon(1e-12));
  CHECK(FleschKincaidGrade(15, 1, 30) == Approx(13.86).epsilon(1e-12));
  CHECK(FleschKincaidGrade(1, 1, 1) == Approx(-3.4).epsilon(1e-12));
  for (const auto& c : oracle::ReadabilityCases()) {
    CHECK(std::abs(FleschReadingEase(c.words, c.sentences, c.syllables) -
                   c.flesch) < 1e-9);
    CHECK(std::abs(FleschKincaidGrade(c.words, c.sentences, c.syllables) -
                   c.grade) < 1e-9);
  }
  CHECK_THROWS_AS(FleschReadingEase(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(FleschKincaidGrade(3, 0, 3), std::invalid_argument);
}

TEST_CASE("LengthVariance is the population variance") {
  using C = std::vector<std::size_t>;
  CHECK(LengthVariance(C{5}) == 0.0);
  CHECK(LengthVariance(C{2, 4}) == 1.0);
  CHECK(LengthVariance(C{3, 3, 3}) == 0.0);
  CHECK(LengthVariance(C{3, 2}) == 0.25);
  CHECK_THROWS_AS(LengthVariance(C{}), std::invalid_argument);
}

TEST_CASE("AggregateProfile means") {
  MarkerVector a, b;
  a[Marker::kWordCount] = 40;
  b[Marker::kWordCount] = 60;
  const std::vector<MarkerVector> one = {a};
  const MarkerProfile single = AggregateProfile(one);
  CHECK(single.n == 1);
  CHECK(single.means == a);

  const std::vector<MarkerVector> two = {a, b};
  CHECK(AggregateProfile(two)[Marker::kWordCount] == 50);
  CHECK_THROWS_AS(AggregateProfile(std::vector<MarkerVector>{}),
                  std::invalid_argument);
}

TEST_CASE("AggregateProfile matches brute-force summation on 1,390 vectors") {
  std::mt19937_64 rng(1390);
  std::uniform_real_distribution<double> dist(-50, 150);
  std::vector<MarkerVector> vectors(1390);
  std::array<long double, kMarkerCount> sums{};
  for (MarkerVector& v : vectors) {
    for (std::size_t k = 0; k < kMarkerCount; ++k) {
      v.values[k] = dist(rng);
      sums[k] += v.values[k];
    }
  }
  const MarkerProfile profile = AggregateProfile(vectors);
  CHECK(profile.n == 1390);
  for (std::size_t k = 0; k < kMarkerCount; ++k) {
    const double expected = static_cast<double>(sums[k] / 1390.0L);
    CHECK(std::abs(profile.means.values[k] - expected) < 1e-9);
    double lo = vectors[0].values[k], hi = lo;
    for (const MarkerVector& v : vectors) {
      lo = std::min(lo, v.values[k]);
      hi = std::max(hi, v.values[k]);
    }
    CHECK(profile.means.values[k] >= lo);
    CHECK(profile.means.values[k] <= hi);
  }
}

TEST_CASE("Constant populations aggregate to the constant") {
  MarkerVector v;
  v.values.fill(0.1);
  const std::vector<MarkerVector> many(1001, v);
  CHECK(AggregateProfile(many).means == v);
}

TEST_CASE("Marker names round trip") {
  for (Marker m : kAllMarkers) CHECK(MarkerFromName(MarkerName(m)) == m);
  CHECK_FALSE(MarkerFromName("nope").has_value());
  CHECK(MarkerName(Marker::kFkGrade) == "fk_grade");
}

TEST_CASE("PercentChange") {
  CHECK(*PercentChange(50.77, 41.84) == Approx(-17.589).epsilon(1e-4));
  CHECK_FALSE(PercentChange(0, 1).has_value());
}

}  // namespace
}  // namespace styleshift
