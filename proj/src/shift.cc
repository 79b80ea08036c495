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

#include "styleshift/shift.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace styleshift {
namespace {

void CheckFinite(const MarkerProfile& profile, const char* which) {
  for (Marker m : kAllMarkers) {
    if (!std::isfinite(profile[m])) {
      throw std::invalid_argument(std::string(which) + " profile: marker \"" +
                                  std::string(MarkerName(m)) +
                                  "\" is missing or not finite");
    }
  }
}

double Mean(const std::vector<double>& values) {
  return PairwiseSum(values) / static_cast<double>(values.size());
}

}  // namespace

std::string_view ShiftClassName(ShiftClass c) {
  switch (c) {
    case ShiftClass::kWrongDirection:
      return "wrong_direction";
    case ShiftClass::kUndershoot:
      return "undershoot";
    case ShiftClass::kOnTarget:
      return "on_target";
    case ShiftClass::kOvershoot:
      return "overshoot";
    case ShiftClass::kDegenerate:
      return "degenerate";
  }
  return "unknown";
}

ShiftClass Classify(double shift, double tau) {
  if (shift < 0) return ShiftClass::kWrongDirection;
  // Slack so that e.g. 1.05 sits on the edge of a 0.05 band despite rounding.
  if (std::abs(shift - 1.0) <= tau + 1e-12) return ShiftClass::kOnTarget;
  return shift < 1.0 ? ShiftClass::kUndershoot : ShiftClass::kOvershoot;
}

ShiftScore DirectionalShift(double output, double ai, double human,
                            const ShiftOptions& options, Marker marker) {
  if (!(options.epsilon > 0)) {
    throw std::invalid_argument("DirectionalShift: epsilon must be > 0");
  }
  ShiftScore score;
  score.marker = marker;
  const double gap = human - ai;
  if (std::abs(gap) < options.epsilon) return score;
  const double raw = (output - ai) / gap;
  score.raw_shift = raw;
  score.shift = std::clamp(raw, kShiftMin, kShiftMax);
  score.capped = raw < kShiftMin || raw > kShiftMax;
  score.classification = Classify(*score.shift, options.tau);
  return score;
}

double MeanShift(std::span<const ShiftScore> scores) {
  std::vector<double> shifts;
  for (const ShiftScore& s : scores) {
    if (s.shift) shifts.push_back(*s.shift);
  }
  if (shifts.empty()) {
    throw std::invalid_argument("MeanShift: every marker is degenerate");
  }
  return Mean(shifts);
}

DeviationReport AbsDeviationReport(const MarkerProfile& output,
                                   const MarkerProfile& human,
                                   const MarkerProfile& ai, double epsilon) {
  DeviationReport report;
  std::vector<double> normalized;
  for (Marker m : kAllMarkers) {
    const auto k = static_cast<std::size_t>(m);
    report.absolute[k] = std::abs(output[m] - human[m]);
    const double gap = std::abs(human[m] - ai[m]);
    if (gap >= epsilon) {
      report.normalized[k] = report.absolute[k] / gap;
      normalized.push_back(*report.normalized[k]);
    }
  }
  report.mean_absolute = Mean(std::vector<double>(report.absolute.begin(),
                                                  report.absolute.end()));
  if (!normalized.empty()) report.mean_normalized = Mean(normalized);
  return report;
}

ShiftReport ComputeShiftReport(const MarkerProfile& output,
                               const MarkerProfile& ai,
                               const MarkerProfile& human,
                               const ShiftOptions& options) {
  CheckFinite(output, "output");
  CheckFinite(ai, "ai");
  CheckFinite(human, "human");
  ShiftReport report;
  for (Marker m : kAllMarkers) {
    report.scores[static_cast<std::size_t>(m)] =
        DirectionalShift(output[m], ai[m], human[m], options, m);
  }
  if (std::any_of(report.scores.begin(), report.scores.end(),
                  [](const ShiftScore& s) { return !s.degenerate(); })) {
    report.mean_shift = MeanShift(report.scores);
  }
  report.deviation = AbsDeviationReport(output, human, ai, options.epsilon);
  return report;
}

ShiftReport ComputePerExampleShiftReport(std::span<const MarkerVector> outputs,
                                         std::span<const MarkerVector> ai,
                                         std::span<const MarkerVector> human,
                                         const ShiftOptions& options) {
  if (outputs.empty() || outputs.size() != ai.size() ||
      outputs.size() != human.size()) {
    throw std::invalid_argument(
        "per-example shift needs three non-empty parallel lists");
  }
  ShiftReport report;
  for (Marker m : kAllMarkers) {
    std::vector<double> raws, shifts;
    for (std::size_t i = 0; i < outputs.size(); ++i) {
      const ShiftScore s =
          DirectionalShift(outputs[i][m], ai[i][m], human[i][m], options, m);
      if (s.degenerate()) continue;
      raws.push_back(*s.raw_shift);
      shifts.push_back(*s.shift);
    }
    ShiftScore& score = report.scores[static_cast<std::size_t>(m)];
    score.marker = m;
    if (shifts.empty()) continue;
    score.raw_shift = Mean(raws);
    score.shift = Mean(shifts);
    score.capped = *score.raw_shift < kShiftMin || *score.raw_shift > kShiftMax;
    score.classification = Classify(*score.shift, options.tau);
  }
  if (std::any_of(report.scores.begin(), report.scores.end(),
                  [](const ShiftScore& s) { return !s.degenerate(); })) {
    report.mean_shift = MeanShift(report.scores);
  }
  const MarkerProfile out_profile = AggregateProfile(outputs);
  report.deviation = AbsDeviationReport(out_profile, AggregateProfile(human),
                                        AggregateProfile(ai), options.epsilon);
  return report;
}

}  // namespace styleshift
