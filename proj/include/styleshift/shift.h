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

// Directional marker shift: how far a model's outputs moved from the AI input
// profile toward the human reference profile, marker by marker, together with
// the absolute distance that remains to the human profile.

#ifndef STYLESHIFT_SHIFT_H_
#define STYLESHIFT_SHIFT_H_

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "styleshift/markers.h"

namespace styleshift {

inline constexpr double kShiftMin = -1.0;
inline constexpr double kShiftMax = 2.0;
inline constexpr double kDefaultEpsilon = 1e-9;
inline constexpr double kDefaultTau = 0.05;

struct ShiftOptions {
  double epsilon = kDefaultEpsilon;  // |human - ai| below this is degenerate
  double tau = kDefaultTau;          // half-width of the on-target band
};

enum class ShiftClass {
  kWrongDirection,  // shift < 0
  kUndershoot,      // 0 <= shift < 1 - tau
  kOnTarget,        // |shift - 1| <= tau
  kOvershoot,       // shift > 1 + tau
  kDegenerate,      // human and ai means coincide
};

std::string_view ShiftClassName(ShiftClass c);

struct ShiftScore {
  Marker marker = Marker::kWordCount;
  std::optional<double> raw_shift;  // unset when degenerate
  std::optional<double> shift;      // raw clamped to [-1, 2]
  ShiftClass classification = ShiftClass::kDegenerate;
  bool capped = false;  // raw fell outside [-1, 2]

  bool degenerate() const { return !shift.has_value(); }
};

// (output - ai) / (human - ai), clamped to [-1, 2]. Degenerate when
// |human - ai| < epsilon. Throws std::invalid_argument unless epsilon > 0.
ShiftScore DirectionalShift(double output, double ai, double human,
                            const ShiftOptions& options = {},
                            Marker marker = Marker::kWordCount);

// Classification of an already clamped, non-degenerate shift.
ShiftClass Classify(double shift, double tau);

// Mean of the clamped shifts of non-degenerate scores. Throws
// std::invalid_argument when every score is degenerate.
double MeanShift(std::span<const ShiftScore> scores);

struct DeviationReport {
  // |output - human| per marker.
  std::array<double, kMarkerCount> absolute{};
  // |output - human| / |human - ai|; unset where |human - ai| < epsilon.
  std::array<std::optional<double>, kMarkerCount> normalized{};
  double mean_absolute = 0;
  std::optional<double> mean_normalized;
};

DeviationReport AbsDeviationReport(const MarkerProfile& output,
                                   const MarkerProfile& human,
                                   const MarkerProfile& ai,
                                   double epsilon = kDefaultEpsilon);

struct ShiftReport {
  std::array<ShiftScore, kMarkerCount> scores{};
  std::optional<double> mean_shift;  // unset when every marker is degenerate
  DeviationReport deviation;

  const ShiftScore& operator[](Marker m) const {
    return scores[static_cast<std::size_t>(m)];
  }
};

// Shift of every marker computed on profile means. Throws
// std::invalid_argument naming the first marker whose mean is not finite in
// any of the three profiles.
ShiftReport ComputeShiftReport(const MarkerProfile& output,
                               const MarkerProfile& ai,
                               const MarkerProfile& human,
                               const ShiftOptions& options = {});

// Per-example variant: shifts are computed per aligned example and the
// clamped (and raw) values are averaged over the examples that are not
// degenerate for that marker. The three spans are parallel. Deviations are
// still taken on the profile means.
ShiftReport ComputePerExampleShiftReport(std::span<const MarkerVector> outputs,
                                         std::span<const MarkerVector> ai,
                                         std::span<const MarkerVector> human,
                                         const ShiftOptions& options = {});

}  // namespace styleshift

#endif  // STYLESHIFT_SHIFT_H_
