// Copyright 2026 The FenceMask Authors
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

#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "fencemask/mask.hpp"
#include "fencemask/rng.hpp"

namespace fencemask {

/// Fence parameterization: width range [w_min, w_max], gap range
/// [g_min, g_max], fill value, and per-family rotation range in degrees.
///
/// Widths and gaps are in pixels. Ranges with integral endpoints are
/// sampled as uniform integers inclusive of both endpoints; a degenerate
/// range (min == max) yields that value exactly, which is how calibrated
/// real-valued widths are expressed.
struct FenceConfig {
  double w_min = 2.0;
  double w_max = 4.0;
  double g_min = 10.0;
  double g_max = 20.0;
  std::array<std::uint8_t, 3> fill{0, 0, 0};
  double rot_min = 0.0;
  double rot_max = 30.0;

  /// Throws std::invalid_argument unless
  /// 0 <= w_min <= w_max, 1 <= g_min <= g_max, 0 <= rot_min <= rot_max <= 90.
  void validate() const;
};

/// FenceConfig expressed as fractions of min(image width, image height),
/// for resolution-independent setups. resolve() rounds to the nearest
/// pixel; gaps are floored at 1 pixel.
struct RelativeFenceConfig {
  double w_min = 0.004;
  double w_max = 0.008;
  double g_min = 0.02;
  double g_max = 0.04;
  std::array<std::uint8_t, 3> fill{0, 0, 0};
  double rot_min = 0.0;
  double rot_max = 30.0;

  void validate() const;
  FenceConfig resolve(int width, int height) const;
};

/// One concrete draw: everything needed to rasterize a fence mask.
/// Family x is rasterized at theta_x, family y at theta_y + 90 degrees.
struct FenceSample {
  double w_x = 0.0;
  double w_y = 0.0;
  double g_x = 1.0;
  double g_y = 1.0;
  double theta_x = 0.0;  // degrees
  double theta_y = 0.0;  // degrees
  double phase_x = 0.0;  // in [0, w_x + g_x)
  double phase_y = 0.0;  // in [0, w_y + g_y)

  bool operator==(const FenceSample&) const = default;
};

/// Draws the eight sample fields independently and uniformly from the
/// config ranges, in declaration order (w_x, w_y, g_x, g_y, theta_x,
/// theta_y, phase_x, phase_y). Phases are uniform integers modulo the
/// family period when the period is integral, uniform reals otherwise.
FenceSample sample_fence(const FenceConfig& config, Rng& rng);

/// Rasterizes one stripe family over the image. A pixel with center
/// (x + 0.5, y + 0.5) is occluded iff
///   ((x + 0.5)·cos θ + (y + 0.5)·sin θ − phase) mod (w + g) < w.
/// Stripes are infinite lines tiled across the whole image; rotation is
/// about the image origin in this coordinate test. The perpendicular
/// family is obtained by passing theta + 90.
///
/// Throws std::invalid_argument on w < 0, g < 1, or phase outside
/// [0, w + g).
BinaryMask rasterize_stripes(double w, double g, double theta_deg,
                             double phase, int width, int height);

/// sample_fence, then both stripe families, then combine_fences.
/// Deterministic given the rng seed.
std::pair<FenceSample, BinaryMask> generate_fence_mask(
    const FenceConfig& config, int width, int height, Rng& rng);

/// Cosine/sine in degrees, exact at multiples of 90 so axis-aligned
/// rasterization stays in integer arithmetic.
double cos_deg(double deg);
double sin_deg(double deg);

}  // namespace fencemask
