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

// Brute-force reference implementations used as independent oracles.
// These stay deliberately naive (direct per-pixel predicates, no
// incremental evaluation) so they share no code path with the library.

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "fencemask/analysis.hpp"
#include "fencemask/mask.hpp"

namespace oracles {

// Direct evaluation of the stripe predicate at every pixel center.
inline fencemask::BinaryMask naive_stripe_mask(double w, double g,
                                               double theta_deg, double phase,
                                               int width, int height) {
  fencemask::BinaryMask mask(width, height);
  const double period = w + g;
  const double rad = theta_deg * 3.14159265358979323846 / 180.0;
  const double c = std::cos(rad);
  const double s = std::sin(rad);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double t = (x + 0.5) * c + (y + 0.5) * s - phase;
      double m = std::fmod(t, period);
      if (m < 0.0) m += period;
      if (m < w) mask.set_keep(x, y, false);
    }
  }
  return mask;
}

// Clipped-rectangle pixel count: [x0, x1) x [y0, y1) intersected with the
// image.
inline std::int64_t clipped_rect_count(int x0, int y0, int x1, int y1,
                                       int width, int height) {
  const int cx0 = std::max(x0, 0);
  const int cy0 = std::max(y0, 0);
  const int cx1 = std::min(x1, width);
  const int cy1 = std::min(y1, height);
  if (cx1 <= cx0 || cy1 <= cy0) return 0;
  return static_cast<std::int64_t>(cx1 - cx0) * (cy1 - cy0);
}

// Per-pixel recount of a box's occlusion ratio.
inline double naive_box_occlusion(const fencemask::BinaryMask& mask,
                                  const fencemask::BBox& box) {
  std::int64_t occluded = 0;
  for (int y = box.y; y < box.y + box.h; ++y) {
    for (int x = box.x; x < box.x + box.w; ++x) {
      if (!mask.keep(x, y)) ++occluded;
    }
  }
  return static_cast<double>(occluded) / (static_cast<double>(box.w) * box.h);
}

// Chi-square statistic against a uniform law over k categories.
inline double chi_square_uniform(const std::vector<std::int64_t>& counts,
                                 std::int64_t total) {
  const double expected =
      static_cast<double>(total) / static_cast<double>(counts.size());
  double stat = 0.0;
  for (std::int64_t c : counts) {
    const double d = static_cast<double>(c) - expected;
    stat += d * d / expected;
  }
  return stat;
}

}  // namespace oracles
