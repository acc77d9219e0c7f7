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

#include "fencemask/fence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fencemask {

namespace {

constexpr double kDegToRad = 3.14159265358979323846 / 180.0;

bool is_integral(double v) { return v == std::floor(v); }

// Uniform draw from [lo, hi]: exact on degenerate ranges, inclusive
// integers on integral ranges, uniform real otherwise.
double draw_range(double lo, double hi, Rng& rng) {
  if (lo == hi) return lo;
  if (is_integral(lo) && is_integral(hi)) {
    return static_cast<double>(rng.uniform_int(static_cast<std::int64_t>(lo),
                                               static_cast<std::int64_t>(hi)));
  }
  return rng.uniform_real(lo, hi);
}

double draw_phase(double period, Rng& rng) {
  if (is_integral(period)) {
    return static_cast<double>(
        rng.uniform_int(0, static_cast<std::int64_t>(period) - 1));
  }
  return rng.uniform_real(0.0, period);
}

double positive_mod(double v, double p) {
  double r = std::fmod(v, p);
  if (r < 0.0) r += p;
  return r;
}

}  // namespace

double cos_deg(double deg) {
  const double r = positive_mod(deg, 360.0);
  if (r == 0.0) return 1.0;
  if (r == 90.0) return 0.0;
  if (r == 180.0) return -1.0;
  if (r == 270.0) return 0.0;
  return std::cos(r * kDegToRad);
}

double sin_deg(double deg) {
  const double r = positive_mod(deg, 360.0);
  if (r == 0.0) return 0.0;
  if (r == 90.0) return 1.0;
  if (r == 180.0) return 0.0;
  if (r == 270.0) return -1.0;
  return std::sin(r * kDegToRad);
}

void FenceConfig::validate() const {
  if (!(0.0 <= w_min && w_min <= w_max)) {
    throw std::invalid_argument("FenceConfig: need 0 <= w_min <= w_max");
  }
  if (!(1.0 <= g_min && g_min <= g_max)) {
    throw std::invalid_argument("FenceConfig: need 1 <= g_min <= g_max");
  }
  if (!(0.0 <= rot_min && rot_min <= rot_max && rot_max <= 90.0)) {
    throw std::invalid_argument(
        "FenceConfig: need 0 <= rot_min <= rot_max <= 90");
  }
}

void RelativeFenceConfig::validate() const {
  if (!(0.0 <= w_min && w_min <= w_max)) {
    throw std::invalid_argument("RelativeFenceConfig: need 0 <= w_min <= w_max");
  }
  if (!(0.0 <= g_min && g_min <= g_max)) {
    throw std::invalid_argument("RelativeFenceConfig: need 0 <= g_min <= g_max");
  }
  if (!(0.0 <= rot_min && rot_min <= rot_max && rot_max <= 90.0)) {
    throw std::invalid_argument(
        "RelativeFenceConfig: need 0 <= rot_min <= rot_max <= 90");
  }
}

FenceConfig RelativeFenceConfig::resolve(int width, int height) const {
  validate();
  if (width < 1 || height < 1) {
    throw std::invalid_argument("RelativeFenceConfig: dimensions must be >= 1");
  }
  const double scale = static_cast<double>(std::min(width, height));
  FenceConfig out;
  out.w_min = std::round(w_min * scale);
  out.w_max = std::round(w_max * scale);
  out.g_min = std::max(1.0, std::round(g_min * scale));
  out.g_max = std::max(1.0, std::round(g_max * scale));
  out.fill = fill;
  out.rot_min = rot_min;
  out.rot_max = rot_max;
  out.validate();
  return out;
}

FenceSample sample_fence(const FenceConfig& config, Rng& rng) {
  FenceSample s;
  s.w_x = draw_range(config.w_min, config.w_max, rng);
  s.w_y = draw_range(config.w_min, config.w_max, rng);
  s.g_x = draw_range(config.g_min, config.g_max, rng);
  s.g_y = draw_range(config.g_min, config.g_max, rng);
  s.theta_x = config.rot_min == config.rot_max
                  ? config.rot_min
                  : rng.uniform_real(config.rot_min, config.rot_max);
  s.theta_y = config.rot_min == config.rot_max
                  ? config.rot_min
                  : rng.uniform_real(config.rot_min, config.rot_max);
  s.phase_x = draw_phase(s.w_x + s.g_x, rng);
  s.phase_y = draw_phase(s.w_y + s.g_y, rng);
  return s;
}

BinaryMask rasterize_stripes(double w, double g, double theta_deg,
                             double phase, int width, int height) {
  if (w < 0.0) throw std::invalid_argument("rasterize_stripes: w < 0");
  if (g < 1.0) throw std::invalid_argument("rasterize_stripes: g < 1");
  const double period = w + g;
  if (!(phase >= 0.0 && phase < period)) {
    throw std::invalid_argument("rasterize_stripes: phase outside [0, w+g)");
  }

  BinaryMask mask(width, height, /*keep_all=*/true);
  if (w == 0.0) return mask;

  const double c = cos_deg(theta_deg);
  const double s = sin_deg(theta_deg);
  auto& bits = mask.bits();

  // Along a row the projection advances by cos θ per pixel; |cos θ| <= 1
  // <= period, so one conditional wrap keeps u in [0, period).
  for (int y = 0; y < height; ++y) {
    double u = positive_mod(0.5 * c + (y + 0.5) * s - phase, period);
    std::uint8_t* row = bits.data() + static_cast<std::size_t>(y) * width;
    if (c >= 0.0) {
      for (int x = 0; x < width; ++x) {
        if (u < w) row[x] = 0;
        u += c;
        if (u >= period) u -= period;
      }
    } else {
      for (int x = 0; x < width; ++x) {
        if (u < w) row[x] = 0;
        u += c;
        if (u < 0.0) u += period;
      }
    }
  }
  return mask;
}

std::pair<FenceSample, BinaryMask> generate_fence_mask(
    const FenceConfig& config, int width, int height, Rng& rng) {
  config.validate();
  if (width < 1 || height < 1) {
    throw std::invalid_argument("generate_fence_mask: dimensions must be >= 1");
  }
  FenceSample s = sample_fence(config, rng);
  BinaryMask family_x =
      rasterize_stripes(s.w_x, s.g_x, s.theta_x, s.phase_x, width, height);
  BinaryMask family_y = rasterize_stripes(s.w_y, s.g_y, s.theta_y + 90.0,
                                          s.phase_y, width, height);
  return {s, combine_fences(family_x, family_y)};
}

}  // namespace fencemask
