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

#include "fencemask/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fencemask {

namespace {

void occlude_rect(BinaryMask& mask, int x0, int y0, int x1, int y1) {
  x0 = std::max(x0, 0);
  y0 = std::max(y0, 0);
  x1 = std::min(x1, mask.width());
  y1 = std::min(y1, mask.height());
  for (int y = y0; y < y1; ++y) {
    auto* row = mask.bits().data() + static_cast<std::size_t>(y) * mask.width();
    std::fill(row + x0, row + x1, std::uint8_t{0});
  }
}

int positive_mod(int v, int m) {
  int r = v % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

void CutoutConfig::validate() const {
  if (side < 0) throw std::invalid_argument("CutoutConfig: side < 0");
}

void RandomErasingConfig::validate() const {
  if (!(0.0 <= area_min && area_min <= area_max && area_max <= 1.0)) {
    throw std::invalid_argument(
        "RandomErasingConfig: need 0 <= area_min <= area_max <= 1");
  }
  if (!(0.0 < aspect_min && aspect_min <= aspect_max)) {
    throw std::invalid_argument(
        "RandomErasingConfig: need 0 < aspect_min <= aspect_max");
  }
  if (max_attempts < 1) {
    throw std::invalid_argument("RandomErasingConfig: max_attempts < 1");
  }
}

void HideAndSeekConfig::validate() const {
  if (divisions < 1) {
    throw std::invalid_argument("HideAndSeekConfig: divisions < 1");
  }
  if (!(0.0 <= hide_prob && hide_prob <= 1.0)) {
    throw std::invalid_argument("HideAndSeekConfig: hide_prob outside [0, 1]");
  }
}

void GridMaskConfig::validate() const {
  if (period < 1) throw std::invalid_argument("GridMaskConfig: period < 1");
  if (!(0.0 <= keep_ratio && keep_ratio <= 1.0)) {
    throw std::invalid_argument("GridMaskConfig: keep_ratio outside [0, 1]");
  }
}

BinaryMask cutout_mask_at(int side, int center_x, int center_y, int width,
                          int height) {
  if (side < 0) throw std::invalid_argument("cutout_mask_at: side < 0");
  BinaryMask mask(width, height);
  if (side == 0) return mask;
  const int x0 = center_x - side / 2;
  const int y0 = center_y - side / 2;
  occlude_rect(mask, x0, y0, x0 + side, y0 + side);
  return mask;
}

BinaryMask cutout_mask(int side, int width, int height, Rng& rng) {
  const int cx = static_cast<int>(rng.uniform_int(0, width - 1));
  const int cy = static_cast<int>(rng.uniform_int(0, height - 1));
  return cutout_mask_at(side, cx, cy, width, height);
}

ErasingDraw random_erasing_mask(const RandomErasingConfig& config, int width,
                                int height, Rng& rng) {
  config.validate();
  const double total = static_cast<double>(width) * height;
  for (int attempt = 0; attempt < config.max_attempts; ++attempt) {
    const double area = rng.uniform_real(config.area_min, config.area_max);
    const double aspect = rng.uniform_real(config.aspect_min, config.aspect_max);
    const double target = area * total;
    const int rect_h = static_cast<int>(std::round(std::sqrt(target * aspect)));
    const int rect_w = static_cast<int>(std::round(std::sqrt(target / aspect)));
    if (rect_w > width || rect_h > height) continue;
    const int x = rect_w == width
                      ? 0
                      : static_cast<int>(rng.uniform_int(0, width - rect_w));
    const int y = rect_h == height
                      ? 0
                      : static_cast<int>(rng.uniform_int(0, height - rect_h));
    BinaryMask mask(width, height);
    occlude_rect(mask, x, y, x + rect_w, y + rect_h);
    return {std::move(mask), true, x, y, rect_w, rect_h};
  }
  return {BinaryMask(width, height), false, 0, 0, 0, 0};
}

BinaryMask hide_and_seek_mask(int divisions, double hide_prob, int width,
                              int height, Rng& rng) {
  HideAndSeekConfig cfg{divisions, hide_prob};
  cfg.validate();
  BinaryMask mask(width, height);
  const int cell_w = width / divisions;
  const int cell_h = height / divisions;
  for (int row = 0; row < divisions; ++row) {
    const int y0 = row * cell_h;
    const int y1 = row + 1 == divisions ? height : (row + 1) * cell_h;
    for (int col = 0; col < divisions; ++col) {
      const double u = rng.uniform_unit();
      if (u >= hide_prob) continue;
      const int x0 = col * cell_w;
      const int x1 = col + 1 == divisions ? width : (col + 1) * cell_w;
      occlude_rect(mask, x0, y0, x1, y1);
    }
  }
  return mask;
}

BinaryMask gridmask_mask_at(int period, double keep_ratio, int phase_x,
                            int phase_y, int width, int height) {
  GridMaskConfig cfg{period, keep_ratio};
  cfg.validate();
  if (phase_x < 0 || phase_x >= period || phase_y < 0 || phase_y >= period) {
    throw std::invalid_argument("gridmask_mask_at: phase outside [0, period)");
  }
  const int block = static_cast<int>(std::round((1.0 - keep_ratio) * period));
  BinaryMask mask(width, height);
  if (block == 0) return mask;
  for (int y = 0; y < height; ++y) {
    if (positive_mod(y - phase_y, period) >= block) continue;
    auto* row = mask.bits().data() + static_cast<std::size_t>(y) * width;
    for (int x = 0; x < width; ++x) {
      if (positive_mod(x - phase_x, period) < block) row[x] = 0;
    }
  }
  return mask;
}

BinaryMask gridmask_mask(int period, double keep_ratio, int width, int height,
                         Rng& rng) {
  const int px = static_cast<int>(rng.uniform_int(0, period - 1));
  const int py = static_cast<int>(rng.uniform_int(0, period - 1));
  return gridmask_mask_at(period, keep_ratio, px, py, width, height);
}

}  // namespace fencemask
