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

#include "fencemask/mask.hpp"
#include "fencemask/rng.hpp"

namespace fencemask {

/// CutOut: one axis-aligned square occlusion, center uniform over the
/// image, clipped at the borders. The calibration scale is `side`.
struct CutoutConfig {
  int side = 128;

  void validate() const;
};

/// Random Erasing: one rectangle with area fraction ~ U[area_min, area_max]
/// and aspect ratio (height / width) ~ U[aspect_min, aspect_max], placed
/// uniformly fully inside the image; retries up to max_attempts, then
/// falls back to an all-keep mask. The calibration scale is the area
/// fraction (area_min = area_max).
struct RandomErasingConfig {
  double area_min = 0.02;
  double area_max = 0.4;
  double aspect_min = 0.3;
  double aspect_max = 1.0 / 0.3;
  int max_attempts = 100;

  void validate() const;
};

/// Hide-and-Seek: the image is partitioned into divisions × divisions
/// cells (remainder pixels join the last row/column of cells); each cell
/// is hidden independently with probability hide_prob, which is also the
/// calibration scale.
struct HideAndSeekConfig {
  int divisions = 4;
  double hide_prob = 0.5;

  void validate() const;
};

/// GridMask: square blocks of side round((1 − keep_ratio) · period) tiled
/// with the given period in both axes, phase uniform in [0, period) per
/// axis. Axis-aligned by construction; the calibration scale is
/// keep_ratio (occlusion decreases as it grows).
struct GridMaskConfig {
  int period = 128;
  double keep_ratio = 0.5;

  void validate() const;
};

BinaryMask cutout_mask(int side, int width, int height, Rng& rng);

/// Deterministic variant with the square center forced; the rng overload
/// draws the center uniformly over [0, width) × [0, height) and delegates
/// here. The square spans [c − side/2, c − side/2 + side) per axis,
/// clipped to the image.
BinaryMask cutout_mask_at(int side, int center_x, int center_y, int width,
                          int height);

struct ErasingDraw {
  BinaryMask mask;
  bool placed = false;  // false means the attempt budget ran out (all-keep)
  int x = 0, y = 0, w = 0, h = 0;
};

ErasingDraw random_erasing_mask(const RandomErasingConfig& config, int width,
                                int height, Rng& rng);

BinaryMask hide_and_seek_mask(int divisions, double hide_prob, int width,
                              int height, Rng& rng);

BinaryMask gridmask_mask(int period, double keep_ratio, int width, int height,
                         Rng& rng);

/// Deterministic variant with forced phases in [0, period); the rng
/// overload draws the phases and delegates here.
BinaryMask gridmask_mask_at(int period, double keep_ratio, int phase_x,
                            int phase_y, int width, int height);

}  // namespace fencemask
