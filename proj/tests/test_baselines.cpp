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

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fencemask/baselines.hpp"
#include "fencemask/methods.hpp"
#include "oracles.hpp"

using namespace fencemask;

TEST_CASE("cutout: side 0 keeps everything") {
  Rng rng(1);
  CHECK(cutout_mask(0, 33, 17, rng).occluded_count() == 0);
}

TEST_CASE("cutout: side >= 2*max(W,H) occludes everything for any center") {
  for (int cx : {0, 10, 19}) {
    for (int cy : {0, 7, 12}) {
      const BinaryMask mask = cutout_mask_at(40, cx, cy, 20, 13);
      CHECK(occluded_fraction(mask) == 1.0);
    }
  }
}

TEST_CASE("cutout: forced center matches the brute-force count") {
  const BinaryMask mask = cutout_mask_at(4, 4, 4, 8, 8);
  CHECK(mask.occluded_count() == 16);
  CHECK(occluded_fraction(mask) == 0.25);

  Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const int width = static_cast<int>(rng.uniform_int(1, 40));
    const int height = static_cast<int>(rng.uniform_int(1, 40));
    const int side = static_cast<int>(rng.uniform_int(0, 60));
    const int cx = static_cast<int>(rng.uniform_int(0, width - 1));
    const int cy = static_cast<int>(rng.uniform_int(0, height - 1));
    const BinaryMask mask2 = cutout_mask_at(side, cx, cy, width, height);
    const int x0 = cx - side / 2;
    const int y0 = cy - side / 2;
    REQUIRE(mask2.occluded_count() ==
            oracles::clipped_rect_count(x0, y0, x0 + side, y0 + side, width, height));
  }
}

TEST_CASE("random_erasing: full-area square aspect covers the image") {
  RandomErasingConfig cfg;
  cfg.area_min = cfg.area_max = 1.0;
  cfg.aspect_min = cfg.aspect_max = 50.0 / 80.0;  // height / width of the image
  Rng rng(9);
  const ErasingDraw draw = random_erasing_mask(cfg, 80, 50, rng);
  CHECK(draw.placed);
  CHECK(occluded_fraction(draw.mask) == 1.0);
}

TEST_CASE("random_erasing: impossible placement falls back to all-keep") {
  RandomErasingConfig cfg;
  cfg.area_min = cfg.area_max = 0.9;
  cfg.aspect_min = cfg.aspect_max = 100.0;  // needs a very tall rectangle
  Rng rng(10);
  const ErasingDraw draw = random_erasing_mask(cfg, 100, 10, rng);
  CHECK_FALSE(draw.placed);
  CHECK(draw.mask.occluded_count() == 0);
}

TEST_CASE("random_erasing: quarter-area square erases 2500 of 10000 pixels") {
  RandomErasingConfig cfg;
  cfg.area_min = cfg.area_max = 0.25;
  cfg.aspect_min = cfg.aspect_max = 1.0;
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const ErasingDraw draw = random_erasing_mask(cfg, 100, 100, rng);
    REQUIRE(draw.placed);
    CHECK(std::abs(occluded_fraction(draw.mask) - 0.25) <= 0.01);
    CHECK(draw.w == 50);
    CHECK(draw.h == 50);
  }
}

TEST_CASE("random_erasing: rectangle always lies fully inside the image") {
  RandomErasingConfig cfg;
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const int width = static_cast<int>(rng.uniform_int(4, 60));
    const int height = static_cast<int>(rng.uniform_int(4, 60));
    const ErasingDraw draw = random_erasing_mask(cfg, width, height, rng);
    if (!draw.placed) continue;
    CHECK(draw.x >= 0);
    CHECK(draw.y >= 0);
    CHECK(draw.x + draw.w <= width);
    CHECK(draw.y + draw.h <= height);
    CHECK(draw.mask.occluded_count() ==
          static_cast<std::int64_t>(draw.w) * draw.h);
  }
}

TEST_CASE("hide_and_seek: p=0 keeps all, p=1 hides all") {
  Rng rng(13);
  CHECK(hide_and_seek_mask(4, 0.0, 64, 64, rng).occluded_count() == 0);
  CHECK(occluded_fraction(hide_and_seek_mask(4, 1.0, 64, 64, rng)) == 1.0);
  // Remainder pixels belong to the last row/column cells.
  CHECK(occluded_fraction(hide_and_seek_mask(3, 1.0, 10, 10, rng)) == 1.0);
  CHECK(occluded_fraction(hide_and_seek_mask(7, 1.0, 5, 9, rng)) == 1.0);
}

TEST_CASE("hide_and_seek: mean occlusion concentrates at p") {
  Rng rng(14);
  double sum = 0.0;
  const int n = 2000;  // the acceptance suite runs the full 10^4
  for (int i = 0; i < n; ++i) {
    Rng stream = rng.derive({static_cast<std::uint64_t>(i)});
    sum += occluded_fraction(hide_and_seek_mask(4, 0.5, 64, 64, stream));
  }
  CHECK(std::abs(sum / n - 0.5) <= 0.02);
}

TEST_CASE("gridmask: keep_ratio extremes") {
  Rng rng(15);
  CHECK(gridmask_mask(8, 1.0, 64, 64, rng).occluded_count() == 0);
  CHECK(occluded_fraction(gridmask_mask(8, 0.0, 64, 64, rng)) == 1.0);
}

TEST_CASE("gridmask: d=8 r=0.5 phase (0,0) occludes exactly a quarter") {
  const BinaryMask mask = gridmask_mask_at(8, 0.5, 0, 0, 64, 64);
  CHECK(occluded_fraction(mask) == 0.25);
}

TEST_CASE("gridmask: fraction is phase-independent when d divides the side") {
  const double expected = 0.25;  // (round(0.5 * 8) / 8)^2
  for (int px = 0; px < 8; ++px) {
    for (int py = 0; py < 8; ++py) {
      const BinaryMask mask = gridmask_mask_at(8, 0.5, px, py, 64, 64);
      REQUIRE(occluded_fraction(mask) == expected);
    }
  }
}

TEST_CASE("baseline generators: deterministic and exact dimensions") {
  for (Method method : all_methods()) {
    MethodConfig cfg;
    cfg.method = method;
    Rng a(77);
    Rng b(77);
    const MaskDraw da = generate_mask(cfg, 37, 53, a);
    const MaskDraw db = generate_mask(cfg, 37, 53, b);
    CHECK(da.mask == db.mask);
    CHECK(da.mask.width() == 37);
    CHECK(da.mask.height() == 53);
  }
}

TEST_CASE("generate_mask: dispatcher is seed-identical to the direct generators") {
  MethodConfig cfg;
  cfg.method = Method::cutout;
  cfg.cutout.side = 9;
  Rng a(5);
  Rng b(5);
  CHECK(generate_mask(cfg, 40, 30, a).mask == cutout_mask(9, 40, 30, b));

  cfg.method = Method::gridmask;
  cfg.gridmask = {16, 0.4};
  Rng c(6);
  Rng d(6);
  CHECK(generate_mask(cfg, 40, 30, c).mask == gridmask_mask(16, 0.4, 40, 30, d));

  cfg.method = Method::hide_and_seek;
  cfg.hide_and_seek = {5, 0.3};
  Rng e(7);
  Rng f(7);
  CHECK(generate_mask(cfg, 40, 30, e).mask ==
        hide_and_seek_mask(5, 0.3, 40, 30, f));
}

TEST_CASE("baseline configs: invariants are enforced") {
  CHECK_THROWS_AS((CutoutConfig{-1}).validate(), std::invalid_argument);
  RandomErasingConfig erasing;
  erasing.area_max = 1.5;
  CHECK_THROWS_AS(erasing.validate(), std::invalid_argument);
  erasing = {};
  erasing.aspect_min = 0.0;
  CHECK_THROWS_AS(erasing.validate(), std::invalid_argument);
  CHECK_THROWS_AS((HideAndSeekConfig{0, 0.5}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((HideAndSeekConfig{4, 1.5}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((GridMaskConfig{0, 0.5}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((GridMaskConfig{8, -0.1}).validate(), std::invalid_argument);
}
