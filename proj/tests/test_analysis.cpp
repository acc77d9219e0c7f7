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
#include <set>

#include "fencemask/analysis.hpp"
#include "fencemask/io.hpp"
#include "oracles.hpp"

using namespace fencemask;

TEST_CASE("object_occlusion_ratio: fully kept and fully occluded boxes") {
  BinaryMask mask(32, 32);
  for (int y = 0; y < 32; ++y) {
    for (int x = 16; x < 32; ++x) mask.set_keep(x, y, false);
  }
  CHECK(object_occlusion_ratio(mask, {0, 0, 8, 8}) == 0.0);
  CHECK(object_occlusion_ratio(mask, {20, 4, 8, 8}) == 1.0);
}

TEST_CASE("object_occlusion_ratio: box straddling a stripe boundary") {
  // Columns 12,13 of the 4-wide box occluded, columns 14,15 kept.
  const BinaryMask mask = rasterize_stripes(2, 2, 0.0, 0.0, 32, 32);
  REQUIRE(!mask.keep(12, 0));
  REQUIRE(!mask.keep(13, 0));
  REQUIRE(mask.keep(14, 0));
  CHECK(object_occlusion_ratio(mask, {12, 8, 4, 4}) == 0.5);
}

TEST_CASE("object_occlusion_ratio: rejects out-of-bounds boxes") {
  BinaryMask mask(16, 16);
  CHECK_THROWS_AS(object_occlusion_ratio(mask, {-1, 0, 4, 4}), std::out_of_range);
  CHECK_THROWS_AS(object_occlusion_ratio(mask, {14, 0, 4, 4}), std::out_of_range);
  CHECK_THROWS_AS(object_occlusion_ratio(mask, {0, 0, 0, 4}), std::out_of_range);
}

TEST_CASE("object_occlusion_ratio: partition-weighted means recompose") {
  Rng rng(88);
  for (int trial = 0; trial < 50; ++trial) {
    BinaryMask mask(48, 48);
    for (auto& bit : mask.bits()) bit = rng.uniform_unit() < 0.6 ? 1 : 0;
    const BBox box{4, 6, 40, 32};
    // Split at a random interior column.
    const int split = static_cast<int>(rng.uniform_int(1, box.w - 1));
    const BBox left{box.x, box.y, split, box.h};
    const BBox right{box.x + split, box.y, box.w - split, box.h};
    const double whole = object_occlusion_ratio(mask, box);
    const double recombined =
        (object_occlusion_ratio(mask, left) * left.w * left.h +
         object_occlusion_ratio(mask, right) * right.w * right.h) /
        (static_cast<double>(box.w) * box.h);
    REQUIRE(whole == doctest::Approx(recombined).epsilon(1e-12));
    REQUIRE(whole == doctest::Approx(oracles::naive_box_occlusion(mask, box)));
  }
}

TEST_CASE("synthesize_small_object_corpus: counts, disjointness, determinism") {
  Rng rng(2025);
  const Corpus corpus = synthesize_small_object_corpus(512, 16, 20, 50, rng);
  REQUIRE(corpus.size() == 50);
  std::size_t total = 0;
  for (const auto& image : corpus) {
    CHECK(image.width == 512);
    CHECK(image.height == 512);
    total += image.boxes.size();
    for (std::size_t i = 0; i < image.boxes.size(); ++i) {
      const auto& a = image.boxes[i];
      CHECK(a.w == 16);
      CHECK(a.h == 16);
      CHECK(a.x >= 0);
      CHECK(a.y >= 0);
      CHECK(a.x + a.w <= 512);
      CHECK(a.y + a.h <= 512);
      for (std::size_t j = i + 1; j < image.boxes.size(); ++j) {
        const auto& b = image.boxes[j];
        const bool disjoint = a.x + a.w <= b.x || b.x + b.w <= a.x ||
                              a.y + a.h <= b.y || b.y + b.h <= a.y;
        REQUIRE(disjoint);
      }
    }
  }
  CHECK(total == 1000);

  Rng rng2(2025);
  const Corpus again = synthesize_small_object_corpus(512, 16, 20, 50, rng2);
  REQUIRE(again.size() == corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CHECK(corpus[i].boxes == again[i].boxes);
  }
}

TEST_CASE("synthesize_small_object_corpus: edge shapes") {
  Rng rng(1);
  const Corpus empty = synthesize_small_object_corpus(64, 8, 0, 3, rng);
  REQUIRE(empty.size() == 3);
  for (const auto& image : empty) CHECK(image.boxes.empty());

  Rng rng2(2);
  const Corpus whole = synthesize_small_object_corpus(64, 64, 1, 1, rng2);
  REQUIRE(whole.size() == 1);
  REQUIRE(whole[0].boxes.size() == 1);
  CHECK(whole[0].boxes[0] == BBox{0, 0, 64, 64, whole[0].boxes[0].label});

  Rng rng3(3);
  CHECK_THROWS_AS(synthesize_small_object_corpus(32, 16, 100, 1, rng3),
                  std::runtime_error);
  Rng rng4(4);
  CHECK_THROWS_AS(synthesize_small_object_corpus(32, 64, 1, 1, rng4),
                  std::invalid_argument);
}

TEST_CASE("calibrate_to_occlusion: target 0 drives the scale to its minimum") {
  MethodConfig cfg;
  cfg.method = Method::cutout;
  Rng rng(5);
  const MethodConfig calibrated =
      calibrate_to_occlusion(cfg, 0.0, 128, 128, {100, 0.01, 48}, rng);
  CHECK(calibrated.cutout.side == 0);
}

TEST_CASE("calibrate_to_occlusion: hide-and-seek probability tracks the target") {
  MethodConfig cfg;
  cfg.method = Method::hide_and_seek;
  Rng rng(6);
  const MethodConfig calibrated =
      calibrate_to_occlusion(cfg, 0.3, 128, 128, {200, 0.01, 48}, rng);
  CHECK(std::abs(calibrated.hide_and_seek.hide_prob - 0.3) <= 0.02);
}

TEST_CASE("calibrate_to_occlusion: fence width lands near the analytic root") {
  MethodConfig cfg;
  cfg.method = Method::fencemask;
  cfg.fence.g_min = cfg.fence.g_max = 14;
  Rng rng(7);
  const MethodConfig calibrated =
      calibrate_to_occlusion(cfg, 0.25, 512, 512, {200, 0.01, 48}, rng);
  // 1 - (14 / (w + 14))^2 = 0.25  =>  w = 14 (1/sqrt(0.75) - 1) ~= 2.166
  const double analytic = 14.0 * (1.0 / std::sqrt(0.75) - 1.0);
  CHECK(std::abs(calibrated.fence.w_min - analytic) <= 1.0);
  CHECK(calibrated.fence.w_min == calibrated.fence.w_max);
}

TEST_CASE("calibrate_to_occlusion: unreachable targets abort") {
  // Fence occlusion caps out near 0.99 even at the widest searched stripe.
  MethodConfig cfg;
  cfg.method = Method::fencemask;
  Rng rng(8);
  CHECK_THROWS_AS(
      calibrate_to_occlusion(cfg, 0.9999, 64, 64, {50, 0.0005, 16}, rng),
      CalibrationError);
}

TEST_CASE("run_failure_study: whole-image object sits at the target occlusion") {
  Corpus corpus = {{"full", 128, 128, {BBox{0, 0, 128, 128}}}};
  std::vector<MethodConfig> methods(1);
  methods[0].method = Method::hide_and_seek;
  StudyOptions opts;
  opts.target_occlusion = 0.3;
  opts.seeds = 50;
  opts.calibration.n_samples = 100;
  const auto reports = run_failure_study(corpus, methods, opts, 99);
  REQUIRE(reports.size() == 1);
  CHECK(std::abs(reports[0].per_object_occlusion.at(0) - 0.3) <= 0.02);
  CHECK(std::abs(reports[0].global_occlusion - 0.3) <= 0.02);
}

TEST_CASE("run_failure_study: zero target means zero failure rates") {
  Corpus corpus = {{"img", 64, 64, {BBox{8, 8, 16, 16}, BBox{40, 40, 8, 8}}}};
  std::vector<MethodConfig> methods(2);
  methods[0].method = Method::cutout;
  methods[1].method = Method::fencemask;
  StudyOptions opts;
  opts.target_occlusion = 0.0;
  opts.seeds = 5;
  opts.calibration.n_samples = 50;
  for (const auto& report : run_failure_study(corpus, methods, opts, 7)) {
    CHECK(report.failure_rate == 0.0);
    CHECK(report.global_occlusion <= 0.01);
  }
}

TEST_CASE("run_failure_study: failure_rate formula holds at seeds=1") {
  Rng rng(31);
  Corpus corpus = synthesize_small_object_corpus(128, 16, 4, 6, rng);
  std::vector<MethodConfig> methods(1);
  methods[0].method = Method::cutout;
  StudyOptions opts;
  opts.target_occlusion = 0.4;
  opts.failure_threshold = 0.9;
  opts.seeds = 1;
  opts.calibration.n_samples = 100;
  const auto reports = run_failure_study(corpus, methods, opts, 17);
  REQUIRE(reports.size() == 1);
  const auto& r = reports[0];
  int over = 0;
  for (double v : r.per_object_occlusion) {
    if (v > r.failure_threshold) ++over;
  }
  CHECK(r.failure_rate ==
        static_cast<double>(over) / static_cast<double>(r.n_objects));
}

TEST_CASE("run_failure_study: reports are identical across runs") {
  Rng rng(77);
  Corpus corpus = synthesize_small_object_corpus(96, 12, 3, 4, rng);
  std::vector<MethodConfig> methods(2);
  methods[0].method = Method::fencemask;
  methods[1].method = Method::gridmask;
  StudyOptions opts;
  opts.target_occlusion = 0.25;
  opts.seeds = 8;
  opts.calibration.n_samples = 64;
  const auto a = run_failure_study(corpus, methods, opts, 5);
  const auto b = run_failure_study(corpus, methods, opts, 5);
  CHECK(report_json(a) == report_json(b));
  CHECK(report_csv(a) == report_csv(b));
}

TEST_CASE("run_failure_study: rejects empty inputs") {
  std::vector<MethodConfig> methods(1);
  StudyOptions opts;
  CHECK_THROWS_AS(run_failure_study({}, methods, opts, 0), std::invalid_argument);
  Corpus corpus = {{"img", 32, 32, {}}};
  CHECK_THROWS_AS(run_failure_study(corpus, {}, opts, 0), std::invalid_argument);
}
