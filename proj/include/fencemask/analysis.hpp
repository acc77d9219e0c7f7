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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fencemask/mask.hpp"
#include "fencemask/methods.hpp"
#include "fencemask/rng.hpp"

namespace fencemask {

/// Axis-aligned bounding box in pixel coordinates, [x, x+w) × [y, y+h).
struct BBox {
  int x = 0;
  int y = 0;
  int w = 1;
  int h = 1;
  std::string label;

  bool operator==(const BBox&) const = default;
};

/// Occluded pixels inside the box / box area.
/// Throws std::out_of_range if the box is not fully inside the mask.
double object_occlusion_ratio(const BinaryMask& mask, const BBox& box);

struct CorpusImage {
  std::string name;
  int width = 0;
  int height = 0;
  std::vector<BBox> boxes;
};

using Corpus = std::vector<CorpusImage>;

/// Blank images with annotated, pairwise-disjoint square boxes placed
/// uniformly at random (rejection sampling, bounded attempts).
/// Throws std::runtime_error if the requested count cannot be placed.
Corpus synthesize_small_object_corpus(int image_size, int object_size,
                                      int objects_per_image, int n_images,
                                      Rng& rng);

class CalibrationError : public std::runtime_error {
 public:
  enum class Kind { unreachable_target, non_monotone };

  CalibrationError(Kind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct CalibrationOptions {
  int n_samples = 200;
  double tolerance = 0.01;
  int max_iterations = 48;
};

/// Mean occluded fraction over n_samples masks whose streams derive from
/// rng's root seed. calibrate_to_occlusion measures every candidate with
/// this function and the same rng, so its tolerance contract can be
/// checked externally against the identical seeded measurement.
double mean_occlusion(const MethodConfig& config, int width, int height,
                      int n_samples, const Rng& rng);

/// Bisects the method's designated scale parameter until the mean occluded
/// fraction over n_samples seeded masks is within +/- tolerance of
/// target_fraction. Every candidate is measured with the same derived
/// seeds (common random numbers), so the measurement is a deterministic
/// monotone step function of the scale.
///
/// Throws CalibrationError on an unreachable target or a non-monotone
/// measurement.
MethodConfig calibrate_to_occlusion(const MethodConfig& config,
                                    double target_fraction, int width,
                                    int height, const CalibrationOptions& opts,
                                    Rng& rng);

/// Per-method result of a failure study. per_object_occlusion holds each
/// object's mean occlusion over the seeds; per_object_max the maximum.
/// failure_rate is the fraction of (object, seed) observations whose
/// occlusion exceeds failure_threshold.
struct OcclusionReport {
  std::string method;
  double global_occlusion = 0.0;
  std::vector<double> per_object_occlusion;
  std::vector<double> per_object_max;
  double failure_threshold = 0.0;
  double failure_rate = 0.0;
  int n_images = 0;
  int n_objects = 0;
  int seeds = 0;
};

struct StudyOptions {
  double target_occlusion = 0.3;
  double failure_threshold = 0.9;
  int seeds = 100;
  CalibrationOptions calibration;
};

/// Calibrates every method to the common target occlusion (at the first
/// corpus image's dimensions), generates `seeds` masks per image per
/// method, and aggregates per-object occlusion statistics. Random streams
/// are derived from (master seed, method index, image index, seed index),
/// so results are independent of evaluation order and byte-identical
/// across runs.
std::vector<OcclusionReport> run_failure_study(
    const Corpus& corpus, const std::vector<MethodConfig>& methods,
    const StudyOptions& opts, std::uint64_t master_seed);

}  // namespace fencemask
