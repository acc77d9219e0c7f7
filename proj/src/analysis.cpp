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

#include "fencemask/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace fencemask {

namespace {

// Substream tags for derived random streams.
constexpr std::uint64_t kTagCalibrationSample = 0x43414c49;  // "CALI"
constexpr std::uint64_t kTagMethodCalibration = 0x4d435442;
constexpr std::uint64_t kTagStudyMask = 0x53545544;  // "STUD"
constexpr std::uint64_t kTagCorpusImage = 0x434f5250;  // "CORP"

bool boxes_overlap(const BBox& a, const BBox& b) {
  return a.x < b.x + b.w && b.x < a.x + a.w && a.y < b.y + b.h &&
         b.y < a.y + a.h;
}

}  // namespace

double mean_occlusion(const MethodConfig& config, int width, int height,
                      int n_samples, const Rng& rng) {
  double sum = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    Rng stream = rng.derive({kTagCalibrationSample, static_cast<std::uint64_t>(i)});
    sum += occluded_fraction(generate_mask(config, width, height, stream).mask);
  }
  return sum / n_samples;
}

double object_occlusion_ratio(const BinaryMask& mask, const BBox& box) {
  if (box.w < 1 || box.h < 1 || box.x < 0 || box.y < 0 ||
      box.x + box.w > mask.width() || box.y + box.h > mask.height()) {
    throw std::out_of_range("object_occlusion_ratio: box outside mask bounds");
  }
  std::int64_t occluded = 0;
  for (int y = box.y; y < box.y + box.h; ++y) {
    const auto* row = mask.bits().data() + static_cast<std::size_t>(y) * mask.width();
    for (int x = box.x; x < box.x + box.w; ++x) {
      if (!row[x]) ++occluded;
    }
  }
  return static_cast<double>(occluded) /
         (static_cast<double>(box.w) * static_cast<double>(box.h));
}

Corpus synthesize_small_object_corpus(int image_size, int object_size,
                                      int objects_per_image, int n_images,
                                      Rng& rng) {
  if (image_size < 1 || object_size < 1 || object_size > image_size) {
    throw std::invalid_argument(
        "synthesize_small_object_corpus: need 1 <= object_size <= image_size");
  }
  if (objects_per_image < 0 || n_images < 0) {
    throw std::invalid_argument(
        "synthesize_small_object_corpus: negative counts");
  }
  constexpr int kAttemptsPerObject = 1000;

  Corpus corpus;
  corpus.reserve(static_cast<std::size_t>(n_images));
  for (int i = 0; i < n_images; ++i) {
    Rng stream = rng.derive({kTagCorpusImage, static_cast<std::uint64_t>(i)});
    CorpusImage image;
    char name[32];
    std::snprintf(name, sizeof(name), "synthetic_%04d", i);
    image.name = name;
    image.width = image_size;
    image.height = image_size;
    const int max_pos = image_size - object_size;
    for (int obj = 0; obj < objects_per_image; ++obj) {
      bool placed = false;
      for (int attempt = 0; attempt < kAttemptsPerObject && !placed; ++attempt) {
        BBox box{static_cast<int>(stream.uniform_int(0, max_pos)),
                 static_cast<int>(stream.uniform_int(0, max_pos)), object_size,
                 object_size, "object_" + std::to_string(obj)};
        const bool overlaps =
            std::any_of(image.boxes.begin(), image.boxes.end(),
                        [&](const BBox& other) { return boxes_overlap(box, other); });
        if (!overlaps) {
          image.boxes.push_back(std::move(box));
          placed = true;
        }
      }
      if (!placed) {
        std::ostringstream msg;
        msg << "synthesize_small_object_corpus: could not place object " << obj
            << " of image " << i << " within " << kAttemptsPerObject
            << " attempts";
        throw std::runtime_error(msg.str());
      }
    }
    corpus.push_back(std::move(image));
  }
  return corpus;
}

MethodConfig calibrate_to_occlusion(const MethodConfig& config,
                                    double target_fraction, int width,
                                    int height, const CalibrationOptions& opts,
                                    Rng& rng) {
  config.validate();
  if (!(target_fraction >= 0.0 && target_fraction <= 1.0)) {
    throw std::invalid_argument("calibrate_to_occlusion: target outside [0, 1]");
  }
  if (width < 1 || height < 1 || opts.n_samples < 1) {
    throw std::invalid_argument("calibrate_to_occlusion: bad dimensions or n_samples");
  }

  const ScaleBounds bounds = scale_bounds(config, width, height);
  // Same derived seeds for every candidate (common random numbers), so the
  // measurement is monotone in the scale wherever the true mean is.
  auto measure = [&](double scale) {
    return mean_occlusion(with_scale(config, scale), width, height,
                          opts.n_samples, rng);
  };

  double lo = bounds.lo, hi = bounds.hi;
  double f_lo = measure(lo);
  double f_hi = measure(hi);
  const bool increasing = f_hi >= f_lo;
  // Monotonicity slack: with common random numbers the only wobble left is
  // rounding of rectangle sides, well under this.
  constexpr double kMonotoneSlack = 0.02;

  double best_scale = lo;
  double best_err = std::abs(f_lo - target_fraction);
  auto consider = [&](double scale, double value) {
    const double err = std::abs(value - target_fraction);
    if (err < best_err) {
      best_err = err;
      best_scale = scale;
    }
  };
  consider(hi, f_hi);

  const double f_min = std::min(f_lo, f_hi);
  const double f_max = std::max(f_lo, f_hi);
  if (target_fraction < f_min - opts.tolerance ||
      target_fraction > f_max + opts.tolerance) {
    std::ostringstream msg;
    msg << "calibrate_to_occlusion: target " << target_fraction
        << " outside reachable range [" << f_min << ", " << f_max
        << "] for method " << method_name(config.method);
    throw CalibrationError(CalibrationError::Kind::unreachable_target, msg.str());
  }

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    if (best_err <= 0.5 * opts.tolerance) break;
    double mid;
    if (bounds.integral) {
      if (hi - lo <= 1.0) break;
      mid = std::floor((lo + hi) / 2.0);
    } else {
      if (hi - lo <= 1e-9 * (bounds.hi - bounds.lo)) break;
      mid = 0.5 * (lo + hi);
    }
    const double f_mid = measure(mid);
    consider(mid, f_mid);

    const double lo_val = increasing ? f_lo : f_hi;
    const double hi_val = increasing ? f_hi : f_lo;
    if (f_mid < lo_val - kMonotoneSlack || f_mid > hi_val + kMonotoneSlack) {
      std::ostringstream msg;
      msg << "calibrate_to_occlusion: measurement " << f_mid << " at scale "
          << mid << " breaks monotonicity ([" << lo_val << ", " << hi_val
          << "]) for method " << method_name(config.method);
      throw CalibrationError(CalibrationError::Kind::non_monotone, msg.str());
    }

    const bool go_up = increasing ? (f_mid < target_fraction)
                                  : (f_mid > target_fraction);
    if (go_up) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }

  if (best_err > opts.tolerance) {
    std::ostringstream msg;
    msg << "calibrate_to_occlusion: best achievable mean occlusion misses "
        << "target " << target_fraction << " by " << best_err << " for method "
        << method_name(config.method);
    throw CalibrationError(CalibrationError::Kind::unreachable_target, msg.str());
  }
  return with_scale(config, best_scale);
}

std::vector<OcclusionReport> run_failure_study(
    const Corpus& corpus, const std::vector<MethodConfig>& methods,
    const StudyOptions& opts, std::uint64_t master_seed) {
  if (corpus.empty()) {
    throw std::invalid_argument("run_failure_study: empty corpus");
  }
  if (methods.empty()) {
    throw std::invalid_argument("run_failure_study: no methods");
  }
  if (opts.seeds < 1) {
    throw std::invalid_argument("run_failure_study: seeds must be >= 1");
  }

  std::size_t n_objects = 0;
  for (const auto& image : corpus) n_objects += image.boxes.size();

  const Rng master(master_seed);
  std::vector<OcclusionReport> reports;
  reports.reserve(methods.size());

  for (std::size_t mi = 0; mi < methods.size(); ++mi) {
    Rng calib_rng = master.derive({kTagMethodCalibration, mi});
    const MethodConfig calibrated = calibrate_to_occlusion(
        methods[mi], opts.target_occlusion, corpus.front().width,
        corpus.front().height, opts.calibration, calib_rng);

    OcclusionReport report;
    report.method = std::string(method_name(methods[mi].method));
    report.failure_threshold = opts.failure_threshold;
    report.n_images = static_cast<int>(corpus.size());
    report.n_objects = static_cast<int>(n_objects);
    report.seeds = opts.seeds;
    report.per_object_occlusion.assign(n_objects, 0.0);
    report.per_object_max.assign(n_objects, 0.0);

    double global_sum = 0.0;
    std::int64_t failures = 0;
    std::size_t object_base = 0;
    for (std::size_t ii = 0; ii < corpus.size(); ++ii) {
      const CorpusImage& image = corpus[ii];
      for (int s = 0; s < opts.seeds; ++s) {
        Rng stream =
            master.derive({kTagStudyMask, mi, ii, static_cast<std::uint64_t>(s)});
        const BinaryMask mask =
            generate_mask(calibrated, image.width, image.height, stream).mask;
        global_sum += occluded_fraction(mask);
        for (std::size_t bi = 0; bi < image.boxes.size(); ++bi) {
          const double ratio = object_occlusion_ratio(mask, image.boxes[bi]);
          const std::size_t obj = object_base + bi;
          report.per_object_occlusion[obj] += ratio;
          report.per_object_max[obj] = std::max(report.per_object_max[obj], ratio);
          if (ratio > opts.failure_threshold) ++failures;
        }
      }
      object_base += image.boxes.size();
    }

    const double n_masks = static_cast<double>(corpus.size()) * opts.seeds;
    report.global_occlusion = global_sum / n_masks;
    for (double& v : report.per_object_occlusion) v /= opts.seeds;
    const double observations = static_cast<double>(n_objects) * opts.seeds;
    report.failure_rate =
        observations > 0.0 ? static_cast<double>(failures) / observations : 0.0;
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace fencemask
