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
#include <filesystem>
#include <string>
#include <vector>

#include "fencemask/analysis.hpp"
#include "fencemask/augment.hpp"
#include "fencemask/methods.hpp"

namespace fencemask {

/// Fully resolved invocation of one CLI command. Everything that affects
/// output lives here (no environment variables, no hidden state); the
/// master seed defaults to 0 so no run is ever nondeterministic.
struct RunConfig {
  enum class Command { augment, gallery, study };
  Command command = Command::augment;

  std::filesystem::path input_dir;    // augment: source images
  std::filesystem::path output_dir;   // all commands: artifacts
  std::filesystem::path images_dir;   // study: corpus images
  std::filesystem::path annotations;  // study: COCO-subset JSON

  MethodConfig method;
  std::array<std::uint8_t, 3> fill{0, 0, 0};
  bool relative_units = false;
  RelativeFenceConfig relative_fence;

  ScheduleConfig schedule{1.0, 1};
  int epoch = 1;

  std::uint64_t master_seed = 0;
  int workers = 1;

  // gallery
  int gallery_width = 512;
  int gallery_height = 512;
  std::string sweep;  // "PARAM=a..b:step"

  // study
  std::vector<Method> study_methods = all_methods();
  double target_occlusion = 0.3;
  double failure_threshold = 0.9;
  int study_seeds = 100;
  int calibration_samples = 200;
  bool synthetic = false;
  int synth_image_size = 512;
  int synth_object_size = 16;
  int synth_objects_per_image = 20;
  int synth_images = 50;
  std::vector<std::string> report_formats{"csv", "json"};
};

/// Executes the command, writing artifacts under config.output_dir.
/// Returns 0 on success; on any error prints a diagnostic to stderr and
/// returns nonzero. Output files are written atomically (temp + rename),
/// per-image random streams are derived from (master seed, sorted input
/// index), and manifests are emitted in input order, so results do not
/// depend on the worker count.
int run_command(const RunConfig& config);

}  // namespace fencemask
