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

#include "fencemask/cli.hpp"

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fencemask/driver.hpp"
#include "fencemask/io.hpp"

namespace fencemask {

namespace {

// Shared mutable state the CLI writes into before building the RunConfig.
struct CliState {
  RunConfig cfg;
  std::string method = "fencemask";
  std::vector<int> fill;
  std::string size;
  std::vector<std::string> methods_list;
  std::vector<std::string> formats;
};

void set_if(const nlohmann::json& j, const char* key, double& out) {
  if (j.contains(key)) out = j.at(key).get<double>();
}
void set_if(const nlohmann::json& j, const char* key, int& out) {
  if (j.contains(key)) out = j.at(key).get<int>();
}
void set_if(const nlohmann::json& j, const char* key, bool& out) {
  if (j.contains(key)) out = j.at(key).get<bool>();
}
void set_if(const nlohmann::json& j, const char* key, std::string& out) {
  if (j.contains(key)) out = j.at(key).get<std::string>();
}
void set_if(const nlohmann::json& j, const char* key, std::uint64_t& out) {
  if (j.contains(key)) out = j.at(key).get<std::uint64_t>();
}
void set_if(const nlohmann::json& j, const char* key, std::filesystem::path& out) {
  if (j.contains(key)) out = j.at(key).get<std::string>();
}

// Applies a JSON config file; command-line flags parsed afterwards win.
void apply_config_file(CliState& state, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError(IoErrorKind::missing_file, "config file not found: " + path.string());
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(IoErrorKind::malformed_json, path.string() + ": " + e.what());
  }

  RunConfig& cfg = state.cfg;
  set_if(j, "input", cfg.input_dir);
  set_if(j, "output", cfg.output_dir);
  set_if(j, "images", cfg.images_dir);
  set_if(j, "annotations", cfg.annotations);
  set_if(j, "method", state.method);
  set_if(j, "seed", cfg.master_seed);
  set_if(j, "workers", cfg.workers);
  set_if(j, "epoch", cfg.epoch);
  set_if(j, "max_prob", cfg.schedule.max_prob);
  set_if(j, "max_epoch", cfg.schedule.max_epoch);
  set_if(j, "relative", cfg.relative_units);
  set_if(j, "w_min", cfg.method.fence.w_min);
  set_if(j, "w_max", cfg.method.fence.w_max);
  set_if(j, "g_min", cfg.method.fence.g_min);
  set_if(j, "g_max", cfg.method.fence.g_max);
  set_if(j, "rot_min", cfg.method.fence.rot_min);
  set_if(j, "rot_max", cfg.method.fence.rot_max);
  set_if(j, "side", cfg.method.cutout.side);
  set_if(j, "area_min", cfg.method.erasing.area_min);
  set_if(j, "area_max", cfg.method.erasing.area_max);
  set_if(j, "aspect_min", cfg.method.erasing.aspect_min);
  set_if(j, "aspect_max", cfg.method.erasing.aspect_max);
  set_if(j, "divisions", cfg.method.hide_and_seek.divisions);
  set_if(j, "hide_prob", cfg.method.hide_and_seek.hide_prob);
  set_if(j, "period", cfg.method.gridmask.period);
  set_if(j, "keep_ratio", cfg.method.gridmask.keep_ratio);
  set_if(j, "size", state.size);
  set_if(j, "sweep", cfg.sweep);
  set_if(j, "target_occlusion", cfg.target_occlusion);
  set_if(j, "threshold", cfg.failure_threshold);
  set_if(j, "study_seeds", cfg.study_seeds);
  set_if(j, "calib_samples", cfg.calibration_samples);
  set_if(j, "synthetic", cfg.synthetic);
  set_if(j, "synth_image_size", cfg.synth_image_size);
  set_if(j, "synth_object_size", cfg.synth_object_size);
  set_if(j, "synth_objects_per_image", cfg.synth_objects_per_image);
  set_if(j, "synth_images", cfg.synth_images);
  if (j.contains("fill")) state.fill = j.at("fill").get<std::vector<int>>();
  if (j.contains("methods")) {
    state.methods_list = j.at("methods").get<std::vector<std::string>>();
  }
  if (j.contains("formats")) {
    state.formats = j.at("formats").get<std::vector<std::string>>();
  }
}

void add_method_options(CLI::App* cmd, CliState& state) {
  RunConfig& cfg = state.cfg;
  cmd->add_option("--method", state.method,
                  "fencemask | cutout | random_erasing | hide_and_seek | gridmask");
  cmd->add_option("--w-min", cfg.method.fence.w_min, "fence width range low");
  cmd->add_option("--w-max", cfg.method.fence.w_max, "fence width range high");
  cmd->add_option("--g-min", cfg.method.fence.g_min, "fence gap range low");
  cmd->add_option("--g-max", cfg.method.fence.g_max, "fence gap range high");
  cmd->add_option("--rot-min", cfg.method.fence.rot_min, "rotation range low, degrees");
  cmd->add_option("--rot-max", cfg.method.fence.rot_max, "rotation range high, degrees");
  cmd->add_option("--fill", state.fill, "fill value R,G,B")->delimiter(',')->expected(1, 3);
  cmd->add_flag("--relative", cfg.relative_units,
                "treat fence widths/gaps as fractions of min(H, W)");
  cmd->add_option("--side", cfg.method.cutout.side, "cutout square side");
  cmd->add_option("--area-min", cfg.method.erasing.area_min, "erasing area fraction low");
  cmd->add_option("--area-max", cfg.method.erasing.area_max, "erasing area fraction high");
  cmd->add_option("--aspect-min", cfg.method.erasing.aspect_min, "erasing aspect low");
  cmd->add_option("--aspect-max", cfg.method.erasing.aspect_max, "erasing aspect high");
  cmd->add_option("--divisions", cfg.method.hide_and_seek.divisions,
                  "hide-and-seek grid divisions per axis");
  cmd->add_option("--hide-prob", cfg.method.hide_and_seek.hide_prob,
                  "hide-and-seek per-cell hide probability");
  cmd->add_option("--period", cfg.method.gridmask.period, "gridmask period, pixels");
  cmd->add_option("--keep-ratio", cfg.method.gridmask.keep_ratio, "gridmask keep ratio");
}

bool parse_size(const std::string& text, int& width, int& height) {
  const auto x = text.find('x');
  if (x == std::string::npos) return false;
  try {
    width = std::stoi(text.substr(0, x));
    height = std::stoi(text.substr(x + 1));
  } catch (...) {
    return false;
  }
  return width >= 1 && height >= 1;
}

// Turns accumulated CLI state into the final RunConfig.
RunConfig finalize(CliState& state) {
  RunConfig cfg = state.cfg;
  const auto parsed = parse_method(state.method);
  if (!parsed) {
    throw std::invalid_argument("unknown method: " + state.method);
  }
  cfg.method.method = *parsed;

  if (!state.fill.empty()) {
    for (std::size_t c = 0; c < 3; ++c) {
      const int v = state.fill[std::min(c, state.fill.size() - 1)];
      if (v < 0 || v > 255) throw std::invalid_argument("fill values must be in [0, 255]");
      cfg.fill[c] = static_cast<std::uint8_t>(v);
    }
  }
  cfg.method.fence.fill = cfg.fill;

  if (cfg.relative_units) {
    cfg.relative_fence.w_min = cfg.method.fence.w_min;
    cfg.relative_fence.w_max = cfg.method.fence.w_max;
    cfg.relative_fence.g_min = cfg.method.fence.g_min;
    cfg.relative_fence.g_max = cfg.method.fence.g_max;
    cfg.relative_fence.rot_min = cfg.method.fence.rot_min;
    cfg.relative_fence.rot_max = cfg.method.fence.rot_max;
    cfg.relative_fence.fill = cfg.fill;
  }

  if (!state.size.empty() &&
      !parse_size(state.size, cfg.gallery_width, cfg.gallery_height)) {
    throw std::invalid_argument("--size must look like WxH, got: " + state.size);
  }

  if (!state.methods_list.empty()) {
    cfg.study_methods.clear();
    for (const auto& name : state.methods_list) {
      const auto m = parse_method(name);
      if (!m) throw std::invalid_argument("unknown method in --methods: " + name);
      cfg.study_methods.push_back(*m);
    }
  }
  if (!state.formats.empty()) cfg.report_formats = state.formats;
  return cfg;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CliState state;
  std::string config_path;

  CLI::App app{"FenceMask occlusion-augmentation toolkit"};
  app.require_subcommand(1);

  // The config file is applied before flag parsing so flags override it.
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
  }
  try {
    if (!config_path.empty()) apply_config_file(state, config_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  auto* augment_cmd =
      app.add_subcommand("augment", "apply the chosen occlusion method to a corpus");
  augment_cmd->add_option("--config", config_path, "JSON config file (flags override)");
  augment_cmd->add_option("--input", state.cfg.input_dir, "input image directory");
  augment_cmd->add_option("--output", state.cfg.output_dir, "output directory");
  augment_cmd->add_option("--max-prob", state.cfg.schedule.max_prob,
                          "peak application probability");
  augment_cmd->add_option("--max-epoch", state.cfg.schedule.max_epoch,
                          "epoch at which the probability peaks");
  augment_cmd->add_option("--epoch", state.cfg.epoch, "current epoch");
  augment_cmd->add_option("--seed", state.cfg.master_seed, "master seed");
  augment_cmd->add_option("--workers", state.cfg.workers, "worker thread count");
  add_method_options(augment_cmd, state);

  auto* gallery_cmd =
      app.add_subcommand("gallery", "render masks and overlays for a parameter sweep");
  gallery_cmd->add_option("--config", config_path, "JSON config file (flags override)");
  gallery_cmd->add_option("--output", state.cfg.output_dir, "output directory");
  gallery_cmd->add_option("--size", state.size, "canvas size WxH");
  gallery_cmd->add_option("--sweep", state.cfg.sweep, "PARAM=a..b:step");
  gallery_cmd->add_option("--seed", state.cfg.master_seed, "master seed");
  add_method_options(gallery_cmd, state);

  auto* study_cmd = app.add_subcommand(
      "study", "per-object occlusion failure study at matched global occlusion");
  study_cmd->add_option("--config", config_path, "JSON config file (flags override)");
  study_cmd->add_option("--images", state.cfg.images_dir, "corpus image directory");
  study_cmd->add_option("--annotations", state.cfg.annotations,
                        "COCO-subset annotation JSON");
  study_cmd->add_option("--output", state.cfg.output_dir, "report directory");
  study_cmd->add_option("--methods", state.methods_list, "comma-separated method list")
      ->delimiter(',');
  study_cmd->add_option("--target-occlusion", state.cfg.target_occlusion,
                        "matched global occlusion target");
  study_cmd->add_option("--threshold", state.cfg.failure_threshold,
                        "per-object failure threshold");
  study_cmd->add_option("--seeds", state.cfg.study_seeds, "masks per image per method");
  study_cmd->add_option("--calib-samples", state.cfg.calibration_samples,
                        "masks per calibration measurement");
  study_cmd->add_option("--seed", state.cfg.master_seed, "master seed");
  study_cmd->add_flag("--synthetic", state.cfg.synthetic,
                      "use the built-in synthetic small-object corpus");
  study_cmd->add_option("--synth-image-size", state.cfg.synth_image_size,
                        "synthetic canvas side");
  study_cmd->add_option("--synth-object-size", state.cfg.synth_object_size,
                        "synthetic object side");
  study_cmd->add_option("--synth-objects", state.cfg.synth_objects_per_image,
                        "synthetic objects per image");
  study_cmd->add_option("--synth-images", state.cfg.synth_images,
                        "synthetic image count");
  study_cmd->add_option("--formats", state.formats, "report formats (csv, json)")
      ->delimiter(',');
  add_method_options(study_cmd, state);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  RunConfig cfg;
  try {
    cfg = finalize(state);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (augment_cmd->parsed()) cfg.command = RunConfig::Command::augment;
  if (gallery_cmd->parsed()) cfg.command = RunConfig::Command::gallery;
  if (study_cmd->parsed()) cfg.command = RunConfig::Command::study;
  return run_command(cfg);
}

}  // namespace fencemask
