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

#include "fencemask/driver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "fencemask/io.hpp"

namespace fencemask {

namespace {

constexpr std::uint64_t kTagAugmentImage = 0x41554721;
constexpr std::uint64_t kTagGalleryEntry = 0x47414c21;
constexpr std::uint64_t kTagSyntheticCorpus = 0x53594e21;

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool is_image_file(const std::filesystem::path& path) {
  const std::string ext = lowercase(path.extension().string());
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

std::vector<std::filesystem::path> list_input_images(
    const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw IoError(IoErrorKind::missing_file,
                  "input directory not found: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && is_image_file(entry.path())) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
  return files;
}

// Output names: input stem + .png; clashing stems (a.png vs a.jpg) get an
// index prefix so both survive.
std::vector<std::string> output_names(const std::vector<std::filesystem::path>& inputs) {
  std::vector<std::string> stems;
  stems.reserve(inputs.size());
  for (const auto& p : inputs) stems.push_back(p.stem().string());
  std::vector<std::string> names(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const bool clash =
        std::count(stems.begin(), stems.end(), stems[i]) > 1;
    names[i] = clash ? std::to_string(i) + "_" + stems[i] + ".png"
                     : stems[i] + ".png";
  }
  return names;
}

MethodConfig method_for_image(const RunConfig& config, int width, int height) {
  MethodConfig m = config.method;
  if (config.relative_units && m.method == Method::fencemask) {
    m.fence = config.relative_fence.resolve(width, height);
  }
  return m;
}

nlohmann::json params_json(const std::vector<std::pair<std::string, double>>& params) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, value] : params) j[name] = value;
  return j;
}

int run_augment(const RunConfig& config) {
  const auto inputs = list_input_images(config.input_dir);
  if (inputs.empty()) {
    throw IoError(IoErrorKind::missing_file,
                  "no PNG/JPEG images in " + config.input_dir.string());
  }
  std::error_code ec;
  if (std::filesystem::exists(config.output_dir) &&
      std::filesystem::equivalent(config.input_dir, config.output_dir, ec)) {
    throw std::invalid_argument("output directory must differ from input");
  }
  std::filesystem::create_directories(config.output_dir);

  const auto names = output_names(inputs);
  const Rng master(config.master_seed);
  std::vector<std::string> manifest_lines(inputs.size());
  std::vector<std::string> errors(inputs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<int> applied_count{0};

  auto process = [&](std::size_t i) {
    Rng rng = master.derive({kTagAugmentImage, static_cast<std::uint64_t>(i)});
    const ImageBuffer image = load_image(inputs[i]);
    const MethodConfig method = method_for_image(config, image.width, image.height);

    // Identical stream consumption to augment(): one uniform draw for the
    // schedule, then the method's own draws.
    const double p = schedule_probability(config.epoch, config.schedule);
    const double u = rng.uniform_unit();

    nlohmann::json record;
    record["index"] = i;
    record["input"] = inputs[i].string();
    // Output names are relative so manifests stay byte-comparable across
    // output roots.
    const std::filesystem::path out_path = config.output_dir / names[i];
    record["output"] = names[i];
    record["method"] = std::string(method_name(method.method));
    record["seed"] = std::to_string(rng.root_seed());

    if (u < p) {
      MaskDraw draw = generate_mask(method, image.width, image.height, rng);
      save_image(apply_mask(image, draw.mask, config.fill), out_path);
      record["applied"] = true;
      record["params"] = params_json(draw.params);
      applied_count.fetch_add(1);
    } else {
      save_image(image, out_path);
      record["applied"] = false;
      record["params"] = nullptr;
    }
    manifest_lines[i] = record.dump();
  };

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= inputs.size()) return;
      try {
        process(i);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };

  const int n_workers =
      std::clamp(config.workers, 1, static_cast<int>(inputs.size()));
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_workers));
    for (int t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!errors[i].empty()) {
      std::cerr << "error: " << inputs[i].string() << ": " << errors[i] << "\n";
      return 1;
    }
  }

  std::ostringstream manifest;
  for (const auto& line : manifest_lines) manifest << line << '\n';
  write_text_atomic(config.output_dir / "manifest.jsonl", manifest.str());

  std::cout << "augmented " << inputs.size() << " images ("
            << applied_count.load() << " masked) -> "
            << config.output_dir.string() << "\n";
  return 0;
}

struct SweepSpec {
  std::string param;
  double from = 0.0;
  double to = 0.0;
  double step = 1.0;
};

SweepSpec parse_sweep(const std::string& text) {
  // PARAM=a..b:step
  const auto eq = text.find('=');
  const auto dots = text.find("..");
  const auto colon = text.find(':', dots == std::string::npos ? 0 : dots);
  if (eq == std::string::npos || dots == std::string::npos ||
      colon == std::string::npos || eq > dots || dots > colon) {
    throw std::invalid_argument("sweep must look like PARAM=a..b:step, got: " + text);
  }
  SweepSpec spec;
  spec.param = text.substr(0, eq);
  spec.from = std::stod(text.substr(eq + 1, dots - eq - 1));
  spec.to = std::stod(text.substr(dots + 2, colon - dots - 2));
  spec.step = std::stod(text.substr(colon + 1));
  if (spec.step <= 0.0 || spec.to < spec.from) {
    throw std::invalid_argument("sweep needs step > 0 and b >= a: " + text);
  }
  return spec;
}

void apply_sweep_param(MethodConfig& config, const std::string& param, double value) {
  const long rounded = std::lround(value);
  if (param == "w") {
    config.fence.w_min = config.fence.w_max = value;
  } else if (param == "g") {
    config.fence.g_min = config.fence.g_max = value;
  } else if (param == "theta") {
    config.fence.rot_min = config.fence.rot_max = value;
  } else if (param == "side") {
    config.cutout.side = static_cast<int>(rounded);
  } else if (param == "area") {
    config.erasing.area_min = config.erasing.area_max = value;
  } else if (param == "p") {
    config.hide_and_seek.hide_prob = value;
  } else if (param == "divisions") {
    config.hide_and_seek.divisions = static_cast<int>(rounded);
  } else if (param == "r") {
    config.gridmask.keep_ratio = value;
  } else if (param == "d") {
    config.gridmask.period = static_cast<int>(rounded);
  } else {
    throw std::invalid_argument("unknown sweep parameter: " + param);
  }
}

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

ImageBuffer gradient_base(int width, int height) {
  ImageBuffer img = ImageBuffer::filled(width, height, 3, 0);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      img.at(x, y, 0) = static_cast<std::uint8_t>(
          width > 1 ? x * 255 / (width - 1) : 0);
      img.at(x, y, 1) = static_cast<std::uint8_t>(
          height > 1 ? y * 255 / (height - 1) : 0);
      img.at(x, y, 2) = 128;
    }
  }
  return img;
}

ImageBuffer mask_to_image(const BinaryMask& mask) {
  ImageBuffer img = ImageBuffer::filled(mask.width(), mask.height(), 1, 0);
  const auto& bits = mask.bits();
  for (std::size_t i = 0; i < bits.size(); ++i) {
    img.data[i] = bits[i] ? 255 : 0;
  }
  return img;
}

int run_gallery(const RunConfig& config) {
  if (config.sweep.empty()) {
    throw std::invalid_argument("gallery requires --sweep PARAM=a..b:step");
  }
  const SweepSpec sweep = parse_sweep(config.sweep);
  std::filesystem::create_directories(config.output_dir);

  const ImageBuffer base = gradient_base(config.gallery_width, config.gallery_height);
  const Rng master(config.master_seed);
  nlohmann::json index = nlohmann::json::array();

  int k = 0;
  for (double v = sweep.from; v <= sweep.to + 1e-9; v += sweep.step, ++k) {
    MethodConfig method = config.method;
    apply_sweep_param(method, sweep.param, v);
    Rng rng = master.derive({kTagGalleryEntry, static_cast<std::uint64_t>(k)});
    MaskDraw draw = generate_mask(method, config.gallery_width,
                                  config.gallery_height, rng);

    const std::string tag = sweep.param + "_" + format_value(v);
    const std::string mask_name = "mask_" + tag + ".png";
    const std::string overlay_name = "overlay_" + tag + ".png";
    save_image(mask_to_image(draw.mask), config.output_dir / mask_name);
    save_image(apply_mask(base, draw.mask, config.fill),
               config.output_dir / overlay_name);

    index.push_back({{"param", sweep.param},
                     {"value", v},
                     {"occluded_fraction", occluded_fraction(draw.mask)},
                     {"mask", mask_name},
                     {"overlay", overlay_name},
                     {"params", params_json(draw.params)}});
  }
  write_text_atomic(config.output_dir / "index.json", index.dump(2) + "\n");
  std::cout << "gallery: " << k << " masks -> " << config.output_dir.string() << "\n";
  return 0;
}

Corpus load_study_corpus(const RunConfig& config) {
  if (config.synthetic) {
    Rng rng = Rng(config.master_seed).derive({kTagSyntheticCorpus});
    return synthesize_small_object_corpus(
        config.synth_image_size, config.synth_object_size,
        config.synth_objects_per_image, config.synth_images, rng);
  }
  const AnnotationSet set = load_annotations(config.annotations);
  for (const auto& img : set.images) {
    const auto path = config.images_dir / img.file_name;
    if (!std::filesystem::exists(path)) {
      throw IoError(IoErrorKind::missing_file,
                    "annotated image not found: " + path.string());
    }
  }
  if (set.clamp_warnings > 0) {
    std::cerr << "warning: " << set.clamp_warnings
              << " bounding boxes clamped to image bounds\n";
  }
  return to_corpus(set);
}

int run_study(const RunConfig& config) {
  const Corpus corpus = load_study_corpus(config);

  std::vector<MethodConfig> methods;
  methods.reserve(config.study_methods.size());
  for (Method m : config.study_methods) {
    MethodConfig mc = config.method;
    mc.method = m;
    methods.push_back(mc);
  }

  StudyOptions opts;
  opts.target_occlusion = config.target_occlusion;
  opts.failure_threshold = config.failure_threshold;
  opts.seeds = config.study_seeds;
  opts.calibration.n_samples = config.calibration_samples;

  const auto reports = run_failure_study(corpus, methods, opts, config.master_seed);

  std::filesystem::create_directories(config.output_dir);
  const std::string csv = report_csv(reports);
  for (const auto& format : config.report_formats) {
    if (format == "csv") {
      write_text_atomic(config.output_dir / "study.csv", csv);
    } else if (format == "json") {
      write_text_atomic(config.output_dir / "study.json", report_json(reports));
    } else {
      throw std::invalid_argument("unknown report format: " + format);
    }
  }
  std::cout << csv;
  return 0;
}

}  // namespace

int run_command(const RunConfig& config) {
  try {
    if (config.output_dir.empty()) {
      throw std::invalid_argument("an output directory is required");
    }
    switch (config.command) {
      case RunConfig::Command::augment: return run_augment(config);
      case RunConfig::Command::gallery: return run_gallery(config);
      case RunConfig::Command::study: return run_study(config);
    }
    throw std::logic_error("unknown command");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace fencemask
