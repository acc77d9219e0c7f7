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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fencemask/baselines.hpp"
#include "fencemask/fence.hpp"

namespace fencemask {

enum class Method {
  fencemask,
  cutout,
  random_erasing,
  hide_and_seek,
  gridmask,
};

std::string_view method_name(Method method);
std::optional<Method> parse_method(std::string_view name);
std::vector<Method> all_methods();

/// One method selection plus every method's parameters; only the block for
/// the selected method is read. Keeping all blocks side by side lets the
/// CLI and the study fill defaults once and switch methods freely.
struct MethodConfig {
  Method method = Method::fencemask;
  FenceConfig fence;
  CutoutConfig cutout;
  RandomErasingConfig erasing;
  HideAndSeekConfig hide_and_seek;
  GridMaskConfig gridmask;

  void validate() const;  // validates the selected method's block
};

/// A generated mask plus the sampled parameters that produced it, as
/// name/value pairs for manifests and reports.
struct MaskDraw {
  BinaryMask mask;
  std::vector<std::pair<std::string, double>> params;
};

/// Generates one mask for the selected method. For a given seed this is
/// bit-identical to calling the method's own generator directly: the
/// dispatcher consumes the random stream in exactly the same order.
MaskDraw generate_mask(const MethodConfig& config, int width, int height,
                       Rng& rng);

/// The designated calibration scale parameter per method:
/// fencemask → fence width (w_min = w_max), cutout → side,
/// random_erasing → area fraction (area_min = area_max),
/// hide_and_seek → hide_prob, gridmask → keep_ratio.
double get_scale(const MethodConfig& config);
MethodConfig with_scale(const MethodConfig& config, double scale);

struct ScaleBounds {
  double lo = 0.0;
  double hi = 1.0;
  bool integral = false;  // search over whole numbers (cutout side)
};
ScaleBounds scale_bounds(const MethodConfig& config, int width, int height);

}  // namespace fencemask
