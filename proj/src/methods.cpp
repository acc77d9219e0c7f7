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

#include "fencemask/methods.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fencemask {

std::string_view method_name(Method method) {
  switch (method) {
    case Method::fencemask: return "fencemask";
    case Method::cutout: return "cutout";
    case Method::random_erasing: return "random_erasing";
    case Method::hide_and_seek: return "hide_and_seek";
    case Method::gridmask: return "gridmask";
  }
  throw std::logic_error("method_name: unknown method");
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : all_methods()) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

std::vector<Method> all_methods() {
  return {Method::fencemask, Method::cutout, Method::random_erasing,
          Method::hide_and_seek, Method::gridmask};
}

void MethodConfig::validate() const {
  switch (method) {
    case Method::fencemask: fence.validate(); return;
    case Method::cutout: cutout.validate(); return;
    case Method::random_erasing: erasing.validate(); return;
    case Method::hide_and_seek: hide_and_seek.validate(); return;
    case Method::gridmask: gridmask.validate(); return;
  }
  throw std::logic_error("MethodConfig: unknown method");
}

MaskDraw generate_mask(const MethodConfig& config, int width, int height,
                       Rng& rng) {
  config.validate();
  switch (config.method) {
    case Method::fencemask: {
      auto [sample, mask] = generate_fence_mask(config.fence, width, height, rng);
      return {std::move(mask),
              {{"w_x", sample.w_x},
               {"w_y", sample.w_y},
               {"g_x", sample.g_x},
               {"g_y", sample.g_y},
               {"theta_x", sample.theta_x},
               {"theta_y", sample.theta_y},
               {"phase_x", sample.phase_x},
               {"phase_y", sample.phase_y}}};
    }
    case Method::cutout: {
      // Same draw order as cutout_mask, so both paths are seed-identical.
      const int cx = static_cast<int>(rng.uniform_int(0, width - 1));
      const int cy = static_cast<int>(rng.uniform_int(0, height - 1));
      BinaryMask mask = cutout_mask_at(config.cutout.side, cx, cy, width, height);
      return {std::move(mask),
              {{"side", static_cast<double>(config.cutout.side)},
               {"center_x", static_cast<double>(cx)},
               {"center_y", static_cast<double>(cy)}}};
    }
    case Method::random_erasing: {
      ErasingDraw draw = random_erasing_mask(config.erasing, width, height, rng);
      return {std::move(draw.mask),
              {{"placed", draw.placed ? 1.0 : 0.0},
               {"x", static_cast<double>(draw.x)},
               {"y", static_cast<double>(draw.y)},
               {"w", static_cast<double>(draw.w)},
               {"h", static_cast<double>(draw.h)}}};
    }
    case Method::hide_and_seek: {
      BinaryMask mask =
          hide_and_seek_mask(config.hide_and_seek.divisions,
                             config.hide_and_seek.hide_prob, width, height, rng);
      return {std::move(mask),
              {{"divisions", static_cast<double>(config.hide_and_seek.divisions)},
               {"hide_prob", config.hide_and_seek.hide_prob}}};
    }
    case Method::gridmask: {
      // Same draw order as gridmask_mask.
      const int px = static_cast<int>(rng.uniform_int(0, config.gridmask.period - 1));
      const int py = static_cast<int>(rng.uniform_int(0, config.gridmask.period - 1));
      BinaryMask mask = gridmask_mask_at(config.gridmask.period,
                                         config.gridmask.keep_ratio, px, py,
                                         width, height);
      return {std::move(mask),
              {{"period", static_cast<double>(config.gridmask.period)},
               {"keep_ratio", config.gridmask.keep_ratio},
               {"phase_x", static_cast<double>(px)},
               {"phase_y", static_cast<double>(py)}}};
    }
  }
  throw std::logic_error("generate_mask: unknown method");
}

double get_scale(const MethodConfig& config) {
  switch (config.method) {
    case Method::fencemask: return config.fence.w_min;
    case Method::cutout: return static_cast<double>(config.cutout.side);
    case Method::random_erasing: return config.erasing.area_min;
    case Method::hide_and_seek: return config.hide_and_seek.hide_prob;
    case Method::gridmask: return config.gridmask.keep_ratio;
  }
  throw std::logic_error("get_scale: unknown method");
}

MethodConfig with_scale(const MethodConfig& config, double scale) {
  MethodConfig out = config;
  switch (config.method) {
    case Method::fencemask:
      out.fence.w_min = scale;
      out.fence.w_max = scale;
      return out;
    case Method::cutout:
      out.cutout.side = static_cast<int>(std::lround(scale));
      return out;
    case Method::random_erasing:
      out.erasing.area_min = scale;
      out.erasing.area_max = scale;
      return out;
    case Method::hide_and_seek:
      out.hide_and_seek.hide_prob = scale;
      return out;
    case Method::gridmask:
      out.gridmask.keep_ratio = scale;
      return out;
  }
  throw std::logic_error("with_scale: unknown method");
}

ScaleBounds scale_bounds(const MethodConfig& config, int width, int height) {
  switch (config.method) {
    case Method::fencemask:
      // Width 8x the largest gap pushes occlusion past 0.98.
      return {0.0, 8.0 * config.fence.g_max, false};
    case Method::cutout:
      return {0.0, 2.0 * std::max(width, height), true};
    case Method::random_erasing: return {0.0, 1.0, false};
    case Method::hide_and_seek: return {0.0, 1.0, false};
    case Method::gridmask: return {0.0, 1.0, false};
  }
  throw std::logic_error("scale_bounds: unknown method");
}

}  // namespace fencemask
