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

#include "fencemask/augment.hpp"

#include <algorithm>
#include <stdexcept>

namespace fencemask {

void ScheduleConfig::validate() const {
  if (!(max_prob >= 0.0 && max_prob <= 1.0)) {
    throw std::invalid_argument("ScheduleConfig: max_prob outside [0, 1]");
  }
  if (max_epoch < 1) {
    throw std::invalid_argument("ScheduleConfig: max_epoch must be >= 1");
  }
}

double schedule_probability(int epoch, const ScheduleConfig& schedule) {
  schedule.validate();
  const double e = static_cast<double>(std::max(epoch, 0));
  return schedule.max_prob * std::min(e / schedule.max_epoch, 1.0);
}

AugmentResult augment(const ImageBuffer& image, const FenceConfig& config,
                      const ScheduleConfig& schedule, int epoch, Rng& rng) {
  image.validate();
  config.validate();
  const double p = schedule_probability(epoch, schedule);
  const double u = rng.uniform_unit();
  if (u >= p) {
    return {image, false, std::nullopt};
  }
  auto [sample, mask] = generate_fence_mask(config, image.width, image.height, rng);
  return {apply_mask(image, mask, config.fill), true, sample};
}

}  // namespace fencemask
