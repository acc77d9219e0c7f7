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

#include "fencemask/fence.hpp"
#include "fencemask/image.hpp"
#include "fencemask/rng.hpp"

namespace fencemask {

/// Linear application-probability schedule: the probability rises from 0
/// at epoch 0 to max_prob at max_epoch and stays there.
struct ScheduleConfig {
  double max_prob = 0.5;
  int max_epoch = 1;

  void validate() const;
};

/// max_prob × min(epoch / max_epoch, 1). Negative epochs clamp to 0.
double schedule_probability(int epoch, const ScheduleConfig& schedule);

struct AugmentResult {
  ImageBuffer image;
  bool applied = false;
  std::optional<FenceSample> sample;
};

/// Draws u in [0, 1); if u < schedule_probability(epoch), generates a
/// fence mask at the image's dimensions and applies it with the config
/// fill, otherwise returns the input unchanged. The epoch is an explicit
/// parameter so the library carries no training-loop state.
AugmentResult augment(const ImageBuffer& image, const FenceConfig& config,
                      const ScheduleConfig& schedule, int epoch, Rng& rng);

}  // namespace fencemask
