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
#include <vector>

#include "fencemask/mask.hpp"

namespace fencemask {

/// H×W×C pixel array, 8 bits per channel, row-major interleaved.
/// channels is 1 (grayscale) or 3 (RGB).
struct ImageBuffer {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<std::uint8_t> data;

  static ImageBuffer filled(int width, int height, int channels,
                            std::uint8_t value);

  std::uint8_t& at(int x, int y, int c) {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  std::uint8_t at(int x, int y, int c) const {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }

  /// data length must equal width × height × channels.
  void validate() const;

  bool operator==(const ImageBuffer&) const = default;
};

/// Kept pixels pass through unchanged; occluded pixels are replaced by the
/// fill value channel-wise (grayscale images use fill[0]). With fill = 0
/// this coincides with multiplying the image by the mask.
///
/// Throws std::invalid_argument on dimension mismatch.
ImageBuffer apply_mask(const ImageBuffer& image, const BinaryMask& mask,
                       const std::array<std::uint8_t, 3>& fill);

}  // namespace fencemask
