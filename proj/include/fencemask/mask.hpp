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
#include <vector>

namespace fencemask {

/// Per-pixel keep/occlude grid. keep == 1 means the pixel is retained,
/// keep == 0 means it is occluded (replaced by the fill value on apply).
class BinaryMask {
 public:
  BinaryMask(int width, int height, bool keep_all = true);

  int width() const { return width_; }
  int height() const { return height_; }

  bool keep(int x, int y) const { return bits_[index(x, y)] != 0; }
  void set_keep(int x, int y, bool k) { bits_[index(x, y)] = k ? 1 : 0; }

  /// Row-major keep bits, one byte per pixel (0 or 1).
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::vector<std::uint8_t>& bits() { return bits_; }

  std::int64_t occluded_count() const;

  bool operator==(const BinaryMask&) const = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_;
  int height_;
  std::vector<std::uint8_t> bits_;
};

/// Pointwise product of keep bits: kept iff kept by both inputs, so the
/// occluded set is the union of the two stripe families.
BinaryMask combine_fences(const BinaryMask& mask_a, const BinaryMask& mask_b);

/// Occluded pixels / total pixels, in [0, 1].
double occluded_fraction(const BinaryMask& mask);

}  // namespace fencemask
