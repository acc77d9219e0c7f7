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

#include "fencemask/mask.hpp"

#include <algorithm>
#include <stdexcept>

namespace fencemask {

BinaryMask::BinaryMask(int width, int height, bool keep_all)
    : width_(width), height_(height) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("BinaryMask: dimensions must be >= 1");
  }
  bits_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height),
               keep_all ? 1 : 0);
}

std::int64_t BinaryMask::occluded_count() const {
  return static_cast<std::int64_t>(std::count(bits_.begin(), bits_.end(), 0));
}

BinaryMask combine_fences(const BinaryMask& mask_a, const BinaryMask& mask_b) {
  if (mask_a.width() != mask_b.width() || mask_a.height() != mask_b.height()) {
    throw std::invalid_argument("combine_fences: dimension mismatch");
  }
  BinaryMask out = mask_a;
  const auto& b = mask_b.bits();
  auto& o = out.bits();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] &= b[i];
  return out;
}

double occluded_fraction(const BinaryMask& mask) {
  const double total =
      static_cast<double>(mask.width()) * static_cast<double>(mask.height());
  return static_cast<double>(mask.occluded_count()) / total;
}

}  // namespace fencemask
