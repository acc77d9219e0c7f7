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

#include "fencemask/image.hpp"

#include <stdexcept>

namespace fencemask {

ImageBuffer ImageBuffer::filled(int width, int height, int channels,
                                std::uint8_t value) {
  if (width < 1 || height < 1 || (channels != 1 && channels != 3)) {
    throw std::invalid_argument("ImageBuffer: bad dimensions or channels");
  }
  ImageBuffer img;
  img.width = width;
  img.height = height;
  img.channels = channels;
  img.data.assign(static_cast<std::size_t>(width) * height * channels, value);
  return img;
}

void ImageBuffer::validate() const {
  if (width < 1 || height < 1 || (channels != 1 && channels != 3)) {
    throw std::invalid_argument("ImageBuffer: bad dimensions or channels");
  }
  if (data.size() != static_cast<std::size_t>(width) * height * channels) {
    throw std::invalid_argument("ImageBuffer: data length mismatch");
  }
}

ImageBuffer apply_mask(const ImageBuffer& image, const BinaryMask& mask,
                       const std::array<std::uint8_t, 3>& fill) {
  image.validate();
  if (mask.width() != image.width || mask.height() != image.height) {
    throw std::invalid_argument("apply_mask: dimension mismatch");
  }
  ImageBuffer out = image;
  const auto& bits = mask.bits();
  const int ch = image.channels;
  for (std::size_t p = 0; p < bits.size(); ++p) {
    if (bits[p]) continue;
    std::uint8_t* px = out.data.data() + p * ch;
    for (int c = 0; c < ch; ++c) px[c] = fill[static_cast<std::size_t>(c)];
  }
  return out;
}

}  // namespace fencemask
