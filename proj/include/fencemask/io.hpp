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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fencemask/analysis.hpp"
#include "fencemask/image.hpp"

namespace fencemask {

enum class IoErrorKind {
  missing_file,
  unsupported_format,
  corrupt_data,
  unwritable,
  malformed_json,
  unknown_image_id,
  invalid_bbox,
};

std::string_view io_error_kind_name(IoErrorKind kind);

class IoError : public std::runtime_error {
 public:
  IoError(IoErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  IoErrorKind kind() const { return kind_; }

 private:
  IoErrorKind kind_;
};

/// Decodes a PNG or JPEG file (identified by magic bytes, not extension)
/// to an 8-bit grayscale or RGB buffer. Missing files, files of any other
/// format, and undecodable data raise IoError with the corresponding kind.
ImageBuffer load_image(const std::filesystem::path& path);

/// Writes a lossless PNG; load_image(save_image(img)) returns `img`
/// exactly. The write is atomic: data goes to a temporary file in the
/// target directory which is renamed into place.
void save_image(const ImageBuffer& image, const std::filesystem::path& path);

/// One entry of the COCO-subset annotation file, boxes already clamped.
struct AnnotatedImage {
  std::int64_t id = 0;
  std::string file_name;
  int width = 0;
  int height = 0;
  std::vector<BBox> boxes;
};

struct AnnotationSet {
  std::vector<AnnotatedImage> images;  // in file order
  int clamp_warnings = 0;              // boxes clamped or dropped
};

/// Parses the minimal COCO-compatible subset: top-level "images"
/// (id, file_name, width, height) and "annotations" (image_id,
/// bbox = [x, y, w, h]) arrays. Unknown keys are ignored. Boxes are
/// clamped to image bounds; fully-outside boxes are dropped. Both count
/// as clamp warnings.
AnnotationSet load_annotations(const std::filesystem::path& path);

Corpus to_corpus(const AnnotationSet& annotations);

/// Writes text via a temporary file + rename so readers never observe a
/// partial file. Throws IoError(unwritable) on failure.
void write_text_atomic(const std::filesystem::path& path, std::string_view text);

std::string report_csv(const std::vector<OcclusionReport>& reports);
std::string report_json(const std::vector<OcclusionReport>& reports);

}  // namespace fencemask
