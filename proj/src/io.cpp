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

#include "fencemask/io.hpp"

#include <algorithm>
#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <jpeglib.h>
#include <png.h>

#include <json.hpp>

namespace fencemask {

namespace {

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec) || ec) {
    throw IoError(IoErrorKind::missing_file, "no such file: " + path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError(IoErrorKind::missing_file, "cannot open: " + path.string());
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return bytes;
}

bool has_png_magic(const std::vector<std::uint8_t>& bytes) {
  static const std::uint8_t sig[8] = {137, 80, 78, 71, 13, 10, 26, 10};
  return bytes.size() >= 8 && std::equal(sig, sig + 8, bytes.begin());
}

bool has_jpeg_magic(const std::vector<std::uint8_t>& bytes) {
  return bytes.size() >= 3 && bytes[0] == 0xff && bytes[1] == 0xd8 &&
         bytes[2] == 0xff;
}

ImageBuffer decode_png(const std::vector<std::uint8_t>& bytes,
                       const std::string& name) {
  png_image png{};
  png.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&png, bytes.data(), bytes.size())) {
    throw IoError(IoErrorKind::corrupt_data,
                  "bad PNG " + name + ": " + png.message);
  }
  const bool color = (png.format & PNG_FORMAT_FLAG_COLOR) != 0;
  png.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;

  ImageBuffer img;
  img.width = static_cast<int>(png.width);
  img.height = static_cast<int>(png.height);
  img.channels = color ? 3 : 1;
  img.data.resize(PNG_IMAGE_SIZE(png));
  if (!png_image_finish_read(&png, nullptr, img.data.data(), 0, nullptr)) {
    throw IoError(IoErrorKind::corrupt_data,
                  "bad PNG " + name + ": " + png.message);
  }
  return img;
}

struct JpegErrorHandler {
  jpeg_error_mgr mgr;
  std::jmp_buf env;
  char message[JMSG_LENGTH_MAX] = {0};
};

void jpeg_error_exit_hook(j_common_ptr cinfo) {
  auto* handler = reinterpret_cast<JpegErrorHandler*>(cinfo->err);
  (*cinfo->err->format_message)(cinfo, handler->message);
  std::longjmp(handler->env, 1);
}

void jpeg_silence_output(j_common_ptr) {}

ImageBuffer decode_jpeg(const std::vector<std::uint8_t>& bytes,
                        const std::string& name) {
  jpeg_decompress_struct cinfo{};
  JpegErrorHandler handler;
  cinfo.err = jpeg_std_error(&handler.mgr);
  handler.mgr.error_exit = jpeg_error_exit_hook;
  handler.mgr.output_message = jpeg_silence_output;

  ImageBuffer img;
  if (setjmp(handler.env)) {
    jpeg_destroy_decompress(&cinfo);
    throw IoError(IoErrorKind::corrupt_data,
                  "bad JPEG " + name + ": " + handler.message);
  }
  jpeg_create_decompress(&cinfo);
  jpeg_mem_src(&cinfo, bytes.data(), static_cast<unsigned long>(bytes.size()));
  jpeg_read_header(&cinfo, TRUE);
  cinfo.out_color_space =
      cinfo.jpeg_color_space == JCS_GRAYSCALE ? JCS_GRAYSCALE : JCS_RGB;
  jpeg_start_decompress(&cinfo);

  img.width = static_cast<int>(cinfo.output_width);
  img.height = static_cast<int>(cinfo.output_height);
  img.channels = cinfo.output_components;
  img.data.resize(static_cast<std::size_t>(img.width) * img.height *
                  img.channels);
  const std::size_t stride = static_cast<std::size_t>(img.width) * img.channels;
  while (cinfo.output_scanline < cinfo.output_height) {
    JSAMPROW row = img.data.data() + cinfo.output_scanline * stride;
    jpeg_read_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);
  return img;
}

double require_number(const nlohmann::json& j, const char* key,
                      const std::string& context, IoErrorKind kind) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw IoError(kind, context + ": missing or non-numeric \"" + key + "\"");
  }
  return j[key].get<double>();
}

}  // namespace

std::string_view io_error_kind_name(IoErrorKind kind) {
  switch (kind) {
    case IoErrorKind::missing_file: return "missing_file";
    case IoErrorKind::unsupported_format: return "unsupported_format";
    case IoErrorKind::corrupt_data: return "corrupt_data";
    case IoErrorKind::unwritable: return "unwritable";
    case IoErrorKind::malformed_json: return "malformed_json";
    case IoErrorKind::unknown_image_id: return "unknown_image_id";
    case IoErrorKind::invalid_bbox: return "invalid_bbox";
  }
  return "unknown";
}

ImageBuffer load_image(const std::filesystem::path& path) {
  const auto bytes = read_file_bytes(path);
  if (has_png_magic(bytes)) return decode_png(bytes, path.string());
  if (has_jpeg_magic(bytes)) return decode_jpeg(bytes, path.string());
  throw IoError(IoErrorKind::unsupported_format,
                "not a PNG or JPEG file: " + path.string());
}

void save_image(const ImageBuffer& image, const std::filesystem::path& path) {
  image.validate();
  png_image png{};
  png.version = PNG_IMAGE_VERSION;
  png.width = static_cast<png_uint_32>(image.width);
  png.height = static_cast<png_uint_32>(image.height);
  png.format = image.channels == 1 ? PNG_FORMAT_GRAY : PNG_FORMAT_RGB;

  const std::filesystem::path tmp = path.string() + ".tmp";
  if (!png_image_write_to_file(&png, tmp.string().c_str(), 0,
                               image.data.data(), 0, nullptr)) {
    std::error_code ec;
    std::filesystem::remove(tmp, ec);
    throw IoError(IoErrorKind::unwritable,
                  "cannot write " + path.string() + ": " + png.message);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError(IoErrorKind::unwritable,
                  "cannot move into place: " + path.string());
  }
}

AnnotationSet load_annotations(const std::filesystem::path& path) {
  const auto bytes = read_file_bytes(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(bytes.begin(), bytes.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(IoErrorKind::malformed_json,
                  path.string() + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw IoError(IoErrorKind::malformed_json,
                  path.string() + ": top-level value is not an object");
  }

  AnnotationSet set;
  std::unordered_map<std::int64_t, std::size_t> by_id;
  for (const auto& entry : doc.value("images", nlohmann::json::array())) {
    if (!entry.is_object() || !entry.contains("file_name") ||
        !entry["file_name"].is_string()) {
      throw IoError(IoErrorKind::malformed_json,
                    path.string() + ": image entry missing file_name");
    }
    AnnotatedImage img;
    img.id = static_cast<std::int64_t>(require_number(
        entry, "id", path.string() + " image entry", IoErrorKind::malformed_json));
    img.file_name = entry["file_name"].get<std::string>();
    img.width = static_cast<int>(require_number(
        entry, "width", path.string() + " image entry", IoErrorKind::malformed_json));
    img.height = static_cast<int>(require_number(
        entry, "height", path.string() + " image entry", IoErrorKind::malformed_json));
    by_id[img.id] = set.images.size();
    set.images.push_back(std::move(img));
  }

  for (const auto& entry : doc.value("annotations", nlohmann::json::array())) {
    if (!entry.is_object()) {
      throw IoError(IoErrorKind::malformed_json,
                    path.string() + ": annotation entry is not an object");
    }
    const auto image_id = static_cast<std::int64_t>(
        require_number(entry, "image_id", path.string() + " annotation",
                       IoErrorKind::malformed_json));
    const auto it = by_id.find(image_id);
    if (it == by_id.end()) {
      throw IoError(IoErrorKind::unknown_image_id,
                    path.string() + ": annotation references unknown image id " +
                        std::to_string(image_id));
    }
    if (!entry.contains("bbox") || !entry["bbox"].is_array() ||
        entry["bbox"].size() != 4) {
      throw IoError(IoErrorKind::invalid_bbox,
                    path.string() + ": bbox must be an array [x, y, w, h]");
    }
    double coords[4];
    for (std::size_t i = 0; i < 4; ++i) {
      if (!entry["bbox"][i].is_number()) {
        throw IoError(IoErrorKind::invalid_bbox,
                      path.string() + ": non-numeric bbox coordinate");
      }
      coords[i] = entry["bbox"][i].get<double>();
    }

    AnnotatedImage& img = set.images[it->second];
    const double x0 = std::max(0.0, coords[0]);
    const double y0 = std::max(0.0, coords[1]);
    const double x1 = std::min(static_cast<double>(img.width), coords[0] + coords[2]);
    const double y1 = std::min(static_cast<double>(img.height), coords[1] + coords[3]);
    const bool clamped = x0 != coords[0] || y0 != coords[1] ||
                         x1 != coords[0] + coords[2] || y1 != coords[1] + coords[3];
    if (clamped) ++set.clamp_warnings;

    BBox box;
    box.x = static_cast<int>(std::lround(x0));
    box.y = static_cast<int>(std::lround(y0));
    box.w = static_cast<int>(std::lround(x1)) - box.x;
    box.h = static_cast<int>(std::lround(y1)) - box.y;
    if (entry.contains("label") && entry["label"].is_string()) {
      box.label = entry["label"].get<std::string>();
    } else if (entry.contains("category_id") && entry["category_id"].is_number()) {
      box.label = std::to_string(entry["category_id"].get<std::int64_t>());
    }
    if (box.w < 1 || box.h < 1) continue;  // fully outside; warning counted
    img.boxes.push_back(std::move(box));
  }
  return set;
}

Corpus to_corpus(const AnnotationSet& annotations) {
  Corpus corpus;
  corpus.reserve(annotations.images.size());
  for (const auto& img : annotations.images) {
    corpus.push_back({img.file_name, img.width, img.height, img.boxes});
  }
  return corpus;
}

void write_text_atomic(const std::filesystem::path& path, std::string_view text) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError(IoErrorKind::unwritable, "cannot write: " + tmp.string());
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out.good()) {
      throw IoError(IoErrorKind::unwritable, "short write: " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError(IoErrorKind::unwritable, "cannot move into place: " + path.string());
  }
}

std::string report_csv(const std::vector<OcclusionReport>& reports) {
  std::ostringstream out;
  out << "method,global_occlusion,mean_object_occlusion,"
         "mean_max_object_occlusion,failure_threshold,failure_rate,"
         "n_images,n_objects,seeds\n";
  char buf[64];
  auto fmt = [&buf](double v) {
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return std::string(buf);
  };
  for (const auto& r : reports) {
    double mean_obj = 0.0, mean_max = 0.0;
    for (double v : r.per_object_occlusion) mean_obj += v;
    for (double v : r.per_object_max) mean_max += v;
    const double n = r.per_object_occlusion.empty()
                         ? 1.0
                         : static_cast<double>(r.per_object_occlusion.size());
    out << r.method << ',' << fmt(r.global_occlusion) << ','
        << fmt(mean_obj / n) << ',' << fmt(mean_max / n) << ','
        << fmt(r.failure_threshold) << ',' << fmt(r.failure_rate) << ','
        << r.n_images << ',' << r.n_objects << ',' << r.seeds << '\n';
  }
  return out.str();
}

std::string report_json(const std::vector<OcclusionReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    arr.push_back({{"method", r.method},
                   {"global_occlusion", r.global_occlusion},
                   {"per_object_occlusion", r.per_object_occlusion},
                   {"per_object_max", r.per_object_max},
                   {"failure_threshold", r.failure_threshold},
                   {"failure_rate", r.failure_rate},
                   {"n_images", r.n_images},
                   {"n_objects", r.n_objects},
                   {"seeds", r.seeds}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace fencemask
