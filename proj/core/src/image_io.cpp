// Copyright 2026 The s2oiqa Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "s2/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <string>

#include "s2/binary_io.hpp"
#include "s2/error.hpp"

namespace s2 {

double luma_bt601(double r, double g, double b) {
  if (r == g && g == b) return r;
  return 0.299 * r + 0.587 * g + 0.114 * b;
}

namespace {

// Upper bound on decoded pixel count; guards against hostile headers.
constexpr std::size_t kMaxPixels = std::size_t{1} << 28;

void check_dims(long long w, long long h, const char* fmt) {
  if (w <= 0 || h <= 0) {
    throw DecodeError(std::string(fmt) + ": non-positive dimensions");
  }
  if (static_cast<unsigned long long>(w) * static_cast<unsigned long long>(h) >
      kMaxPixels) {
    throw DecodeError(std::string(fmt) + ": image too large");
  }
}

std::uint8_t to_byte(double v) {
  return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
}

// ---------------------------------------------------------------- PNG

Raster decode_png(std::span<const std::uint8_t> bytes) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    throw DecodeError(std::string("png: ") + image.message);
  }
  if (image.format & PNG_FORMAT_FLAG_LINEAR) {
    png_image_free(&image);
    throw UnsupportedFormat("png: 16-bit samples are not supported");
  }
  const bool color = (image.format & PNG_FORMAT_FLAG_COLOR) != 0;
  image.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  check_dims(image.width, image.height, "png");
  std::vector<std::uint8_t> buf(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, buf.data(), 0, nullptr)) {
    const std::string msg = image.message;
    png_image_free(&image);
    throw DecodeError("png: " + msg);
  }
  const std::size_t w = image.width;
  const std::size_t h = image.height;
  std::vector<double> px(w * h);
  if (color) {
    for (std::size_t i = 0; i < w * h; ++i) {
      px[i] = luma_bt601(buf[3 * i], buf[3 * i + 1], buf[3 * i + 2]);
    }
  } else {
    std::copy(buf.begin(), buf.end(), px.begin());
  }
  return Raster(w, h, std::move(px));
}

std::vector<std::uint8_t> encode_png(const Raster& r) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(r.width());
  image.height = static_cast<png_uint_32>(r.height());
  image.format = PNG_FORMAT_GRAY;
  std::vector<std::uint8_t> src(r.size());
  std::transform(r.pixels().begin(), r.pixels().end(), src.begin(), to_byte);
  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&image, nullptr, &size, 0, src.data(), 0,
                                 nullptr)) {
    throw IoError(std::string("png encode: ") + image.message);
  }
  std::vector<std::uint8_t> out(size);
  if (!png_image_write_to_memory(&image, out.data(), &size, 0, src.data(), 0,
                                 nullptr)) {
    throw IoError(std::string("png encode: ") + image.message);
  }
  out.resize(size);
  return out;
}

// ---------------------------------------------------------------- PPM

class NetpbmCursor {
 public:
  explicit NetpbmCursor(std::span<const std::uint8_t> b) : b_(b) {}

  void skip_space_and_comments() {
    while (pos_ < b_.size()) {
      if (b_[pos_] == '#') {
        while (pos_ < b_.size() && b_[pos_] != '\n') ++pos_;
      } else if (std::isspace(b_[pos_])) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  long long integer() {
    skip_space_and_comments();
    if (pos_ >= b_.size() || !std::isdigit(b_[pos_])) {
      throw DecodeError("ppm: expected integer at offset " +
                        std::to_string(pos_));
    }
    long long v = 0;
    while (pos_ < b_.size() && std::isdigit(b_[pos_])) {
      v = v * 10 + (b_[pos_++] - '0');
      if (v > (1LL << 40)) throw DecodeError("ppm: integer overflow");
    }
    return v;
  }

  // Exactly one whitespace byte separates the header from binary data.
  void single_space() {
    if (pos_ >= b_.size() || !std::isspace(b_[pos_])) {
      throw DecodeError("ppm: missing separator before raster data");
    }
    ++pos_;
  }

  std::span<const std::uint8_t> take(std::size_t n) {
    if (b_.size() - pos_ < n) throw DecodeError("ppm: truncated raster data");
    auto s = b_.subspan(pos_, n);
    pos_ += n;
    return s;
  }

 private:
  std::span<const std::uint8_t> b_;
  std::size_t pos_ = 0;
};

Raster decode_ppm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P') throw DecodeError("ppm: bad magic");
  const char kind = static_cast<char>(bytes[1]);
  if (kind != '2' && kind != '3' && kind != '5' && kind != '6') {
    throw UnsupportedFormat(std::string("ppm: unsupported variant P") + kind);
  }
  const bool rgb = kind == '3' || kind == '6';
  const bool ascii = kind == '2' || kind == '3';
  NetpbmCursor cur(bytes.subspan(2));
  const long long w = cur.integer();
  const long long h = cur.integer();
  const long long maxval = cur.integer();
  check_dims(w, h, "ppm");
  if (maxval <= 0) throw DecodeError("ppm: maxval must be positive");
  if (maxval > 255) {
    throw UnsupportedFormat("ppm: maxval " + std::to_string(maxval) +
                            " (16-bit) is not supported");
  }
  const std::size_t n = static_cast<std::size_t>(w * h);
  const std::size_t channels = rgb ? 3 : 1;
  std::vector<double> samples(n * channels);
  if (ascii) {
    for (auto& s : samples) {
      const long long v = cur.integer();
      if (v > maxval) throw DecodeError("ppm: sample exceeds maxval");
      s = static_cast<double>(v);
    }
  } else {
    cur.single_space();
    auto data = cur.take(n * channels);
    for (std::size_t i = 0; i < data.size(); ++i) {
      if (data[i] > maxval) throw DecodeError("ppm: sample exceeds maxval");
      samples[i] = data[i];
    }
  }
  const double scale = 255.0 / static_cast<double>(maxval);
  std::vector<double> px(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rgb) {
      px[i] = luma_bt601(samples[3 * i], samples[3 * i + 1],
                         samples[3 * i + 2]);
    } else {
      px[i] = samples[i];
    }
    if (maxval != 255) px[i] *= scale;
  }
  return Raster(static_cast<std::size_t>(w), static_cast<std::size_t>(h),
                std::move(px));
}

std::vector<std::uint8_t> encode_ppm(const Raster& r) {
  const std::string header = "P6\n" + std::to_string(r.width()) + " " +
                             std::to_string(r.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(out.size() + 3 * r.size());
  for (double v : r.pixels()) {
    const std::uint8_t b = to_byte(v);
    out.insert(out.end(), {b, b, b});
  }
  return out;
}

// ---------------------------------------------------------------- BMP

constexpr std::size_t kBmpFileHeader = 14;
constexpr std::size_t kBmpInfoHeader = 40;

Raster decode_bmp(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kBmpFileHeader + kBmpInfoHeader || bytes[0] != 'B' ||
      bytes[1] != 'M') {
    throw DecodeError("bmp: bad header");
  }
  try {
    ByteReader rd(bytes);
    rd.bytes(10);
    const std::uint32_t data_offset = rd.u32();
    const std::uint32_t dib_size = rd.u32();
    if (dib_size < kBmpInfoHeader) {
      throw UnsupportedFormat("bmp: legacy core header is not supported");
    }
    const auto w = static_cast<std::int32_t>(rd.u32());
    const auto h_raw = static_cast<std::int32_t>(rd.u32());
    const std::uint16_t planes = rd.u16();
    const std::uint16_t bpp = rd.u16();
    const std::uint32_t compression = rd.u32();
    rd.bytes(12);  // image size, x/y resolution
    std::uint32_t colors_used = rd.u32();
    if (planes != 1) throw DecodeError("bmp: planes must be 1");
    if (compression != 0) {
      throw UnsupportedFormat("bmp: compressed bitmaps are not supported");
    }
    if (bpp != 8 && bpp != 24 && bpp != 32) {
      throw UnsupportedFormat("bmp: " + std::to_string(bpp) +
                              "-bit bitmaps are not supported");
    }
    const bool top_down = h_raw < 0;
    const long long h = top_down ? -static_cast<long long>(h_raw) : h_raw;
    check_dims(w, h, "bmp");

    std::vector<double> palette;
    if (bpp == 8) {
      if (colors_used == 0) colors_used = 256;
      if (colors_used > 256) throw DecodeError("bmp: palette too large");
      ByteReader pr(bytes.subspan(kBmpFileHeader + dib_size));
      for (std::uint32_t i = 0; i < colors_used; ++i) {
        const double b = pr.u8(), g = pr.u8(), r = pr.u8();
        pr.u8();
        palette.push_back(luma_bt601(r, g, b));
      }
    }

    const std::size_t uw = static_cast<std::size_t>(w);
    const std::size_t uh = static_cast<std::size_t>(h);
    const std::size_t stride = ((uw * bpp + 31) / 32) * 4;
    if (data_offset > bytes.size() || bytes.size() - data_offset < stride * uh) {
      throw DecodeError("bmp: truncated pixel data");
    }
    std::vector<double> px(uw * uh);
    for (std::size_t row = 0; row < uh; ++row) {
      const std::size_t y = top_down ? row : uh - 1 - row;
      const std::uint8_t* src = bytes.data() + data_offset + row * stride;
      for (std::size_t x = 0; x < uw; ++x) {
        double v = 0.0;
        if (bpp == 8) {
          if (src[x] >= palette.size()) {
            throw DecodeError("bmp: palette index out of range");
          }
          v = palette[src[x]];
        } else {
          const std::size_t k = x * (bpp / 8);
          v = luma_bt601(src[k + 2], src[k + 1], src[k]);
        }
        px[y * uw + x] = v;
      }
    }
    return Raster(uw, uh, std::move(px));
  } catch (const CorruptFile& e) {
    throw DecodeError(std::string("bmp: ") + e.what());
  }
}

std::vector<std::uint8_t> encode_bmp(const Raster& r) {
  const std::size_t stride = ((r.width() * 24 + 31) / 32) * 4;
  const std::size_t data_size = stride * r.height();
  ByteWriter w;
  w.u8('B');
  w.u8('M');
  w.u32(static_cast<std::uint32_t>(kBmpFileHeader + kBmpInfoHeader + data_size));
  w.u32(0);
  w.u32(static_cast<std::uint32_t>(kBmpFileHeader + kBmpInfoHeader));
  w.u32(kBmpInfoHeader);
  w.u32(static_cast<std::uint32_t>(r.width()));
  w.u32(static_cast<std::uint32_t>(r.height()));
  w.u16(1);
  w.u16(24);
  w.u32(0);
  w.u32(static_cast<std::uint32_t>(data_size));
  w.u32(2835);
  w.u32(2835);
  w.u32(0);
  w.u32(0);
  std::vector<std::uint8_t> row(stride, 0);
  for (std::size_t i = 0; i < r.height(); ++i) {
    const auto src = r.row(r.height() - 1 - i);
    for (std::size_t x = 0; x < r.width(); ++x) {
      const std::uint8_t b = to_byte(src[x]);
      row[3 * x] = row[3 * x + 1] = row[3 * x + 2] = b;
    }
    w.bytes(row);
  }
  return w.release();
}

}  // namespace

Raster decode_image(std::span<const std::uint8_t> bytes, ImageFormat format) {
  switch (format) {
    case ImageFormat::kPng: return decode_png(bytes);
    case ImageFormat::kPpm: return decode_ppm(bytes);
    case ImageFormat::kBmp: return decode_bmp(bytes);
  }
  throw InvalidArgument("unknown image format");
}

std::optional<ImageFormat> detect_format(std::span<const std::uint8_t> bytes) {
  static constexpr std::uint8_t kPngSig[8] = {0x89, 'P', 'N', 'G',
                                              '\r', '\n', 0x1a, '\n'};
  if (bytes.size() >= 8 && std::equal(kPngSig, kPngSig + 8, bytes.begin())) {
    return ImageFormat::kPng;
  }
  if (bytes.size() >= 2 && bytes[0] == 'B' && bytes[1] == 'M') {
    return ImageFormat::kBmp;
  }
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] >= '1' &&
      bytes[1] <= '7') {
    return ImageFormat::kPpm;
  }
  return std::nullopt;
}

std::vector<std::uint8_t> encode_image(const Raster& raster,
                                       ImageFormat format) {
  if (raster.empty()) throw InvalidArgument("cannot encode an empty raster");
  switch (format) {
    case ImageFormat::kPng: return encode_png(raster);
    case ImageFormat::kPpm: return encode_ppm(raster);
    case ImageFormat::kBmp: return encode_bmp(raster);
  }
  throw InvalidArgument("unknown image format");
}

Raster read_image(const std::filesystem::path& path) {
  const auto bytes = read_file_bytes(path);
  const auto fmt = detect_format(bytes);
  if (!fmt) {
    throw DecodeError(path.string() + ": unrecognized image format");
  }
  try {
    return decode_image(bytes, *fmt);
  } catch (const DecodeError& e) {
    throw DecodeError(path.string() + ": " + e.what());
  }
}

void write_image(const Raster& raster, const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  ImageFormat fmt;
  if (ext == ".png") {
    fmt = ImageFormat::kPng;
  } else if (ext == ".ppm" || ext == ".pgm" || ext == ".pnm") {
    fmt = ImageFormat::kPpm;
  } else if (ext == ".bmp") {
    fmt = ImageFormat::kBmp;
  } else {
    throw InvalidArgument("cannot infer image format from " + path.string());
  }
  write_file_atomic(path, encode_image(raster, fmt));
}

}  // namespace s2
