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

#ifndef S2_IMAGE_IO_HPP_
#define S2_IMAGE_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "s2/raster.hpp"

namespace s2 {

enum class ImageFormat { kPng, kPpm, kBmp };

// BT.601 luma. Exact for gray triples (r == g == b returns r).
double luma_bt601(double r, double g, double b);

// Decodes to grayscale. Color inputs go through luma_bt601(). PPM covers the
// netpbm family P2/P3/P5/P6 with maxval <= 255.
//
// Throws DecodeError for malformed or truncated data and UnsupportedFormat for
// bit depths or encodings outside the supported set.
Raster decode_image(std::span<const std::uint8_t> bytes, ImageFormat format);

// Sniffs the format from the magic bytes.
std::optional<ImageFormat> detect_format(std::span<const std::uint8_t> bytes);

// Encodes as 8-bit gray (PNG), binary P6 (PPM) or 24-bit BMP. Samples are
// rounded and clamped to [0, 255]; integer-valued rasters round-trip exactly.
std::vector<std::uint8_t> encode_image(const Raster& raster,
                                       ImageFormat format);

Raster read_image(const std::filesystem::path& path);
// Format follows the extension (.png, .ppm/.pgm, .bmp).
void write_image(const Raster& raster, const std::filesystem::path& path);

}  // namespace s2

#endif  // S2_IMAGE_IO_HPP_
