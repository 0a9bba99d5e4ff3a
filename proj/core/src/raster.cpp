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

#include "s2/raster.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "s2/error.hpp"

namespace s2 {

Raster::Raster(std::size_t width, std::size_t height, double fill)
    : width_(width), height_(height) {
  if (width == 0 || height == 0) {
    throw InvalidArgument("raster dimensions must be positive");
  }
  pixels_.assign(width * height, fill);
}

Raster::Raster(std::size_t width, std::size_t height,
               std::vector<double> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width == 0 || height == 0) {
    throw InvalidArgument("raster dimensions must be positive");
  }
  if (pixels_.size() != width * height) {
    throw InvalidArgument("pixel count " + std::to_string(pixels_.size()) +
                          " does not match " + std::to_string(width) + "x" +
                          std::to_string(height));
  }
}

bool is_luma_range(const Raster& raster) {
  return std::all_of(raster.pixels().begin(), raster.pixels().end(),
                     [](double v) {
                       return std::isfinite(v) && v >= 0.0 && v <= 255.0;
                     });
}

namespace {

// Source coordinate under half-pixel-center alignment, clamped to the grid.
struct Tap {
  std::size_t i0;
  std::size_t i1;
  double t;
};

std::vector<Tap> bilinear_taps(std::size_t src, std::size_t dst) {
  std::vector<Tap> taps(dst);
  const double scale = static_cast<double>(src) / static_cast<double>(dst);
  for (std::size_t i = 0; i < dst; ++i) {
    double s = (static_cast<double>(i) + 0.5) * scale - 0.5;
    s = std::clamp(s, 0.0, static_cast<double>(src - 1));
    const auto i0 = static_cast<std::size_t>(std::floor(s));
    const std::size_t i1 = std::min(i0 + 1, src - 1);
    taps[i] = {i0, i1, s - static_cast<double>(i0)};
  }
  return taps;
}

}  // namespace

Raster resize_bilinear(const Raster& src, std::size_t out_width,
                       std::size_t out_height) {
  if (out_width == 0 || out_height == 0) {
    throw InvalidArgument("resize target dimensions must be positive");
  }
  if (src.empty()) throw InvalidArgument("resize of an empty raster");
  const auto xt = bilinear_taps(src.width(), out_width);
  const auto yt = bilinear_taps(src.height(), out_height);
  Raster out(out_width, out_height);
  for (std::size_t y = 0; y < out_height; ++y) {
    const auto r0 = src.row(yt[y].i0);
    const auto r1 = src.row(yt[y].i1);
    auto dst = out.row(y);
    for (std::size_t x = 0; x < out_width; ++x) {
      const Tap& t = xt[x];
      const double top = r0[t.i0] + t.t * (r0[t.i1] - r0[t.i0]);
      const double bot = r1[t.i0] + t.t * (r1[t.i1] - r1[t.i0]);
      dst[x] = top + yt[y].t * (bot - top);
    }
  }
  return out;
}

double psnr_from_mse(double mse) {
  if (mse <= 0.0) return kPsnrIdentical;
  return 10.0 * std::log10(kPsnrPeak * kPsnrPeak / mse);
}

double psnr(const Raster& ref, const Raster& dist) {
  if (!ref.same_shape(dist)) {
    throw ShapeError("psnr: " + std::to_string(ref.width()) + "x" +
                     std::to_string(ref.height()) + " vs " +
                     std::to_string(dist.width()) + "x" +
                     std::to_string(dist.height()));
  }
  const auto a = ref.pixels();
  const auto b = dist.pixels();
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return psnr_from_mse(sum / static_cast<double>(a.size()));
}

}  // namespace s2
