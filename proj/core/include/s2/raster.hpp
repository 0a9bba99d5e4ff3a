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

#ifndef S2_RASTER_HPP_
#define S2_RASTER_HPP_

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace s2 {

// Row-major single-channel image of double samples.
//
// Decoded images and rendered viewports hold luma in [0, 255]. Laplacian
// pyramid layers and MSCN maps reuse the type with signed samples, so the
// range is not enforced here; use is_luma_range() where it matters.
class Raster {
 public:
  Raster() = default;
  // Throws InvalidArgument for a zero dimension.
  Raster(std::size_t width, std::size_t height, double fill = 0.0);
  // Throws InvalidArgument if pixels.size() != width * height.
  Raster(std::size_t width, std::size_t height, std::vector<double> pixels);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }
  bool empty() const noexcept { return pixels_.empty(); }

  double& at(std::size_t x, std::size_t y) { return pixels_[y * width_ + x]; }
  double at(std::size_t x, std::size_t y) const {
    return pixels_[y * width_ + x];
  }

  std::span<double> row(std::size_t y) {
    return {pixels_.data() + y * width_, width_};
  }
  std::span<const double> row(std::size_t y) const {
    return {pixels_.data() + y * width_, width_};
  }

  std::span<double> pixels() noexcept { return pixels_; }
  std::span<const double> pixels() const noexcept { return pixels_; }

  bool same_shape(const Raster& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const Raster&, const Raster&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<double> pixels_;
};

// True when every sample is finite and inside [0, 255].
bool is_luma_range(const Raster& raster);

// Bilinear resize with half-pixel-center alignment. Throws InvalidArgument
// for a zero target dimension.
Raster resize_bilinear(const Raster& src, std::size_t out_width,
                       std::size_t out_height);

// Value returned by every PSNR variant when the error is exactly zero.
inline constexpr double kPsnrIdentical = std::numeric_limits<double>::infinity();
inline constexpr double kPsnrPeak = 255.0;

// 10 log10(255^2 / MSE). Throws ShapeError on dimension mismatch.
double psnr(const Raster& ref, const Raster& dist);

// PSNR for an already-computed mean squared error.
double psnr_from_mse(double mse);

}  // namespace s2

#endif  // S2_RASTER_HPP_
