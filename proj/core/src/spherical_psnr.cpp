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

#include <cmath>
#include <string>

#include "s2/error.hpp"
#include "s2/sphere.hpp"

namespace s2::sphere {

namespace {

void require_pair(const Raster& ref, const Raster& dist) {
  if (!ref.same_shape(dist)) {
    throw ShapeError("reference " + std::to_string(ref.width()) + "x" +
                     std::to_string(ref.height()) + " vs distorted " +
                     std::to_string(dist.width()) + "x" +
                     std::to_string(dist.height()));
  }
  require_equirectangular(ref);
}

const double kSqrt3Pi = std::sqrt(3.0 * kPi);
const double kSqrt3OverPi = std::sqrt(3.0 / kPi);

}  // namespace

std::vector<double> ws_row_weights(std::size_t height) {
  std::vector<double> w(height);
  double sum = 0.0;
  for (std::size_t y = 0; y < height; ++y) {
    const double lat =
        (0.5 - (static_cast<double>(y) + 0.5) / static_cast<double>(height)) *
        kPi;
    w[y] = std::cos(lat);
    sum += w[y];
  }
  for (auto& v : w) v /= sum;
  return w;
}

double ws_psnr(const Raster& ref, const Raster& dist) {
  require_pair(ref, dist);
  const auto weights = ws_row_weights(ref.height());
  // Row weights sum to 1, so the per-pixel normalizer is just the width.
  double wmse = 0.0;
  for (std::size_t y = 0; y < ref.height(); ++y) {
    const auto a = ref.row(y);
    const auto b = dist.row(y);
    double row = 0.0;
    for (std::size_t x = 0; x < a.size(); ++x) {
      const double d = a[x] - b[x];
      row += d * d;
    }
    wmse += weights[y] * row;
  }
  wmse /= static_cast<double>(ref.width());
  return psnr_from_mse(wmse);
}

double s_psnr(const Raster& ref, const Raster& dist, std::size_t n_points) {
  if (n_points < kMinSpherePoints) {
    throw InvalidArgument("s_psnr needs at least " +
                          std::to_string(kMinSpherePoints) + " points, got " +
                          std::to_string(n_points));
  }
  require_pair(ref, dist);
  double sum = 0.0;
  for (const auto& dir : fibonacci_sphere(n_points)) {
    const double d = sample_bilinear(ref, dir) - sample_bilinear(dist, dir);
    sum += d * d;
  }
  return psnr_from_mse(sum / static_cast<double>(n_points));
}

std::array<double, 2> craster_forward(double longitude, double latitude) {
  return {kSqrt3OverPi * longitude * (2.0 * std::cos(2.0 * latitude / 3.0) - 1.0),
          kSqrt3Pi * std::sin(latitude / 3.0)};
}

bool craster_inverse(double x, double y, double& longitude, double& latitude) {
  const double s = y / kSqrt3Pi;
  if (s < -0.5 || s > 0.5) return false;
  latitude = 3.0 * std::asin(s);
  const double denom =
      kSqrt3OverPi * (2.0 * std::cos(2.0 * latitude / 3.0) - 1.0);
  if (denom <= 0.0) {
    if (x != 0.0) return false;
    longitude = 0.0;
    return true;
  }
  longitude = x / denom;
  return longitude >= -kPi && longitude < kPi;
}

double cpp_psnr(const Raster& ref, const Raster& dist) {
  require_pair(ref, dist);
  const std::size_t w = ref.width();
  const std::size_t h = ref.height();
  double sum = 0.0;
  std::size_t valid = 0;
  for (std::size_t j = 0; j < h; ++j) {
    const double y =
        (1.0 - 2.0 * (static_cast<double>(j) + 0.5) / static_cast<double>(h)) *
        kSqrt3Pi / 2.0;
    for (std::size_t i = 0; i < w; ++i) {
      const double x =
          (2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(w) - 1.0) *
          kSqrt3Pi;
      double lon = 0.0;
      double lat = 0.0;
      if (!craster_inverse(x, y, lon, lat)) continue;
      const SphereDirection dir{lon, lat};
      const double d = sample_bilinear(ref, dir) - sample_bilinear(dist, dir);
      sum += d * d;
      ++valid;
    }
  }
  if (valid == 0) throw ShapeError("cpp_psnr: no valid projection samples");
  return psnr_from_mse(sum / static_cast<double>(valid));
}

}  // namespace s2::sphere
