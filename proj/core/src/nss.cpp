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

#include "s2/nss.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "s2/error.hpp"
#include "s2/pyramid.hpp"

namespace s2::stat {

namespace {

// Below this mean energy the samples are treated as identically zero.
constexpr double kEnergyEpsilon = 1e-12;

struct RatioTable {
  std::vector<double> shape;
  std::vector<double> ratio;  // strictly decreasing
};

const RatioTable& ratio_table() {
  static const RatioTable table = [] {
    RatioTable t;
    const auto n = static_cast<std::size_t>(
        std::llround((kMaxShape - kMinShape) / kShapeGridStep)) + 1;
    t.shape.resize(n);
    t.ratio.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      t.shape[i] = kMinShape + static_cast<double>(i) * kShapeGridStep;
      t.ratio[i] = ggd_moment_ratio(t.shape[i]);
    }
    return t;
  }();
  return table;
}

}  // namespace

double ggd_moment_ratio(double shape) {
  return std::exp(std::lgamma(1.0 / shape) + std::lgamma(3.0 / shape) -
                  2.0 * std::lgamma(2.0 / shape));
}

double invert_moment_ratio(double ratio) {
  const RatioTable& t = ratio_table();
  if (!(ratio < t.ratio.front())) return kMinShape;
  if (!(ratio > t.ratio.back())) return kMaxShape;
  // First grid point whose ratio drops to or below the target.
  const auto it = std::lower_bound(t.ratio.begin(), t.ratio.end(), ratio,
                                   [](double a, double b) { return a > b; });
  const auto hi = static_cast<std::size_t>(it - t.ratio.begin());
  double lo_shape = t.shape[hi - 1];
  double hi_shape = t.shape[hi];
  for (int iter = 0; iter < 60; ++iter) {
    const double mid = 0.5 * (lo_shape + hi_shape);
    if (ggd_moment_ratio(mid) > ratio) {
      lo_shape = mid;
    } else {
      hi_shape = mid;
    }
  }
  return 0.5 * (lo_shape + hi_shape);
}

GgdFit fit_ggd(std::span<const double> samples) {
  if (samples.empty()) return {};
  double sum_abs = 0.0;
  double sum_sq = 0.0;
  for (double x : samples) {
    sum_abs += std::abs(x);
    sum_sq += x * x;
  }
  const double n = static_cast<double>(samples.size());
  const double mean_abs = sum_abs / n;
  const double mean_sq = sum_sq / n;
  if (mean_sq < kEnergyEpsilon) return {};
  return {invert_moment_ratio(mean_sq / (mean_abs * mean_abs)), mean_sq};
}

AggdFit fit_aggd(std::span<const double> samples) {
  if (samples.empty()) return {};
  double left_sq = 0.0, right_sq = 0.0, sum_abs = 0.0, sum_sq = 0.0;
  std::size_t left_n = 0, right_n = 0;
  for (double x : samples) {
    if (x < 0.0) {
      left_sq += x * x;
      ++left_n;
    } else if (x > 0.0) {
      right_sq += x * x;
      ++right_n;
    }
    sum_abs += std::abs(x);
    sum_sq += x * x;
  }
  const double n = static_cast<double>(samples.size());
  const double mean_sq = sum_sq / n;
  if (mean_sq < kEnergyEpsilon) return {};

  AggdFit fit;
  fit.left_variance =
      left_n ? std::max(left_sq / static_cast<double>(left_n), kVarianceFloor)
             : kVarianceFloor;
  fit.right_variance =
      right_n ? std::max(right_sq / static_cast<double>(right_n), kVarianceFloor)
              : kVarianceFloor;
  const double sigma_l = std::sqrt(fit.left_variance);
  const double sigma_r = std::sqrt(fit.right_variance);
  const double gamma_hat = sigma_l / sigma_r;
  const double mean_abs = sum_abs / n;
  const double r_hat = mean_abs * mean_abs / mean_sq;
  const double g2 = gamma_hat * gamma_hat;
  const double big_r = r_hat * (g2 * gamma_hat + 1.0) * (gamma_hat + 1.0) /
                       ((g2 + 1.0) * (g2 + 1.0));
  fit.shape = invert_moment_ratio(1.0 / big_r);

  const double a = fit.shape;
  const double scale = std::exp(0.5 * (std::lgamma(1.0 / a) - std::lgamma(3.0 / a)));
  const double beta_l = sigma_l * scale;
  const double beta_r = sigma_r * scale;
  fit.mean = (beta_r - beta_l) * std::exp(std::lgamma(2.0 / a) - std::lgamma(1.0 / a));
  return fit;
}

Raster mscn(const Raster& image) {
  const std::size_t w = image.width();
  const std::size_t h = image.height();
  constexpr int kHalf = kMscnWindow / 2;

  std::array<double, kMscnWindow * kMscnWindow> weights{};
  double total = 0.0;
  for (int v = -kHalf; v <= kHalf; ++v) {
    for (int u = -kHalf; u <= kHalf; ++u) {
      const double g = std::exp(-(u * u + v * v) /
                                (2.0 * kMscnWindowSigma * kMscnWindowSigma));
      weights[(v + kHalf) * kMscnWindow + (u + kHalf)] = g;
      total += g;
    }
  }
  for (auto& g : weights) g /= total;

  std::array<std::size_t, kMscnWindow> xs{};
  std::array<std::size_t, kMscnWindow> ys{};
  Raster out(w, h);
  for (std::size_t y = 0; y < h; ++y) {
    for (int v = -kHalf; v <= kHalf; ++v) {
      ys[v + kHalf] = pyramid::reflect101(static_cast<long>(y) + v, h);
    }
    for (std::size_t x = 0; x < w; ++x) {
      for (int u = -kHalf; u <= kHalf; ++u) {
        xs[u + kHalf] = pyramid::reflect101(static_cast<long>(x) + u, w);
      }
      // Weighted moments about the center sample keep flat windows exact.
      const double c = image.at(x, y);
      double m1 = 0.0;
      double m2 = 0.0;
      for (int v = 0; v < kMscnWindow; ++v) {
        const auto row = image.row(ys[v]);
        for (int u = 0; u < kMscnWindow; ++u) {
          const double d = row[xs[u]] - c;
          const double g = weights[v * kMscnWindow + u];
          m1 += g * d;
          m2 += g * d * d;
        }
      }
      const double var = std::max(0.0, m2 - m1 * m1);
      out.at(x, y) = -m1 / (std::sqrt(var) + kMscnStabilizer);
    }
  }
  return out;
}

namespace {

void scale_features(const Raster& layer, double* out) {
  const Raster m = mscn(layer);
  const GgdFit g = fit_ggd(m.pixels());
  out[0] = g.shape;
  out[1] = g.variance;

  const std::size_t w = m.width();
  const std::size_t h = m.height();
  // (dx, dy) of the paired neighbor: H, V, D1 (main diagonal), D2 (anti).
  constexpr int kShifts[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
  std::vector<double> prod;
  prod.reserve(w * h);
  for (int o = 0; o < 4; ++o) {
    const int dx = kShifts[o][0];
    const int dy = kShifts[o][1];
    prod.clear();
    const std::size_t y_begin = dy < 0 ? 1 : 0;
    const std::size_t y_end = dy > 0 ? h - 1 : h;
    for (std::size_t y = y_begin; y < y_end; ++y) {
      const auto a = m.row(y);
      const auto b = m.row(static_cast<std::size_t>(static_cast<long>(y) + dy));
      for (std::size_t x = 0; x + dx < w; ++x) prod.push_back(a[x] * b[x + dx]);
    }
    const AggdFit f = fit_aggd(prod);
    out[2 + 4 * o + 0] = f.shape;
    out[2 + 4 * o + 1] = f.mean;
    out[2 + 4 * o + 2] = f.left_variance;
    out[2 + 4 * o + 3] = f.right_variance;
  }
}

}  // namespace

std::array<double, kMscnFeatures> mscn_features(const Raster& layer) {
  if (layer.width() < kMscnMinSide || layer.height() < kMscnMinSide) {
    throw ShapeError("mscn_features needs at least 16x16, got " +
                     std::to_string(layer.width()) + "x" +
                     std::to_string(layer.height()));
  }
  std::array<double, kMscnFeatures> f{};
  scale_features(layer, f.data());
  scale_features(pyramid::reduce(layer), f.data() + kMscnFeaturesPerScale);
  return f;
}

}  // namespace s2::stat
