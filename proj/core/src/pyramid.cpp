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

#include "s2/pyramid.hpp"

#include <string>

#include "s2/error.hpp"

namespace s2::pyramid {

std::size_t reflect101(long i, std::size_t n) {
  if (n == 1) return 0;
  const long period = 2 * (static_cast<long>(n) - 1);
  i %= period;
  if (i < 0) i += period;
  if (i >= static_cast<long>(n)) i = period - i;
  return static_cast<std::size_t>(i);
}

namespace {

std::size_t half_ceil(std::size_t n) { return (n + 1) / 2; }

}  // namespace

Raster reduce(const Raster& src) {
  const std::size_t w = src.width();
  const std::size_t h = src.height();
  const std::size_t ow = half_ceil(w);
  const std::size_t oh = half_ceil(h);

  // Horizontal pass at decimated columns, then vertical pass at decimated rows.
  Raster tmp(ow, h);
  for (std::size_t y = 0; y < h; ++y) {
    const auto in = src.row(y);
    auto out = tmp.row(y);
    for (std::size_t x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int u = -2; u <= 2; ++u) {
        acc += kBinomialKernel[u + 2] *
               in[reflect101(2 * static_cast<long>(x) + u, w)];
      }
      out[x] = acc;
    }
  }
  Raster dst(ow, oh);
  for (std::size_t y = 0; y < oh; ++y) {
    auto out = dst.row(y);
    for (int v = -2; v <= 2; ++v) {
      const auto in = tmp.row(reflect101(2 * static_cast<long>(y) + v, h));
      const double k = kBinomialKernel[v + 2];
      for (std::size_t x = 0; x < ow; ++x) out[x] += k * in[x];
    }
  }
  return dst;
}

namespace {

// 1-D expand weights: output position t gathers from source samples s with
// 2s = t + u, weight 2 * k(u), under reflect-101 on the upsampled axis.
struct ExpandTaps {
  std::vector<std::array<std::size_t, 3>> index;
  std::vector<std::array<double, 3>> weight;
  std::vector<int> count;
};

ExpandTaps expand_taps(std::size_t target) {
  ExpandTaps t;
  t.index.resize(target);
  t.weight.resize(target);
  t.count.assign(target, 0);
  for (std::size_t x = 0; x < target; ++x) {
    for (int u = -2; u <= 2; ++u) {
      const std::size_t up = reflect101(static_cast<long>(x) + u, target);
      if (up % 2 != 0) continue;  // zero-interleaved sample
      const std::size_t s = up / 2;
      const double wgt = 2.0 * kBinomialKernel[u + 2];
      int& c = t.count[x];
      bool merged = false;
      for (int k = 0; k < c; ++k) {
        if (t.index[x][k] == s) {
          t.weight[x][k] += wgt;
          merged = true;
          break;
        }
      }
      if (!merged) {
        t.index[x][c] = s;
        t.weight[x][c] = wgt;
        ++c;
      }
    }
  }
  return t;
}

}  // namespace

Raster expand(const Raster& src, std::size_t target_width,
              std::size_t target_height) {
  auto ok = [](std::size_t d, std::size_t t) {
    return t == 2 * d || t + 1 == 2 * d;
  };
  if (src.empty() || !ok(src.width(), target_width) ||
      !ok(src.height(), target_height)) {
    throw ShapeError("expand: cannot map " + std::to_string(src.width()) + "x" +
                     std::to_string(src.height()) + " to " +
                     std::to_string(target_width) + "x" +
                     std::to_string(target_height));
  }
  const ExpandTaps xt = expand_taps(target_width);
  const ExpandTaps yt = expand_taps(target_height);

  Raster tmp(target_width, src.height());
  for (std::size_t y = 0; y < src.height(); ++y) {
    const auto in = src.row(y);
    auto out = tmp.row(y);
    for (std::size_t x = 0; x < target_width; ++x) {
      double acc = 0.0;
      for (int k = 0; k < xt.count[x]; ++k) {
        acc += xt.weight[x][k] * in[xt.index[x][k]];
      }
      out[x] = acc;
    }
  }
  Raster dst(target_width, target_height);
  for (std::size_t y = 0; y < target_height; ++y) {
    auto out = dst.row(y);
    for (int k = 0; k < yt.count[y]; ++k) {
      const auto in = tmp.row(yt.index[y][k]);
      const double wgt = yt.weight[y][k];
      for (std::size_t x = 0; x < target_width; ++x) out[x] += wgt * in[x];
    }
  }
  return dst;
}

GaussianPyramid build_gaussian(const Raster& image, std::size_t n_layers) {
  if (n_layers < 2) {
    throw DepthError("a pyramid needs at least 2 layers, got " +
                     std::to_string(n_layers));
  }
  std::size_t w = image.width();
  std::size_t h = image.height();
  for (std::size_t i = 1; i < n_layers; ++i) {
    w = half_ceil(w);
    h = half_ceil(h);
  }
  if (w < kMinLayerSide || h < kMinLayerSide) {
    throw DepthError(std::to_string(image.width()) + "x" +
                     std::to_string(image.height()) + " is too small for " +
                     std::to_string(n_layers) + " layers (smallest would be " +
                     std::to_string(w) + "x" + std::to_string(h) + ")");
  }
  GaussianPyramid gp;
  gp.layers.reserve(n_layers);
  gp.layers.push_back(image);
  for (std::size_t i = 1; i < n_layers; ++i) {
    gp.layers.push_back(reduce(gp.layers.back()));
  }
  return gp;
}

LaplacianPyramid build_laplacian(const GaussianPyramid& gp) {
  if (gp.layers.size() < 2) {
    throw DepthError("Laplacian pyramid needs at least 2 Gaussian layers");
  }
  LaplacianPyramid lp;
  lp.layers.reserve(gp.layers.size() - 1);
  for (std::size_t i = 0; i + 1 < gp.layers.size(); ++i) {
    const Raster& fine = gp.layers[i];
    Raster band = expand(gp.layers[i + 1], fine.width(), fine.height());
    auto b = band.pixels();
    const auto f = fine.pixels();
    for (std::size_t k = 0; k < b.size(); ++k) b[k] = f[k] - b[k];
    lp.layers.push_back(std::move(band));
  }
  return lp;
}

}  // namespace s2::pyramid
