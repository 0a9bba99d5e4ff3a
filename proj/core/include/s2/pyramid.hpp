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

// Burt-Adelson Gaussian/Laplacian pyramids.
//
// Reduce: filter with the separable binomial kernel [1 4 6 4 1] / 16 and keep
// even positions, G[i+1](x, y) = sum k(u) k(v) G[i](2x + u, 2y + v). Odd sizes
// halve with ceil.
//
// Expand: zero-interleave to the target size, then filter with the same
// kernel scaled by 4 (2 per axis).
//
// Borders are mirrored without repeating the edge sample (reflect-101).

#ifndef S2_PYRAMID_HPP_
#define S2_PYRAMID_HPP_

#include <array>
#include <cstddef>
#include <vector>

#include "s2/raster.hpp"

namespace s2::pyramid {

inline constexpr std::array<double, 5> kBinomialKernel = {
    1.0 / 16.0, 4.0 / 16.0, 6.0 / 16.0, 4.0 / 16.0, 1.0 / 16.0};

inline constexpr std::size_t kMinLayerSide = 8;
inline constexpr std::size_t kDefaultGaussianLayers = 3;

// Mirror index into [0, n) without repeating the edge sample.
std::size_t reflect101(long i, std::size_t n);

// layers[0] is the source; layers[i + 1] = reduce(layers[i]).
struct GaussianPyramid {
  std::vector<Raster> layers;
};

// layers.size() == Gaussian layers - 1; layers[i] has the shape of the
// Gaussian layer i and may hold negative samples.
struct LaplacianPyramid {
  std::vector<Raster> layers;
};

// One reduce step. Output is ceil(w/2) x ceil(h/2).
Raster reduce(const Raster& src);

// Throws ShapeError unless each target dimension is 2 * d - 1 or 2 * d for the
// corresponding source dimension d.
Raster expand(const Raster& src, std::size_t target_width,
              std::size_t target_height);

// Throws DepthError when n_layers < 2 or the smallest layer would be below
// kMinLayerSide on either axis.
GaussianPyramid build_gaussian(const Raster& image, std::size_t n_layers);

// Throws DepthError for fewer than two Gaussian layers.
LaplacianPyramid build_laplacian(const GaussianPyramid& gp);

}  // namespace s2::pyramid

#endif  // S2_PYRAMID_HPP_
