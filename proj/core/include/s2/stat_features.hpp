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

#ifndef S2_STAT_FEATURES_HPP_
#define S2_STAT_FEATURES_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "s2/lbp.hpp"
#include "s2/nss.hpp"
#include "s2/raster.hpp"

namespace s2::stat {

inline constexpr std::size_t kGaussianLayers = 3;
inline constexpr std::size_t kLaplacianLayers = kGaussianLayers - 1;
inline constexpr std::size_t kGpDims = kGaussianLayers * kLbpBins;        // 177
inline constexpr std::size_t kLpDims = kLaplacianLayers * kMscnFeatures;  // 72
inline constexpr std::size_t kStatDims = kGpDims + kLpDims;               // 249

// Column range [begin, end) of one feature block inside the 249-vector.
struct FeatureBlock {
  std::size_t begin;
  std::size_t end;
  std::size_t size() const { return end - begin; }
};

// Block of LBP histogram for Gaussian layer `layer` (0-based).
FeatureBlock gp_block(std::size_t layer);
// Block of MSCN features for Laplacian layer `layer` (0-based).
FeatureBlock lp_block(std::size_t layer);

// Statistic features of one viewport: the three LBP histograms followed by
// the two MSCN feature sets.
struct StatFeatureVector {
  std::array<double, kStatDims> values{};

  std::span<const double> gp_features() const {
    return std::span<const double>(values).first(kGpDims);
  }
  std::span<const double> lp_features() const {
    return std::span<const double>(values).subspan(kGpDims);
  }
  std::span<const double> combined() const { return values; }

  friend bool operator==(const StatFeatureVector&,
                         const StatFeatureVector&) = default;
};

StatFeatureVector extract_viewport_features(const Raster& viewport);

// Coordinate-wise mean. The reduction sorts each coordinate first, so the
// result is independent of input order and exact for identical inputs.
// Throws InvalidArgument for an empty list.
StatFeatureVector aggregate_viewports(std::span<const StatFeatureVector> features);

struct ImageStatFeatures {
  std::vector<StatFeatureVector> per_viewport;
  StatFeatureVector pooled;
};

// Renders the n-viewport layout, extracts each viewport and pools. Throws
// AspectError for non-2:1 input and InvalidArgument for unsupported counts.
ImageStatFeatures extract_image_features(const Raster& omni,
                                         std::size_t n_viewports);

}  // namespace s2::stat

#endif  // S2_STAT_FEATURES_HPP_
