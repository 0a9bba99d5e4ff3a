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

#include "s2/stat_features.hpp"

#include <algorithm>

#include "s2/error.hpp"
#include "s2/parallel.hpp"
#include "s2/pyramid.hpp"
#include "s2/sphere.hpp"

namespace s2::stat {

FeatureBlock gp_block(std::size_t layer) {
  if (layer >= kGaussianLayers) throw InvalidArgument("no such Gaussian layer");
  return {layer * kLbpBins, (layer + 1) * kLbpBins};
}

FeatureBlock lp_block(std::size_t layer) {
  if (layer >= kLaplacianLayers) {
    throw InvalidArgument("no such Laplacian layer");
  }
  return {kGpDims + layer * kMscnFeatures, kGpDims + (layer + 1) * kMscnFeatures};
}

StatFeatureVector extract_viewport_features(const Raster& viewport) {
  const auto gp = pyramid::build_gaussian(viewport, kGaussianLayers);
  const auto lp = pyramid::build_laplacian(gp);
  StatFeatureVector f;
  for (std::size_t i = 0; i < kGaussianLayers; ++i) {
    const auto h = lbp_histogram(gp.layers[i]);
    std::copy(h.begin(), h.end(), f.values.begin() + gp_block(i).begin);
  }
  for (std::size_t i = 0; i < kLaplacianLayers; ++i) {
    const auto m = mscn_features(lp.layers[i]);
    std::copy(m.begin(), m.end(), f.values.begin() + lp_block(i).begin);
  }
  return f;
}

StatFeatureVector aggregate_viewports(
    std::span<const StatFeatureVector> features) {
  if (features.empty()) {
    throw InvalidArgument("aggregate_viewports needs at least one vector");
  }
  StatFeatureVector out;
  std::vector<double> column(features.size());
  const double n = static_cast<double>(features.size());
  for (std::size_t d = 0; d < kStatDims; ++d) {
    for (std::size_t k = 0; k < features.size(); ++k) {
      column[k] = features[k].values[d];
    }
    std::sort(column.begin(), column.end());
    double excess = 0.0;
    for (double v : column) excess += v - column.front();
    out.values[d] = column.front() + excess / n;
  }
  return out;
}

ImageStatFeatures extract_image_features(const Raster& omni,
                                         std::size_t n_viewports) {
  sphere::require_equirectangular(omni);
  const auto specs = sphere::sample_viewports(n_viewports);
  ImageStatFeatures out;
  out.per_viewport.resize(specs.size());
  parallel_for(specs.size(), [&](std::size_t k) {
    out.per_viewport[k] =
        extract_viewport_features(sphere::render_viewport(omni, specs[k]));
  });
  out.pooled = aggregate_viewports(out.per_viewport);
  return out;
}

}  // namespace s2::stat
