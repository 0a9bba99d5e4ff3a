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

// Natural scene statistics on mean-subtracted contrast-normalized (MSCN)
// coefficients: a generalized Gaussian fit of the MSCN map and asymmetric
// generalized Gaussian fits of four neighbor products, at two scales.

#ifndef S2_NSS_HPP_
#define S2_NSS_HPP_

#include <array>
#include <cstddef>
#include <span>

#include "s2/raster.hpp"

namespace s2::stat {

inline constexpr std::size_t kMscnFeaturesPerScale = 18;
inline constexpr std::size_t kMscnFeatures = 36;
inline constexpr std::size_t kMscnMinSide = 16;

inline constexpr int kMscnWindow = 7;
inline constexpr double kMscnWindowSigma = 7.0 / 6.0;
inline constexpr double kMscnStabilizer = 1.0;

// Shape search range for moment-matching inversion.
inline constexpr double kMinShape = 0.2;
inline constexpr double kMaxShape = 10.0;
inline constexpr double kShapeGridStep = 1e-3;

// Returned for zero-energy input.
inline constexpr double kDegenerateShape = 10.0;
inline constexpr double kVarianceFloor = 1e-6;

struct GgdFit {
  double shape = kDegenerateShape;
  double variance = kVarianceFloor;
};

struct AggdFit {
  double shape = kDegenerateShape;
  double mean = 0.0;
  double left_variance = kVarianceFloor;
  double right_variance = kVarianceFloor;
};

// Gamma(1/a) Gamma(3/a) / Gamma(2/a)^2, strictly decreasing in a.
double ggd_moment_ratio(double shape);

// Inverts ggd_moment_ratio on [kMinShape, kMaxShape]: grid lookup followed
// by bisection between the bracketing grid points. Out-of-range ratios clamp
// to the nearest end.
double invert_moment_ratio(double ratio);

GgdFit fit_ggd(std::span<const double> samples);
AggdFit fit_aggd(std::span<const double> samples);

// (I - mu) / (sigma + 1) with mu, sigma from a normalized 7x7 Gaussian window
// (sigma_w = 7/6) under reflect-101 borders. Constant input yields zeros.
Raster mscn(const Raster& image);

// 18 features at full resolution, then 18 after one binomial reduce. Per
// scale: GGD (shape, variance) then AGGD (shape, mean, left variance, right
// variance) for the H, V, D1 and D2 neighbor products. Throws ShapeError
// below 16x16.
std::array<double, kMscnFeatures> mscn_features(const Raster& layer);

}  // namespace s2::stat

#endif  // S2_NSS_HPP_
