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

// Slow, direct-definition reference implementations used to check the
// production numerics.

#ifndef S2_TESTS_STAT_ORACLES_HPP_
#define S2_TESTS_STAT_ORACLES_HPP_

#include <cstddef>
#include <random>
#include <vector>

#include "s2/raster.hpp"

namespace s2::oracle {

// Zero-mean generalized Gaussian draws with the given shape and variance,
// built from Gamma(1/shape) variates.
std::vector<double> sample_ggd(std::size_t n, double shape, double variance,
                               std::mt19937_64& rng);

// Asymmetric generalized Gaussian draws. Each side is a half-GGD with its
// own scale; side probabilities are proportional to the side scales.
std::vector<double> sample_aggd(std::size_t n, double shape,
                                double left_variance, double right_variance,
                                std::mt19937_64& rng);

// Moment matching by dense scan over shape in [0.05, 12] (step 1e-4).
double brute_ggd_shape(const std::vector<double>& samples);

struct BruteAggd {
  double shape = 0.0;
  double left_variance = 0.0;
  double right_variance = 0.0;
};
BruteAggd brute_aggd(const std::vector<double>& samples);

// One Gaussian-pyramid step evaluated as a full 5x5 2-D convolution with
// mirror-without-repeat borders, then decimation on even coordinates.
Raster direct_reduce(const Raster& src);

// Ranks by pairwise counting, ties averaged.
std::vector<double> direct_ranks(const std::vector<double>& v);
double direct_pearson(const std::vector<double>& a, const std::vector<double>& b);
double direct_srocc(const std::vector<double>& a, const std::vector<double>& b);
double direct_rmse(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace s2::oracle

#endif  // S2_TESTS_STAT_ORACLES_HPP_
