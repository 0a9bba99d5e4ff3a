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

#include "s2/lbp.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

#include "oracles/fixtures.hpp"
#include "s2/error.hpp"

namespace s2::stat {
namespace {

// Straight from the definition: neighbour p sits at angle 2*pi*p/8, counted
// counterclockwise with image rows growing downward, sampled bilinearly.
unsigned reference_code(const Raster& img, std::size_t x, std::size_t y) {
  unsigned code = 0;
  for (int p = 0; p < 8; ++p) {
    const double a = 2.0 * std::numbers::pi * p / 8.0;
    const double sx = x + std::round(std::cos(a) * 1e12) / 1e12;
    const double sy = y - std::round(std::sin(a) * 1e12) / 1e12;
    const auto x0 = static_cast<std::size_t>(std::floor(sx));
    const auto y0 = static_cast<std::size_t>(std::floor(sy));
    const double tx = sx - x0, ty = sy - y0;
    auto px = [&](std::size_t i, std::size_t j) {
      return (i < img.width() && j < img.height()) ? img.at(i, j) : 0.0;
    };
    const double v = (1 - tx) * (1 - ty) * px(x0, y0) + tx * (1 - ty) * px(x0 + 1, y0) +
                     (1 - tx) * ty * px(x0, y0 + 1) + tx * ty * px(x0 + 1, y0 + 1);
    if (v >= img.at(x, y) - 1e-9) code |= 1u << p;
  }
  return code;
}

TEST(Lbp, UniformMapHas58PatternsPlusCatchAll) {
  const auto& m = lbp_uniform_map();
  std::set<int> uniform;
  int catch_all = 0;
  for (int c = 0; c < 256; ++c) {
    if (m[c] == kLbpUniformBins) {
      ++catch_all;
      EXPECT_GT(lbp_transitions(static_cast<std::uint8_t>(c)), 2);
    } else {
      uniform.insert(m[c]);
    }
  }
  EXPECT_EQ(uniform.size(), 58u);
  EXPECT_EQ(catch_all, 256 - 58);
  EXPECT_EQ(kLbpBins, 59u);
}

TEST(Lbp, Transitions) {
  EXPECT_EQ(lbp_transitions(0x00), 0);
  EXPECT_EQ(lbp_transitions(0xff), 0);
  EXPECT_EQ(lbp_transitions(0x0f), 2);
  EXPECT_EQ(lbp_transitions(0x55), 8);
}

TEST(Lbp, ConstantRasterIsIndicatorOnAllOnes) {
  const auto h = lbp_histogram(Raster(12, 9, 77.0));
  const auto bin = lbp_uniform_map()[255];
  for (std::size_t b = 0; b < kLbpBins; ++b) EXPECT_EQ(h[b], b == bin ? 1.0 : 0.0);
}

TEST(Lbp, StepImageUsesFewUniformBins) {
  Raster img(16, 16, 0.0);
  for (std::size_t y = 0; y < 16; ++y) {
    for (std::size_t x = 8; x < 16; ++x) img.at(x, y) = 255.0;
  }
  const auto h = lbp_histogram(img);
  int used = 0;
  for (std::size_t b = 0; b < kLbpBins; ++b) used += h[b] > 0 ? 1 : 0;
  EXPECT_LE(used, 4);
  EXPECT_EQ(h[kLbpUniformBins], 0.0);
  EXPECT_NEAR(std::accumulate(h.begin(), h.end(), 0.0), 1.0, 1e-12);
}

TEST(Lbp, CodesMatchDefinition) {
  std::mt19937_64 rng(7);
  const Raster img = testing::random_raster(20, 15, rng);
  for (std::size_t y = 1; y + 1 < 15; ++y) {
    for (std::size_t x = 1; x + 1 < 20; ++x) {
      EXPECT_EQ(lbp_code(img, x, y), reference_code(img, x, y)) << x << "," << y;
    }
  }
}

TEST(Lbp, HistogramIsNormalized) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 5; ++k) {
    const auto h = lbp_histogram(testing::random_raster(31 + k, 17, rng));
    for (double v : h) EXPECT_GE(v, 0.0);
    EXPECT_NEAR(std::accumulate(h.begin(), h.end(), 0.0), 1.0, 1e-9);
  }
}

TEST(Lbp, TooSmall) {
  EXPECT_THROW(lbp_histogram(Raster(2, 10)), ShapeError);
}

}  // namespace
}  // namespace s2::stat
