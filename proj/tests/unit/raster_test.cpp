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

#include "s2/raster.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles/fixtures.hpp"
#include "s2/error.hpp"

namespace s2 {
namespace {

TEST(Raster, RejectsZeroDimensions) {
  EXPECT_THROW(Raster(0, 4), InvalidArgument);
  EXPECT_THROW(Raster(4, 0), InvalidArgument);
  EXPECT_THROW(Raster(2, 2, std::vector<double>(3)), InvalidArgument);
}

TEST(Raster, RowMajorAccess) {
  Raster r(3, 2, std::vector<double>{0, 1, 2, 3, 4, 5});
  EXPECT_EQ(r.at(2, 0), 2.0);
  EXPECT_EQ(r.at(0, 1), 3.0);
  EXPECT_EQ(r.row(1)[2], 5.0);
}

TEST(Raster, LumaRangeCheck) {
  EXPECT_TRUE(is_luma_range(Raster(2, 2, 255.0)));
  EXPECT_FALSE(is_luma_range(Raster(2, 2, 255.5)));
  EXPECT_FALSE(is_luma_range(Raster(1, 1, std::vector<double>{NAN})));
}

TEST(Resize, ConstantStaysConstant) {
  const Raster out = resize_bilinear(Raster(8, 8, 100.0), 4, 4);
  ASSERT_EQ(out.width(), 4u);
  for (double v : out.pixels()) EXPECT_DOUBLE_EQ(v, 100.0);
}

TEST(Resize, SameSizeIsIdentity) {
  std::mt19937_64 rng(3);
  const Raster r = testing::random_raster(17, 9, rng);
  const Raster out = resize_bilinear(r, 17, 9);
  for (std::size_t i = 0; i < r.size(); ++i) {
    EXPECT_NEAR(out.pixels()[i], r.pixels()[i], 1e-9);
  }
}

TEST(Resize, TwoPixelUpsampleMatchesHalfPixelFormula) {
  // Output centre i maps to source coordinate (i + 0.5) * 2/4 - 0.5, clamped.
  const Raster out = resize_bilinear(Raster(2, 1, std::vector<double>{0, 255}), 4, 1);
  const double expected[4] = {0.0, 63.75, 191.25, 255.0};
  for (std::size_t x = 0; x < 4; ++x) EXPECT_NEAR(out.at(x, 0), expected[x], 1e-12);
  for (std::size_t x = 1; x < 4; ++x) EXPECT_GE(out.at(x, 0), out.at(x - 1, 0));
}

TEST(Resize, NoOvershoot) {
  std::mt19937_64 rng(5);
  const Raster r = testing::random_raster(13, 11, rng, 20, 200);
  double lo = 255, hi = 0;
  for (double v : r.pixels()) lo = std::min(lo, v), hi = std::max(hi, v);
  for (auto [w, h] : {std::pair{31, 7}, {5, 29}, {6, 6}}) {
    const Raster out = resize_bilinear(r, w, h);
    for (double v : out.pixels()) {
      EXPECT_GE(v, lo - 1e-9);
      EXPECT_LE(v, hi + 1e-9);
    }
  }
}

TEST(Resize, ZeroTargetThrows) {
  EXPECT_THROW(resize_bilinear(Raster(4, 4), 0, 4), InvalidArgument);
}

TEST(Psnr, IdenticalIsInfinite) {
  std::mt19937_64 rng(1);
  const Raster r = testing::random_raster(8, 8, rng);
  EXPECT_EQ(psnr(r, r), kPsnrIdentical);
  EXPECT_TRUE(std::isinf(psnr(r, r)));
}

TEST(Psnr, MaximalErrorIsZeroDb) {
  EXPECT_NEAR(psnr(Raster(4, 4, 0.0), Raster(4, 4, 255.0)), 0.0, 1e-12);
}

TEST(Psnr, UniformErrorSixteen) {
  const double expected = 10.0 * std::log10(255.0 * 255.0 / 256.0);
  EXPECT_NEAR(psnr(Raster(4, 4, 0.0), Raster(4, 4, 16.0)), expected, 1e-12);
  EXPECT_NEAR(expected, 24.0484, 1e-4);
}

TEST(Psnr, SymmetricAndDecreasingInNoise) {
  std::mt19937_64 rng(9);
  const Raster ref = testing::random_raster(32, 16, rng, 50, 200);
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<double> noise(ref.size());
  for (auto& v : noise) v = n(rng);
  double last = kPsnrIdentical;
  for (double amp : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    Raster d = ref;
    for (std::size_t i = 0; i < d.size(); ++i) d.pixels()[i] += amp * noise[i];
    const double p = psnr(ref, d);
    EXPECT_DOUBLE_EQ(p, psnr(d, ref));
    EXPECT_LT(p, last);
    last = p;
  }
}

TEST(Psnr, ShapeMismatch) {
  EXPECT_THROW(psnr(Raster(4, 4), Raster(4, 5)), ShapeError);
}

}  // namespace
}  // namespace s2
