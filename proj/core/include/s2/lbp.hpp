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

#ifndef S2_LBP_HPP_
#define S2_LBP_HPP_

#include <array>
#include <cstdint>

#include "s2/raster.hpp"

namespace s2::stat {

inline constexpr std::size_t kLbpBins = 59;
inline constexpr std::size_t kLbpUniformBins = 58;

// Number of 0/1 transitions around the circular 8-bit code.
int lbp_transitions(std::uint8_t code);

// Uniform codes (<= 2 transitions) map to bins 0..57 in increasing code
// order; every other code maps to bin 58.
const std::array<std::uint8_t, 256>& lbp_uniform_map();

// 8-neighbor, radius-1 code at interior pixel (x, y). Neighbor p sits at
// angle 2*pi*p/8 counterclockwise from +x and is bilinearly sampled; bit p is
// set when neighbor >= center.
std::uint8_t lbp_code(const Raster& img, std::size_t x, std::size_t y);

// Normalized 59-bin histogram over interior pixels. Throws ShapeError for
// layers smaller than 3x3.
std::array<double, kLbpBins> lbp_histogram(const Raster& layer);

}  // namespace s2::stat

#endif  // S2_LBP_HPP_
