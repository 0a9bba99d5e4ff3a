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

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "s2/error.hpp"

namespace s2::stat {

int lbp_transitions(std::uint8_t code) {
  const auto rotated =
      static_cast<std::uint8_t>((code >> 1) | ((code & 1u) << 7));
  return std::popcount(static_cast<unsigned>(code ^ rotated));
}

const std::array<std::uint8_t, 256>& lbp_uniform_map() {
  static const std::array<std::uint8_t, 256> map = [] {
    std::array<std::uint8_t, 256> m{};
    std::uint8_t next = 0;
    for (int c = 0; c < 256; ++c) {
      m[c] = lbp_transitions(static_cast<std::uint8_t>(c)) <= 2
                 ? next++
                 : static_cast<std::uint8_t>(kLbpUniformBins);
    }
    return m;
  }();
  return map;
}

namespace {

struct Neighbor {
  int dx0, dy0;   // top-left integer offset of the bilinear cell
  double tx, ty;  // fractional position inside the cell
};

// Image y grows downward, so "counterclockwise" flips the sine term.
std::array<Neighbor, 8> neighbor_table() {
  std::array<Neighbor, 8> t{};
  for (int p = 0; p < 8; ++p) {
    const double a = 2.0 * std::numbers::pi * p / 8.0;
    double dx = std::cos(a);
    double dy = -std::sin(a);
    // Snap axis-aligned neighbors exactly onto the grid.
    if (std::abs(dx) < 1e-12) dx = 0.0;
    if (std::abs(dy) < 1e-12) dy = 0.0;
    if (std::abs(std::abs(dx) - 1.0) < 1e-12) dx = std::round(dx);
    if (std::abs(std::abs(dy) - 1.0) < 1e-12) dy = std::round(dy);
    const double fx = std::floor(dx);
    const double fy = std::floor(dy);
    t[p] = {static_cast<int>(fx), static_cast<int>(fy), dx - fx, dy - fy};
  }
  return t;
}

}  // namespace

std::uint8_t lbp_code(const Raster& img, std::size_t x, std::size_t y) {
  static const auto table = neighbor_table();
  const double center = img.at(x, y);
  unsigned code = 0;
  for (int p = 0; p < 8; ++p) {
    const Neighbor& n = table[p];
    const auto x0 = static_cast<std::size_t>(static_cast<long>(x) + n.dx0);
    const auto y0 = static_cast<std::size_t>(static_cast<long>(y) + n.dy0);
    double v;
    if (n.tx == 0.0 && n.ty == 0.0) {
      v = img.at(x0, y0);
    } else {
      const std::size_t x1 = n.tx == 0.0 ? x0 : x0 + 1;
      const std::size_t y1 = n.ty == 0.0 ? y0 : y0 + 1;
      // Lerp form keeps flat neighborhoods exact.
      const double top = img.at(x0, y0) + n.tx * (img.at(x1, y0) - img.at(x0, y0));
      const double bot = img.at(x0, y1) + n.tx * (img.at(x1, y1) - img.at(x0, y1));
      v = top + n.ty * (bot - top);
    }
    if (v >= center) code |= 1u << p;
  }
  return static_cast<std::uint8_t>(code);
}

std::array<double, kLbpBins> lbp_histogram(const Raster& layer) {
  if (layer.width() < 3 || layer.height() < 3) {
    throw ShapeError("lbp_histogram needs at least 3x3, got " +
                     std::to_string(layer.width()) + "x" +
                     std::to_string(layer.height()));
  }
  const auto& map = lbp_uniform_map();
  std::array<std::size_t, kLbpBins> counts{};
  for (std::size_t y = 1; y + 1 < layer.height(); ++y) {
    for (std::size_t x = 1; x + 1 < layer.width(); ++x) {
      ++counts[map[lbp_code(layer, x, y)]];
    }
  }
  const double total =
      static_cast<double>((layer.width() - 2) * (layer.height() - 2));
  std::array<double, kLbpBins> hist{};
  for (std::size_t b = 0; b < kLbpBins; ++b) {
    hist[b] = static_cast<double>(counts[b]) / total;
  }
  return hist;
}

}  // namespace s2::stat
