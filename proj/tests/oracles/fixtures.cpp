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

#include "oracles/fixtures.hpp"

#include <stdlib.h>

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace s2::testing {

Raster random_raster(std::size_t width, std::size_t height,
                     std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> px(width * height);
  for (auto& v : px) v = u(rng);
  return Raster(width, height, std::move(px));
}

Raster random_luma(std::size_t width, std::size_t height, std::mt19937_64& rng) {
  Raster r = random_raster(width, height, rng);
  for (auto& v : r.pixels()) v = std::round(v);
  return r;
}

Raster constant_raster(std::size_t width, std::size_t height, double value) {
  return Raster(width, height, value);
}

TempDir::TempDir() {
  std::string tmpl =
      (std::filesystem::temp_directory_path() / "s2test-XXXXXX").string();
  if (mkdtemp(tmpl.data()) == nullptr) {
    throw std::runtime_error("mkdtemp failed");
  }
  path_ = tmpl;
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

eval::Dataset synthetic_dataset(std::size_t sources, std::size_t levels,
                                std::uint64_t seed, bool semantic) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> noise(-2.0, 2.0);
  std::normal_distribution<double> jitter(0.0, 1.0);
  eval::Dataset d;
  d.viewports = 6;
  for (std::size_t s = 0; s < sources; ++s) {
    const double content = jitter(rng);
    for (std::size_t l = 0; l < levels; ++l) {
      const double q = static_cast<double>(l) / static_cast<double>(levels - 1);
      d.mos.push_back(10.0 + 80.0 * q + noise(rng));
      d.source_id.push_back("src" + std::to_string(s));
      d.stat.push_back({q + 0.03 * jitter(rng), content, 0.2 * jitter(rng)});
      if (semantic) {
        d.semantic.push_back({q + 0.3 * jitter(rng), content + jitter(rng)});
      }
    }
  }
  if (semantic) d.semantic_tag = "synthetic";
  return d;
}

svr::GridSearchOptions small_grid() {
  svr::GridSearchOptions g;
  g.c_grid = {1.0, 16.0, 256.0};
  g.gamma_grid = {0.125, 1.0};
  g.epsilon_grid = {0.1, 1.0};
  return g;
}

}  // namespace s2::testing
