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

#ifndef S2_TESTS_FIXTURES_HPP_
#define S2_TESTS_FIXTURES_HPP_

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>

#include "s2/grid_search.hpp"
#include "s2/protocol.hpp"
#include "s2/raster.hpp"

namespace s2::testing {

Raster random_raster(std::size_t width, std::size_t height,
                     std::mt19937_64& rng, double lo = 0.0, double hi = 255.0);

// Samples rounded to integers, so PNG round trips are exact.
Raster random_luma(std::size_t width, std::size_t height, std::mt19937_64& rng);

Raster constant_raster(std::size_t width, std::size_t height, double value);

// Removed with everything inside it on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

std::string slurp(const std::filesystem::path& path);

// In-memory dataset: `sources` contents times `levels` quality levels. MOS
// rises linearly with level plus uniform noise in [-2, 2]. The statistic
// rows track the level closely; the semantic rows track it loosely.
eval::Dataset synthetic_dataset(std::size_t sources, std::size_t levels,
                                std::uint64_t seed, bool semantic = true);

// A 3 x 2 x 2 hyperparameter grid, enough for the synthetic datasets.
svr::GridSearchOptions small_grid();

}  // namespace s2::testing

#endif  // S2_TESTS_FIXTURES_HPP_
