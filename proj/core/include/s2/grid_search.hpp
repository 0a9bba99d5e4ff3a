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

#ifndef S2_GRID_SEARCH_HPP_
#define S2_GRID_SEARCH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "s2/svr.hpp"

namespace s2::svr {

struct GridSearchOptions {
  std::size_t folds = 5;
  std::uint64_t seed = 0;
  // Powers of two 2^-1 .. 2^9.
  std::vector<double> c_grid;
  // Powers of two 2^-9 .. 2^3.
  std::vector<double> gamma_grid;
  std::vector<double> epsilon_grid = {0.1, 1.0};

  GridSearchOptions();
};

struct GridSearchResult {
  SvrParams best;
  double cv_rmse = 0.0;
  // Out-of-fold prediction for every sample under `best`.
  std::vector<double> oof_predictions;
};

// Exhaustive k-fold search over C x gamma x epsilon on scaled samples,
// minimizing mean per-fold RMSE. Ties prefer smaller C, then smaller gamma,
// then smaller epsilon. Fold assignment is a seeded shuffle; when `groups` is
// given, samples sharing a group id always land in the same fold.
//
// Throws InvalidArgument when there are fewer samples (or groups) than folds.
GridSearchResult grid_search(const SampleSet& x_scaled,
                             std::span<const double> y,
                             const GridSearchOptions& options,
                             std::optional<std::span<const std::size_t>> groups =
                                 std::nullopt);

// Seeded fold index per sample (or per group).
std::vector<std::size_t> assign_folds(std::size_t n_units, std::size_t folds,
                                      std::uint64_t seed);

}  // namespace s2::svr

#endif  // S2_GRID_SEARCH_HPP_
