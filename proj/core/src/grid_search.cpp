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

#include "s2/grid_search.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "s2/error.hpp"
#include "s2/parallel.hpp"

namespace s2::svr {

GridSearchOptions::GridSearchOptions() {
  for (int e = -1; e <= 9; ++e) c_grid.push_back(std::ldexp(1.0, e));
  for (int e = -9; e <= 3; ++e) gamma_grid.push_back(std::ldexp(1.0, e));
}

std::vector<std::size_t> assign_folds(std::size_t n_units, std::size_t folds,
                                      std::uint64_t seed) {
  if (folds < 2) throw InvalidArgument("need at least 2 folds");
  if (n_units < folds) {
    throw InvalidArgument("cannot split " + std::to_string(n_units) +
                          " units into " + std::to_string(folds) + " folds");
  }
  std::vector<std::size_t> perm(n_units);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = n_units - 1; i > 0; --i) {
    std::swap(perm[i], perm[rng() % (i + 1)]);
  }
  std::vector<std::size_t> fold(n_units);
  for (std::size_t k = 0; k < n_units; ++k) fold[perm[k]] = k % folds;
  return fold;
}

namespace {

struct Cell {
  SvrParams params;
  double rmse = std::numeric_limits<double>::infinity();
};

KernelMatrix sub_kernel(const KernelMatrix& full,
                        const std::vector<std::size_t>& idx) {
  KernelMatrix k{idx.size(), std::vector<double>(idx.size() * idx.size())};
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = 0; b < idx.size(); ++b) {
      k.values[a * idx.size() + b] = full(idx[a], idx[b]);
    }
  }
  return k;
}

}  // namespace

GridSearchResult grid_search(const SampleSet& x_scaled,
                             std::span<const double> y,
                             const GridSearchOptions& options,
                             std::optional<std::span<const std::size_t>> groups) {
  const std::size_t n = x_scaled.size();
  if (n != y.size()) {
    throw InvalidArgument("grid_search: " + std::to_string(n) +
                          " samples but " + std::to_string(y.size()) +
                          " labels");
  }
  if (n < options.folds) {
    throw InvalidArgument("grid_search: " + std::to_string(n) +
                          " samples is fewer than " +
                          std::to_string(options.folds) + " folds");
  }
  if (options.c_grid.empty() || options.gamma_grid.empty() ||
      options.epsilon_grid.empty()) {
    throw InvalidArgument("grid_search: empty hyperparameter grid");
  }

  std::vector<std::size_t> fold(n);
  if (groups) {
    if (groups->size() != n) {
      throw InvalidArgument("grid_search: group ids do not match samples");
    }
    std::map<std::size_t, std::size_t> unit_of;
    for (std::size_t g : *groups) unit_of.emplace(g, unit_of.size());
    const auto unit_fold =
        assign_folds(unit_of.size(), options.folds, options.seed);
    for (std::size_t i = 0; i < n; ++i) {
      fold[i] = unit_fold[unit_of.at((*groups)[i])];
    }
  } else {
    fold = assign_folds(n, options.folds, options.seed);
  }

  std::vector<std::vector<std::size_t>> train_idx(options.folds);
  std::vector<std::vector<std::size_t>> test_idx(options.folds);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t f = 0; f < options.folds; ++f) {
      (fold[i] == f ? test_idx : train_idx)[f].push_back(i);
    }
  }

  const KernelMatrix dist = squared_distances(x_scaled);
  const std::size_t nc = options.c_grid.size();
  const std::size_t ne = options.epsilon_grid.size();
  const std::size_t ng = options.gamma_grid.size();

  // One task per gamma: the kernel is shared by every (C, eps) cell.
  std::vector<Cell> cells(nc * ng * ne);
  parallel_for(ng, [&](std::size_t gi) {
    const double gamma = options.gamma_grid[gi];
    const KernelMatrix kernel = rbf_from_distances(dist, gamma);
    std::vector<KernelMatrix> fold_kernels;
    std::vector<std::vector<double>> fold_labels;
    for (std::size_t f = 0; f < options.folds; ++f) {
      fold_kernels.push_back(sub_kernel(kernel, train_idx[f]));
      std::vector<double> labels;
      for (std::size_t i : train_idx[f]) labels.push_back(y[i]);
      fold_labels.push_back(std::move(labels));
    }
    for (std::size_t ci = 0; ci < nc; ++ci) {
      for (std::size_t ei = 0; ei < ne; ++ei) {
        Cell& cell = cells[(ci * ng + gi) * ne + ei];
        cell.params = {options.c_grid[ci], gamma, options.epsilon_grid[ei]};
        double sum_rmse = 0.0;
        for (std::size_t f = 0; f < options.folds; ++f) {
          const DualSolution sol =
              solve_dual(fold_kernels[f], fold_labels[f], cell.params.c,
                         cell.params.epsilon, options.seed + f);
          double sse = 0.0;
          for (std::size_t t : test_idx[f]) {
            double pred = sol.bias;
            for (std::size_t a = 0; a < train_idx[f].size(); ++a) {
              if (sol.beta[a] != 0.0) {
                pred += sol.beta[a] * kernel(train_idx[f][a], t);
              }
            }
            sse += (pred - y[t]) * (pred - y[t]);
          }
          sum_rmse += std::sqrt(sse / static_cast<double>(test_idx[f].size()));
        }
        cell.rmse = sum_rmse / static_cast<double>(options.folds);
      }
    }
  });

  // Cells are laid out in (C, gamma, eps) order, so the first strict
  // improvement wins ties toward smaller values.
  std::size_t best = 0;
  for (std::size_t k = 1; k < cells.size(); ++k) {
    if (cells[k].rmse < cells[best].rmse) best = k;
  }

  GridSearchResult result;
  result.best = cells[best].params;
  result.cv_rmse = cells[best].rmse;
  result.oof_predictions.assign(n, 0.0);
  const KernelMatrix kernel = rbf_from_distances(dist, result.best.gamma);
  for (std::size_t f = 0; f < options.folds; ++f) {
    std::vector<double> labels;
    for (std::size_t i : train_idx[f]) labels.push_back(y[i]);
    const DualSolution sol =
        solve_dual(sub_kernel(kernel, train_idx[f]), labels, result.best.c,
                   result.best.epsilon, options.seed + f);
    for (std::size_t t : test_idx[f]) {
      double pred = sol.bias;
      for (std::size_t a = 0; a < train_idx[f].size(); ++a) {
        pred += sol.beta[a] * kernel(train_idx[f][a], t);
      }
      result.oof_predictions[t] = pred;
    }
  }
  return result;
}

}  // namespace s2::svr
