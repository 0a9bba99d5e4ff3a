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

// Five-parameter logistic mapping of objective scores onto MOS:
//
//   f(x) = b1 * (1/2 - 1 / (1 + exp(b2 * (x - b3)))) + b4 * x + b5

#ifndef S2_LOGISTIC_HPP_
#define S2_LOGISTIC_HPP_

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace s2::eval {

inline constexpr std::size_t kMinLogisticPoints = 10;
inline constexpr std::size_t kNelderMeadMaxIterations = 10'000;
inline constexpr double kNelderMeadTolerance = 1e-8;

using LogisticParams = std::array<double, 5>;

double logistic5(const LogisticParams& beta, double x);

struct LogisticFit {
  LogisticParams beta{};
  std::vector<double> mapped;
  // Pearson correlation of mapped scores with MOS, negated when the fitted
  // curve is decreasing so that anti-monotone predictors report a negative
  // coefficient.
  double plcc = 0.0;
  double rmse = 0.0;
  double sse = 0.0;
};

// Least-squares fit started from b1 = range(mos), b2 = 1/std(pred),
// b3 = mean(pred), b4 = 0, b5 = mean(mos). Throws ShapeError on a length
// mismatch and DegenerateInput for fewer than kMinLogisticPoints points or
// constant pred / mos.
LogisticFit logistic_fit(std::span<const double> pred,
                         std::span<const double> mos);

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t iterations = 0;
};

// Derivative-free minimization with standard coefficients (reflection 1,
// expansion 2, contraction 1/2, shrink 1/2). `step` sets the initial simplex
// edge along each axis.
NelderMeadResult nelder_mead(
    const std::function<double(std::span<const double>)>& objective,
    std::vector<double> start, double step,
    std::size_t max_iterations = kNelderMeadMaxIterations,
    double tolerance = kNelderMeadTolerance);

}  // namespace s2::eval

#endif  // S2_LOGISTIC_HPP_
