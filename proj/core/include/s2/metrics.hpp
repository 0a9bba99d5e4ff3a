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

#ifndef S2_METRICS_HPP_
#define S2_METRICS_HPP_

#include <span>
#include <vector>

namespace s2::eval {

struct QualityScore {
  double q_st = 0.0;
  double q_se = 0.0;
  double w = 1.0;
  double q_overall = 0.0;
};

// q_overall = w * q_st + (1 - w) * q_se. Throws InvalidArgument unless
// 0 <= w <= 1.
QualityScore fuse(double q_st, double q_se, double w);

// Fractional ranks starting at 1; tied values share their average rank.
std::vector<double> fractional_ranks(std::span<const double> v);

// The following throw ShapeError on a length mismatch or fewer than 3
// points, and DegenerateInput when either argument is constant.
double pearson(std::span<const double> a, std::span<const double> b);
double srocc(std::span<const double> pred, std::span<const double> mos);

// RMSE only requires equal, nonzero lengths.
double rmse(std::span<const double> a, std::span<const double> b);

struct PlccRmse {
  double plcc = 0.0;
  double rmse = 0.0;
};
PlccRmse plcc_rmse(std::span<const double> mapped, std::span<const double> mos);

double median(std::vector<double> v);

}  // namespace s2::eval

#endif  // S2_METRICS_HPP_
