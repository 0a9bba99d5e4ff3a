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

#include "s2/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "s2/error.hpp"

namespace s2::eval {

QualityScore fuse(double q_st, double q_se, double w) {
  if (!(w >= 0.0 && w <= 1.0)) {
    throw InvalidArgument("fusion weight must lie in [0, 1], got " +
                          std::to_string(w));
  }
  // Endpoints are returned exactly rather than via 1*x + 0*y, which would
  // turn an infinite or NaN score on the unused path into NaN.
  double q;
  if (w == 1.0) {
    q = q_st;
  } else if (w == 0.0) {
    q = q_se;
  } else {
    q = w * q_st + (1.0 - w) * q_se;
  }
  return {q_st, q_se, w, q};
}

std::vector<double> fractional_ranks(std::span<const double> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

namespace {

void check_pair(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw ShapeError("length mismatch: " + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()));
  }
  if (a.size() < 3) throw ShapeError("need at least 3 points");
}

}  // namespace

double pearson(std::span<const double> a, std::span<const double> b) {
  check_pair(a, b);
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - ma;
    const double db = b[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) {
    throw DegenerateInput("correlation of a constant sequence");
  }
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

double srocc(std::span<const double> pred, std::span<const double> mos) {
  check_pair(pred, mos);
  const auto rp = fractional_ranks(pred);
  const auto rm = fractional_ranks(mos);
  return pearson(rp, rm);
}

double rmse(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw ShapeError("length mismatch: " + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()));
  }
  if (a.empty()) throw ShapeError("rmse of empty sequences");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s / static_cast<double>(a.size()));
}

PlccRmse plcc_rmse(std::span<const double> mapped,
                   std::span<const double> mos) {
  return {pearson(mapped, mos), rmse(mapped, mos)};
}

double median(std::vector<double> v) {
  if (v.empty()) throw InvalidArgument("median of empty sequence");
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 == 1 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

}  // namespace s2::eval
