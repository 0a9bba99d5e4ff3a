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

#include "s2/logistic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "s2/error.hpp"
#include "s2/metrics.hpp"

namespace s2::eval {

double logistic5(const LogisticParams& b, double x) {
  return b[0] * (0.5 - 1.0 / (1.0 + std::exp(b[1] * (x - b[2])))) + b[3] * x +
         b[4];
}

NelderMeadResult nelder_mead(
    const std::function<double(std::span<const double>)>& objective,
    std::vector<double> start, double step, std::size_t max_iterations,
    double tolerance) {
  const std::size_t n = start.size();
  std::vector<std::vector<double>> simplex(n + 1, start);
  for (std::size_t k = 0; k < n; ++k) simplex[k + 1][k] += step;
  std::vector<double> fv(n + 1);
  auto eval = [&](const std::vector<double>& p) {
    const double v = objective(p);
    return std::isfinite(v) ? v : std::numeric_limits<double>::max();
  };
  for (std::size_t k = 0; k <= n; ++k) fv[k] = eval(simplex[k]);

  std::vector<std::size_t> order(n + 1);
  std::size_t iter = 0;
  for (; iter < max_iterations; ++iter) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[n - 1];

    double diameter = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
      for (std::size_t d = 0; d < n; ++d) {
        diameter = std::max(diameter,
                            std::abs(simplex[k][d] - simplex[best][d]));
      }
    }
    if (fv[worst] - fv[best] <= tolerance * (std::abs(fv[best]) + tolerance) &&
        diameter <= tolerance) {
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t k = 0; k <= n; ++k) {
      if (k == worst) continue;
      for (std::size_t d = 0; d < n; ++d) centroid[d] += simplex[k][d];
    }
    for (double& c : centroid) c /= static_cast<double>(n);
    auto along = [&](double t) {
      std::vector<double> p(n);
      for (std::size_t d = 0; d < n; ++d) {
        p[d] = centroid[d] + t * (simplex[worst][d] - centroid[d]);
      }
      return p;
    };

    std::vector<double> xr = along(-1.0);
    const double fr = eval(xr);
    if (fr < fv[best]) {
      std::vector<double> xe = along(-2.0);
      const double fe = eval(xe);
      if (fe < fr) {
        simplex[worst] = std::move(xe);
        fv[worst] = fe;
      } else {
        simplex[worst] = std::move(xr);
        fv[worst] = fr;
      }
      continue;
    }
    if (fr < fv[second]) {
      simplex[worst] = std::move(xr);
      fv[worst] = fr;
      continue;
    }
    const bool outside = fr < fv[worst];
    std::vector<double> xc = along(outside ? -0.5 : 0.5);
    const double fc = eval(xc);
    if (fc < (outside ? fr : fv[worst])) {
      simplex[worst] = std::move(xc);
      fv[worst] = fc;
      continue;
    }
    for (std::size_t k = 0; k <= n; ++k) {
      if (k == best) continue;
      for (std::size_t d = 0; d < n; ++d) {
        simplex[k][d] = simplex[best][d] + 0.5 * (simplex[k][d] - simplex[best][d]);
      }
      fv[k] = eval(simplex[k]);
    }
  }

  const std::size_t best = static_cast<std::size_t>(
      std::min_element(fv.begin(), fv.end()) - fv.begin());
  return {simplex[best], fv[best], iter};
}

namespace {

double mean_of(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double std_of(std::span<const double> v, double m) {
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size()));
}

double sse_of(const LogisticParams& b, std::span<const double> pred,
              std::span<const double> mos) {
  double s = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const double r = logistic5(b, pred[i]) - mos[i];
    s += r * r;
  }
  return s;
}

// Least-squares a, b for mos ~ a * f + b, folded into the parameters. The
// result never has a larger SSE than `b` itself.
LogisticParams affine_polish(const LogisticParams& beta,
                             std::span<const double> pred,
                             std::span<const double> mos) {
  std::vector<double> f(pred.size());
  for (std::size_t i = 0; i < pred.size(); ++i) f[i] = logistic5(beta, pred[i]);
  const double mf = mean_of(f);
  const double mm = mean_of(mos);
  double sff = 0.0, sfm = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    sff += (f[i] - mf) * (f[i] - mf);
    sfm += (f[i] - mf) * (mos[i] - mm);
  }
  if (!(sff > 0.0)) return beta;
  const double a = sfm / sff;
  const double c = mm - a * mf;
  LogisticParams out = {a * beta[0], beta[1], beta[2], a * beta[3],
                        a * beta[4] + c};
  return sse_of(out, pred, mos) <= sse_of(beta, pred, mos) ? out : beta;
}

}  // namespace

LogisticFit logistic_fit(std::span<const double> pred,
                         std::span<const double> mos) {
  if (pred.size() != mos.size()) {
    throw ShapeError("logistic_fit: length mismatch " +
                     std::to_string(pred.size()) + " vs " +
                     std::to_string(mos.size()));
  }
  if (pred.size() < kMinLogisticPoints) {
    throw DegenerateInput("logistic_fit needs at least " +
                          std::to_string(kMinLogisticPoints) + " points, got " +
                          std::to_string(pred.size()));
  }
  const double mx = mean_of(pred);
  const double sx = std_of(pred, mx);
  const double my = mean_of(mos);
  const double sy = std_of(mos, my);
  if (!(sx > 0.0) || !(sy > 0.0)) {
    throw DegenerateInput("logistic_fit: constant predictions or MOS");
  }
  const auto [lo, hi] = std::minmax_element(mos.begin(), mos.end());

  // The simplex works on standardized scores and MOS so that one step size
  // suits every parameter; the mapping back to raw units is exact.
  std::vector<double> u(pred.size()), v(mos.size());
  for (std::size_t i = 0; i < pred.size(); ++i) {
    u[i] = (pred[i] - mx) / sx;
    v[i] = (mos[i] - my) / sy;
  }
  auto internal_sse = [&](std::span<const double> a) {
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const double g = a[0] * (0.5 - 1.0 / (1.0 + std::exp(a[1] * (u[i] - a[2])))) +
                       a[3] * u[i] + a[4];
      s += (g - v[i]) * (g - v[i]);
    }
    return s;
  };
  auto to_raw = [&](std::span<const double> a) -> LogisticParams {
    return {sy * a[0], a[1] / sx, mx + sx * a[2], sy * a[3] / sx,
            sy * a[4] + my - sy * a[3] * mx / sx};
  };

  // b1 = range(mos), b2 = 1/std(pred), b3 = mean(pred), b4 = 0,
  // b5 = mean(mos) in standardized coordinates.
  std::vector<double> start = {(*hi - *lo) / sy, 1.0, 0.0, 0.0, 0.0};
  NelderMeadResult nm = nelder_mead(internal_sse, start, 0.5);
  // Restarts from the previous optimum guard against a collapsed simplex.
  for (int restart = 0; restart < 2; ++restart) {
    NelderMeadResult again = nelder_mead(internal_sse, nm.x, 0.1);
    if (!(again.value < nm.value)) break;
    nm = std::move(again);
  }
  LogisticParams beta = affine_polish(to_raw(nm.x), pred, mos);

  // Purely affine candidate (b1 = 0): ordinary least squares on pred.
  LogisticParams linear = affine_polish({0.0, 1.0 / sx, mx, 1.0, 0.0}, pred, mos);
  if (sse_of(linear, pred, mos) < sse_of(beta, pred, mos)) beta = linear;

  LogisticFit fit;
  fit.beta = beta;
  fit.mapped.resize(pred.size());
  for (std::size_t i = 0; i < pred.size(); ++i) {
    fit.mapped[i] = logistic5(beta, pred[i]);
  }
  fit.sse = sse_of(beta, pred, mos);
  fit.rmse = rmse(fit.mapped, mos);
  const double mm = mean_of(fit.mapped);
  double spread = 0.0;
  for (double m : fit.mapped) spread += (m - mm) * (m - mm);
  if (spread > 0.0) {
    const double direction = pearson(pred, fit.mapped) < 0.0 ? -1.0 : 1.0;
    fit.plcc = direction * pearson(fit.mapped, mos);
  }
  return fit;
}

}  // namespace s2::eval
