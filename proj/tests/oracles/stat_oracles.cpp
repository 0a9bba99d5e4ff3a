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

#include "oracles/stat_oracles.hpp"

#include <cmath>
#include <limits>

namespace s2::oracle {
namespace {

double side_scale(double shape, double variance) {
  return std::sqrt(variance * std::tgamma(1.0 / shape) /
                   std::tgamma(3.0 / shape));
}

double magnitude(double shape, double scale, std::mt19937_64& rng) {
  std::gamma_distribution<double> g(1.0 / shape, 1.0);
  return scale * std::pow(g(rng), 1.0 / shape);
}

template <class Fn>
double scan_shape(Fn&& ratio_of_shape, double target) {
  double best = 0.05, best_err = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= 119500; ++k) {
    const double a = 0.05 + 1e-4 * k;
    const double err = std::fabs(ratio_of_shape(a) - target);
    if (err < best_err) {
      best_err = err;
      best = a;
    }
  }
  return best;
}

long reflect(long i, long n) {
  if (n == 1) return 0;
  while (i < 0 || i >= n) {
    if (i < 0) i = -i;
    if (i >= n) i = 2 * (n - 1) - i;
  }
  return i;
}

}  // namespace

std::vector<double> sample_ggd(std::size_t n, double shape, double variance,
                               std::mt19937_64& rng) {
  const double s = side_scale(shape, variance);
  std::bernoulli_distribution coin(0.5);
  std::vector<double> out(n);
  for (auto& v : out) {
    const double m = magnitude(shape, s, rng);
    v = coin(rng) ? m : -m;
  }
  return out;
}

std::vector<double> sample_aggd(std::size_t n, double shape,
                                double left_variance, double right_variance,
                                std::mt19937_64& rng) {
  const double bl = side_scale(shape, left_variance);
  const double br = side_scale(shape, right_variance);
  std::bernoulli_distribution left(bl / (bl + br));
  std::vector<double> out(n);
  for (auto& v : out) {
    v = left(rng) ? -magnitude(shape, bl, rng) : magnitude(shape, br, rng);
  }
  return out;
}

double brute_ggd_shape(const std::vector<double>& samples) {
  long double m1 = 0, m2 = 0;
  for (double x : samples) {
    m1 += std::fabs(x);
    m2 += static_cast<long double>(x) * x;
  }
  m1 /= samples.size();
  m2 /= samples.size();
  const double rho = static_cast<double>(m2 / (m1 * m1));
  return scan_shape(
      [](double a) {
        const double g2 = std::tgamma(2.0 / a);
        return std::tgamma(1.0 / a) * std::tgamma(3.0 / a) / (g2 * g2);
      },
      rho);
}

BruteAggd brute_aggd(const std::vector<double>& samples) {
  long double sl = 0, sr = 0, abs_sum = 0, sq_sum = 0;
  std::size_t nl = 0, nr = 0;
  for (double x : samples) {
    const long double xx = static_cast<long double>(x) * x;
    if (x < 0) {
      sl += xx;
      ++nl;
    } else if (x > 0) {
      sr += xx;
      ++nr;
    }
    abs_sum += std::fabs(x);
    sq_sum += xx;
  }
  BruteAggd out;
  out.left_variance = static_cast<double>(sl / nl);
  out.right_variance = static_cast<double>(sr / nr);
  const double g = std::sqrt(out.left_variance / out.right_variance);
  const long double mean_abs = abs_sum / samples.size();
  const long double mean_sq = sq_sum / samples.size();
  const double r = static_cast<double>(mean_abs * mean_abs / mean_sq);
  const double big_r =
      r * (g * g * g + 1.0) * (g + 1.0) / ((g * g + 1.0) * (g * g + 1.0));
  out.shape = scan_shape(
      [](double a) {
        const double g2 = std::tgamma(2.0 / a);
        return g2 * g2 / (std::tgamma(1.0 / a) * std::tgamma(3.0 / a));
      },
      big_r);
  return out;
}

Raster direct_reduce(const Raster& src) {
  static const double k1[5] = {1, 4, 6, 4, 1};
  const long w = static_cast<long>(src.width());
  const long h = static_cast<long>(src.height());
  Raster out(static_cast<std::size_t>((w + 1) / 2),
             static_cast<std::size_t>((h + 1) / 2));
  for (long oy = 0; oy < static_cast<long>(out.height()); ++oy) {
    for (long ox = 0; ox < static_cast<long>(out.width()); ++ox) {
      long double acc = 0;
      for (int v = -2; v <= 2; ++v) {
        for (int u = -2; u <= 2; ++u) {
          const long sx = reflect(2 * ox + u, w);
          const long sy = reflect(2 * oy + v, h);
          acc += k1[u + 2] * k1[v + 2] / 256.0L *
                 src.at(static_cast<std::size_t>(sx), static_cast<std::size_t>(sy));
        }
      }
      out.at(static_cast<std::size_t>(ox), static_cast<std::size_t>(oy)) =
          static_cast<double>(acc);
    }
  }
  return out;
}

std::vector<double> direct_ranks(const std::vector<double>& v) {
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    double less = 0, equal = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] < v[i]) less += 1;
      if (j != i && v[j] == v[i]) equal += 1;
    }
    r[i] = 1.0 + less + equal / 2.0;
  }
  return r;
}

double direct_pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n = a.size();
  long double ma = 0, mb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  long double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return static_cast<double>(sab / std::sqrt(saa * sbb));
}

double direct_srocc(const std::vector<double>& a, const std::vector<double>& b) {
  return direct_pearson(direct_ranks(a), direct_ranks(b));
}

double direct_rmse(const std::vector<double>& a, const std::vector<double>& b) {
  long double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += (static_cast<long double>(a[i]) - b[i]) * (static_cast<long double>(a[i]) - b[i]);
  }
  return static_cast<double>(std::sqrt(s / a.size()));
}

}  // namespace s2::oracle
