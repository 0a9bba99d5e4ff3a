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

#include "s2/svr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "s2/error.hpp"

namespace s2::svr {

Sample ScalingParams::apply(std::span<const double> x) const {
  if (x.size() != dims()) {
    throw ShapeError("expected " + std::to_string(dims()) +
                     " features, got " + std::to_string(x.size()));
  }
  Sample out(x.size());
  for (std::size_t d = 0; d < x.size(); ++d) {
    const double range = max[d] - min[d];
    out[d] = range > 0.0 ? 2.0 * (x[d] - min[d]) / range - 1.0 : 0.0;
  }
  return out;
}

ScalingParams ScalingParams::identity(std::size_t dims) {
  return {std::vector<double>(dims, -1.0), std::vector<double>(dims, 1.0)};
}

ScaledSet scale_fit_transform(const SampleSet& x) {
  if (x.empty()) throw InvalidArgument("scale_fit_transform: empty input");
  const std::size_t dims = x.front().size();
  ScaledSet out;
  out.scaling.min.assign(dims, std::numeric_limits<double>::infinity());
  out.scaling.max.assign(dims, -std::numeric_limits<double>::infinity());
  for (const auto& row : x) {
    if (row.size() != dims) throw ShapeError("ragged feature rows");
    for (std::size_t d = 0; d < dims; ++d) {
      out.scaling.min[d] = std::min(out.scaling.min[d], row[d]);
      out.scaling.max[d] = std::max(out.scaling.max[d], row[d]);
    }
  }
  out.x.reserve(x.size());
  for (const auto& row : x) out.x.push_back(out.scaling.apply(row));
  return out;
}

double rbf_kernel(std::span<const double> a, std::span<const double> b,
                  double gamma) {
  double d2 = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    d2 += d * d;
  }
  return std::exp(-gamma * d2);
}

KernelMatrix squared_distances(const SampleSet& x) {
  KernelMatrix m;
  m.n = x.size();
  m.values.assign(m.n * m.n, 0.0);
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = i + 1; j < m.n; ++j) {
      double d2 = 0.0;
      for (std::size_t k = 0; k < x[i].size(); ++k) {
        const double d = x[i][k] - x[j][k];
        d2 += d * d;
      }
      m.values[i * m.n + j] = m.values[j * m.n + i] = d2;
    }
  }
  return m;
}

KernelMatrix rbf_from_distances(const KernelMatrix& sq_dist, double gamma) {
  KernelMatrix k{sq_dist.n, std::vector<double>(sq_dist.values.size())};
  for (std::size_t i = 0; i < k.values.size(); ++i) {
    k.values[i] = std::exp(-gamma * sq_dist.values[i]);
  }
  return k;
}

namespace {

constexpr double kTau = 1e-12;

class SmoSolver {
 public:
  SmoSolver(const KernelMatrix& kernel, std::span<const double> z, double c,
            double epsilon, std::uint64_t seed)
      : k_(kernel), l_(kernel.n), n2_(2 * kernel.n), c_(c) {
    y_.resize(n2_);
    p_.resize(n2_);
    for (std::size_t t = 0; t < l_; ++t) {
      y_[t] = 1;
      y_[t + l_] = -1;
      p_[t] = epsilon - z[t];
      p_[t + l_] = epsilon + z[t];
    }
    alpha_.assign(n2_, 0.0);
    grad_ = p_;
    order_.resize(n2_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::mt19937_64 rng(seed);
    for (std::size_t i = n2_ - 1; i > 0; --i) {
      std::swap(order_[i], order_[rng() % (i + 1)]);
    }
  }

  DualSolution run() {
    std::size_t iter = 0;
    std::size_t i = 0, j = 0;
    while (select_working_set(i, j)) {
      if (++iter > kMaxIterations) {
        throw ConvergenceError("SMO did not converge within " +
                               std::to_string(kMaxIterations) + " iterations");
      }
      update_pair(i, j);
    }
    DualSolution s;
    s.iterations = iter;
    s.alpha = alpha_;
    s.beta.resize(l_);
    for (std::size_t t = 0; t < l_; ++t) s.beta[t] = alpha_[t] - alpha_[t + l_];
    s.bias = -compute_rho();
    double obj = 0.0;
    for (std::size_t t = 0; t < n2_; ++t) obj += alpha_[t] * (grad_[t] + p_[t]);
    s.objective = 0.5 * obj;
    return s;
  }

 private:
  double q(std::size_t t, std::size_t s) const {
    return y_[t] * y_[s] * k_(t % l_, s % l_);
  }
  double qd(std::size_t t) const { return k_(t % l_, t % l_); }
  bool upper(std::size_t t) const { return alpha_[t] >= c_; }
  bool lower(std::size_t t) const { return alpha_[t] <= 0.0; }

  // Second-order selection (Fan, Chen and Lin). Returns false at optimality.
  bool select_working_set(std::size_t& out_i, std::size_t& out_j) const {
    double gmax = -std::numeric_limits<double>::infinity();
    std::size_t gmax_idx = n2_;
    for (std::size_t t : order_) {
      const double v = y_[t] == 1 ? (!upper(t) ? -grad_[t] : -HUGE_VAL)
                                  : (!lower(t) ? grad_[t] : -HUGE_VAL);
      if (v > gmax) {
        gmax = v;
        gmax_idx = t;
      }
    }
    if (gmax_idx == n2_) return false;
    const std::size_t i = gmax_idx;

    double gmax2 = -std::numeric_limits<double>::infinity();
    double obj_min = std::numeric_limits<double>::infinity();
    std::size_t gmin_idx = n2_;
    const double qdi = qd(i);
    for (std::size_t t : order_) {
      double grad_diff;
      if (y_[t] == 1) {
        if (lower(t)) continue;
        gmax2 = std::max(gmax2, grad_[t]);
        grad_diff = gmax + grad_[t];
      } else {
        if (upper(t)) continue;
        gmax2 = std::max(gmax2, -grad_[t]);
        grad_diff = gmax - grad_[t];
      }
      if (grad_diff <= 0.0) continue;
      double quad = qdi + qd(t) - 2.0 * y_[i] * y_[t] * q(i, t);
      if (quad <= 0.0) quad = kTau;
      const double obj = -(grad_diff * grad_diff) / quad;
      if (obj < obj_min) {
        obj_min = obj;
        gmin_idx = t;
      }
    }
    if (gmax + gmax2 < kKktTolerance || gmin_idx == n2_) return false;
    out_i = i;
    out_j = gmin_idx;
    return true;
  }

  void update_pair(std::size_t i, std::size_t j) {
    const double old_i = alpha_[i];
    const double old_j = alpha_[j];
    const double qij = q(i, j);
    double& ai = alpha_[i];
    double& aj = alpha_[j];
    if (y_[i] != y_[j]) {
      double quad = qd(i) + qd(j) + 2.0 * qij;
      if (quad <= 0.0) quad = kTau;
      const double delta = (-grad_[i] - grad_[j]) / quad;
      const double diff = ai - aj;
      ai += delta;
      aj += delta;
      if (diff > 0.0) {
        if (aj < 0.0) {
          aj = 0.0;
          ai = diff;
        }
      } else if (ai < 0.0) {
        ai = 0.0;
        aj = -diff;
      }
      if (diff > 0.0) {
        if (ai > c_) {
          ai = c_;
          aj = c_ - diff;
        }
      } else if (aj > c_) {
        aj = c_;
        ai = c_ + diff;
      }
    } else {
      double quad = qd(i) + qd(j) - 2.0 * qij;
      if (quad <= 0.0) quad = kTau;
      const double delta = (grad_[i] - grad_[j]) / quad;
      const double sum = ai + aj;
      ai -= delta;
      aj += delta;
      if (sum > c_) {
        if (ai > c_) {
          ai = c_;
          aj = sum - c_;
        }
      } else if (aj < 0.0) {
        aj = 0.0;
        ai = sum;
      }
      if (sum > c_) {
        if (aj > c_) {
          aj = c_;
          ai = sum - c_;
        }
      } else if (ai < 0.0) {
        ai = 0.0;
        aj = sum;
      }
    }
    const double di = ai - old_i;
    const double dj = aj - old_j;
    for (std::size_t t = 0; t < n2_; ++t) {
      grad_[t] += q(t, i) * di + q(t, j) * dj;
    }
  }

  double compute_rho() const {
    double ub = std::numeric_limits<double>::infinity();
    double lb = -std::numeric_limits<double>::infinity();
    double sum_free = 0.0;
    std::size_t n_free = 0;
    for (std::size_t t = 0; t < n2_; ++t) {
      const double yg = y_[t] * grad_[t];
      if (upper(t)) {
        if (y_[t] == -1) {
          ub = std::min(ub, yg);
        } else {
          lb = std::max(lb, yg);
        }
      } else if (lower(t)) {
        if (y_[t] == 1) {
          ub = std::min(ub, yg);
        } else {
          lb = std::max(lb, yg);
        }
      } else {
        ++n_free;
        sum_free += yg;
      }
    }
    return n_free > 0 ? sum_free / static_cast<double>(n_free) : (ub + lb) / 2.0;
  }

  const KernelMatrix& k_;
  std::size_t l_;
  std::size_t n2_;
  double c_;
  std::vector<int> y_;
  std::vector<double> p_;
  std::vector<double> alpha_;
  std::vector<double> grad_;
  std::vector<std::size_t> order_;
};

void check_params(double c, double gamma, double epsilon) {
  if (!(c > 0.0) || !std::isfinite(c)) throw InvalidArgument("C must be > 0");
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw InvalidArgument("gamma must be > 0");
  }
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw InvalidArgument("epsilon must be >= 0");
  }
}

}  // namespace

DualSolution solve_dual(const KernelMatrix& kernel, std::span<const double> y,
                        double c, double epsilon, std::uint64_t seed) {
  check_params(c, 1.0, epsilon);
  if (kernel.n != y.size()) {
    throw InvalidArgument("kernel size does not match label count");
  }
  if (kernel.n == 0) throw InvalidArgument("empty training set");
  return SmoSolver(kernel, y, c, epsilon, seed).run();
}

SvrModel svr_train(const SampleSet& x_scaled, std::span<const double> y,
                   const SvrParams& params, std::uint64_t seed,
                   ScalingParams scaling) {
  check_params(params.c, params.gamma, params.epsilon);
  if (x_scaled.size() != y.size()) {
    throw InvalidArgument("svr_train: " + std::to_string(x_scaled.size()) +
                          " samples but " + std::to_string(y.size()) +
                          " labels");
  }
  if (x_scaled.size() < 2) {
    throw InvalidArgument("svr_train needs at least 2 samples");
  }
  for (const auto& row : x_scaled) {
    if (row.size() != scaling.dims()) {
      throw ShapeError("sample dimension does not match scaling parameters");
    }
  }
  const auto kernel =
      rbf_from_distances(squared_distances(x_scaled), params.gamma);
  const DualSolution sol = solve_dual(kernel, y, params.c, params.epsilon, seed);

  SvrModel m;
  m.params = params;
  m.bias = sol.bias;
  m.scaling = std::move(scaling);
  for (std::size_t i = 0; i < x_scaled.size(); ++i) {
    if (sol.beta[i] != 0.0) {
      m.support_vectors.push_back(x_scaled[i]);
      m.dual_coeffs.push_back(sol.beta[i]);
    }
  }
  return m;
}

SvrModel svr_fit(const SampleSet& x_raw, std::span<const double> y,
                 const SvrParams& params, std::uint64_t seed) {
  ScaledSet s = scale_fit_transform(x_raw);
  return svr_train(s.x, y, params, seed, std::move(s.scaling));
}

double svr_predict_scaled(const SvrModel& model, std::span<const double> x) {
  if (x.size() != model.dims()) {
    throw ShapeError("model expects " + std::to_string(model.dims()) +
                     " features, got " + std::to_string(x.size()));
  }
  double f = model.bias;
  for (std::size_t k = 0; k < model.support_vectors.size(); ++k) {
    f += model.dual_coeffs[k] *
         rbf_kernel(model.support_vectors[k], x, model.params.gamma);
  }
  return f;
}

double svr_predict(const SvrModel& model, std::span<const double> x) {
  const Sample scaled = model.scaling.apply(x);
  return svr_predict_scaled(model, scaled);
}

}  // namespace s2::svr
