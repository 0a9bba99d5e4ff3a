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

// Epsilon support vector regression with an RBF kernel.
//
// The dual is solved in the usual 2l-variable form
//
//   min  1/2 a^T Q a + p^T a   s.t.  y^T a = 0,  0 <= a_t <= C
//
// with y_t = +1 (t < l) / -1 (t >= l), Q_ts = y_t y_s K(t mod l, s mod l),
// p_t = eps - z_t (t < l) and eps + z_t (t >= l). Sequential minimal
// optimization with second-order working-set selection runs until the
// maximal KKT violation drops below kKktTolerance. The regression
// coefficients are beta_i = a_i - a_{i+l} and f(x) = sum beta_i K(x_i, x) + b.

#ifndef S2_SVR_HPP_
#define S2_SVR_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace s2::svr {

using Sample = std::vector<double>;
using SampleSet = std::vector<Sample>;

inline constexpr double kKktTolerance = 1e-5;
inline constexpr std::size_t kMaxIterations = 10'000'000;

// Per-dimension affine map of [min, max] onto [-1, 1]. Constant dimensions
// map to 0.
struct ScalingParams {
  std::vector<double> min;
  std::vector<double> max;

  std::size_t dims() const { return min.size(); }
  Sample apply(std::span<const double> x) const;

  // min = -1, max = 1 on every dimension.
  static ScalingParams identity(std::size_t dims);

  friend bool operator==(const ScalingParams&, const ScalingParams&) = default;
};

struct ScaledSet {
  SampleSet x;
  ScalingParams scaling;
};

// Throws InvalidArgument for empty input and ShapeError for ragged rows.
ScaledSet scale_fit_transform(const SampleSet& x);

struct SvrParams {
  double c = 1.0;
  double gamma = 1.0;
  double epsilon = 0.1;

  friend bool operator==(const SvrParams&, const SvrParams&) = default;
};

struct SvrModel {
  SampleSet support_vectors;  // scaled coordinates
  std::vector<double> dual_coeffs;
  double bias = 0.0;
  SvrParams params;
  ScalingParams scaling;
  // Free-form description of the feature space, e.g. "st:v6".
  std::string feature_tag;

  std::size_t dims() const { return scaling.dims(); }
  friend bool operator==(const SvrModel&, const SvrModel&) = default;
};

// Row-major n x n matrix.
struct KernelMatrix {
  std::size_t n = 0;
  std::vector<double> values;

  double operator()(std::size_t i, std::size_t j) const {
    return values[i * n + j];
  }
};

double rbf_kernel(std::span<const double> a, std::span<const double> b,
                  double gamma);

// Pairwise squared Euclidean distances.
KernelMatrix squared_distances(const SampleSet& x);
KernelMatrix rbf_from_distances(const KernelMatrix& sq_dist, double gamma);

struct DualSolution {
  std::vector<double> alpha;  // 2l entries
  std::vector<double> beta;   // alpha[i] - alpha[i + l]
  double bias = 0.0;
  double objective = 0.0;     // 1/2 a^T Q a + p^T a
  std::size_t iterations = 0;
};

// Solves the dual for a precomputed kernel. Ties in working-set selection are
// resolved by a seed-derived scan order. Throws ConvergenceError after
// kMaxIterations and InvalidArgument for bad hyperparameters.
DualSolution solve_dual(const KernelMatrix& kernel, std::span<const double> y,
                        double c, double epsilon, std::uint64_t seed);

// Trains on already-scaled samples. `scaling` is stored on the model and
// applied to raw inputs by predict(). Throws InvalidArgument when |x| != |y|,
// |x| < 2 or a hyperparameter is out of range.
SvrModel svr_train(const SampleSet& x_scaled, std::span<const double> y,
                   const SvrParams& params, std::uint64_t seed,
                   ScalingParams scaling);

// Scales raw samples, then trains.
SvrModel svr_fit(const SampleSet& x_raw, std::span<const double> y,
                 const SvrParams& params, std::uint64_t seed);

// Applies model.scaling to x, then evaluates the expansion. Throws ShapeError
// on a dimension mismatch.
double svr_predict(const SvrModel& model, std::span<const double> x);

// Same as svr_predict for an already-scaled sample.
double svr_predict_scaled(const SvrModel& model, std::span<const double> x);

}  // namespace s2::svr

#endif  // S2_SVR_HPP_
