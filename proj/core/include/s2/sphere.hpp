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

// Spherical geometry over equirectangular rasters: direction sampling,
// gnomonic viewport rendering, viewport layouts and the spherical PSNR
// family (S-PSNR, WS-PSNR, CPP-PSNR).
//
// Equirectangular convention: column x spans longitude [-pi, pi) left to
// right with pixel centers at lon = ((x + 0.5) / W - 0.5) * 2pi; row y spans
// latitude from +pi/2 (top) to -pi/2 (bottom) with centers at
// lat = (0.5 - (y + 0.5) / H) * pi.

#ifndef S2_SPHERE_HPP_
#define S2_SPHERE_HPP_

#include <array>
#include <cstddef>
#include <numbers>
#include <vector>

#include "s2/raster.hpp"

namespace s2::sphere {

inline constexpr double kPi = std::numbers::pi;

struct SphereDirection {
  double longitude = 0.0;  // [-pi, pi)
  double latitude = 0.0;   // [-pi/2, pi/2]

  // Wraps longitude into [-pi, pi) and clamps latitude. Throws
  // InvalidArgument for non-finite input.
  static SphereDirection normalized(double longitude, double latitude);

  std::array<double, 3> unit_vector() const;
  static SphereDirection from_vector(const std::array<double, 3>& v);
};

// Great-circle distance in radians.
double angular_distance(const SphereDirection& a, const SphereDirection& b);

inline constexpr double kDefaultFov = kPi / 2.0;
inline constexpr std::size_t kDefaultViewportSize = 256;

struct ViewportSpec {
  SphereDirection center;
  double fov = kDefaultFov;  // radians, (0, pi)
  std::size_t size = kDefaultViewportSize;

  // Throws InvalidArgument if fov is outside (0, pi) or size < 8.
  void validate() const;
};

// Supported layouts: 6 (cube faces), 20 (icosahedron faces) and 80 (each
// icosahedron face split into four). Centers are deterministic; every spec
// uses the default FOV and size. Throws InvalidArgument for other counts.
std::vector<ViewportSpec> sample_viewports(std::size_t n_viewports);

bool is_supported_viewport_count(std::size_t n_viewports);

// Throws AspectError unless width == 2 * height.
void require_equirectangular(const Raster& omni);

// Bilinear sample at a direction. Longitude wraps, latitude clamps.
double sample_bilinear(const Raster& omni, const SphereDirection& dir);

// Gnomonic projection about spec.center. Throws AspectError for a non-2:1
// source and InvalidArgument for an invalid spec.
Raster render_viewport(const Raster& omni, const ViewportSpec& spec);

// Renders every spec; runs in parallel, output order follows `specs`.
std::vector<Raster> render_viewports(const Raster& omni,
                                     const std::vector<ViewportSpec>& specs);

// Fibonacci lattice on the unit sphere.
std::vector<SphereDirection> fibonacci_sphere(std::size_t n_points);

// Per-row weights cos(latitude of row center), normalized to sum to 1.
std::vector<double> ws_row_weights(std::size_t height);

inline constexpr std::size_t kMinSpherePoints = 100;

// All PSNR variants return kPsnrIdentical for zero error and throw
// ShapeError for mismatched dimensions and AspectError for non-2:1 input.
double ws_psnr(const Raster& ref, const Raster& dist);
// Throws InvalidArgument when n_points < kMinSpherePoints.
double s_psnr(const Raster& ref, const Raster& dist, std::size_t n_points);
double cpp_psnr(const Raster& ref, const Raster& dist);

// Craster parabolic forward projection. x in [-sqrt(3pi), sqrt(3pi)],
// y in [-sqrt(3pi)/2, sqrt(3pi)/2].
std::array<double, 2> craster_forward(double longitude, double latitude);
// Inverse; returns false when (x, y) falls outside the projection outline.
bool craster_inverse(double x, double y, double& longitude, double& latitude);

}  // namespace s2::sphere

#endif  // S2_SPHERE_HPP_
