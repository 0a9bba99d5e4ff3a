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

#include "s2/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "s2/error.hpp"
#include "s2/parallel.hpp"

namespace s2::sphere {

namespace {

using Vec3 = std::array<double, 3>;

Vec3 normalize(const Vec3& v) {
  const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  return {v[0] / n, v[1] / n, v[2] / n};
}

Vec3 add(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

ViewportSpec spec_at(double lon, double lat) {
  ViewportSpec s;
  s.center = SphereDirection::normalized(lon, lat);
  return s;
}

std::vector<Vec3> icosahedron_vertices() {
  const double phi = std::numbers::phi;
  std::vector<Vec3> v;
  for (double a : {-1.0, 1.0}) {
    for (double b : {-phi, phi}) {
      v.push_back({0.0, a, b});
      v.push_back({a, b, 0.0});
      v.push_back({b, 0.0, a});
    }
  }
  for (auto& p : v) p = normalize(p);
  return v;
}

// Triangles of the icosahedron, enumerated in index order so the layout is
// reproducible.
std::vector<std::array<Vec3, 3>> icosahedron_faces() {
  const auto v = icosahedron_vertices();
  // Adjacent vertices of the unit icosahedron satisfy dot = 1/sqrt(5).
  const double adjacent = 1.0 / std::sqrt(5.0);
  auto is_edge = [&](std::size_t a, std::size_t b) {
    return std::abs(dot(v[a], v[b]) - adjacent) < 1e-9;
  };
  std::vector<std::array<Vec3, 3>> faces;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (!is_edge(i, j)) continue;
      for (std::size_t k = j + 1; k < v.size(); ++k) {
        if (is_edge(i, k) && is_edge(j, k)) faces.push_back({v[i], v[j], v[k]});
      }
    }
  }
  return faces;
}

Vec3 centroid(const std::array<Vec3, 3>& f) {
  return normalize(add(add(f[0], f[1]), f[2]));
}

}  // namespace

SphereDirection SphereDirection::normalized(double longitude, double latitude) {
  if (!std::isfinite(longitude) || !std::isfinite(latitude)) {
    throw InvalidArgument("sphere direction must be finite");
  }
  double lon = std::fmod(longitude + kPi, 2.0 * kPi);
  if (lon < 0.0) lon += 2.0 * kPi;
  lon -= kPi;
  if (lon >= kPi) lon = -kPi;
  return {lon, std::clamp(latitude, -kPi / 2.0, kPi / 2.0)};
}

std::array<double, 3> SphereDirection::unit_vector() const {
  const double c = std::cos(latitude);
  return {c * std::cos(longitude), c * std::sin(longitude),
          std::sin(latitude)};
}

SphereDirection SphereDirection::from_vector(const std::array<double, 3>& v) {
  const Vec3 u = normalize(v);
  double lon = std::atan2(u[1], u[0]);
  if (lon >= kPi) lon = -kPi;
  return {lon, std::asin(std::clamp(u[2], -1.0, 1.0))};
}

double angular_distance(const SphereDirection& a, const SphereDirection& b) {
  return std::acos(std::clamp(dot(a.unit_vector(), b.unit_vector()), -1.0, 1.0));
}

void ViewportSpec::validate() const {
  if (!(fov > 0.0 && fov < kPi)) {
    throw InvalidArgument("viewport fov must lie in (0, pi)");
  }
  if (size < 8) throw InvalidArgument("viewport size must be at least 8");
}

bool is_supported_viewport_count(std::size_t n) {
  return n == 6 || n == 20 || n == 80;
}

std::vector<ViewportSpec> sample_viewports(std::size_t n_viewports) {
  std::vector<ViewportSpec> out;
  switch (n_viewports) {
    case 6:
      out.push_back(spec_at(0.0, 0.0));
      out.push_back(spec_at(kPi / 2.0, 0.0));
      out.push_back(spec_at(kPi, 0.0));  // wraps to -pi
      out.push_back(spec_at(-kPi / 2.0, 0.0));
      out.push_back(spec_at(0.0, kPi / 2.0));
      out.push_back(spec_at(0.0, -kPi / 2.0));
      break;
    case 20:
      for (const auto& f : icosahedron_faces()) {
        ViewportSpec s;
        s.center = SphereDirection::from_vector(centroid(f));
        out.push_back(s);
      }
      break;
    case 80:
      for (const auto& f : icosahedron_faces()) {
        const Vec3 ab = normalize(add(f[0], f[1]));
        const Vec3 bc = normalize(add(f[1], f[2]));
        const Vec3 ca = normalize(add(f[2], f[0]));
        const std::array<std::array<Vec3, 3>, 4> sub = {{{f[0], ab, ca},
                                                         {ab, f[1], bc},
                                                         {ca, bc, f[2]},
                                                         {ab, bc, ca}}};
        for (const auto& t : sub) {
          ViewportSpec s;
          s.center = SphereDirection::from_vector(centroid(t));
          out.push_back(s);
        }
      }
      break;
    default:
      throw InvalidArgument("unsupported viewport count " +
                            std::to_string(n_viewports) +
                            " (expected 6, 20 or 80)");
  }
  return out;
}

void require_equirectangular(const Raster& omni) {
  if (omni.empty() || omni.width() != 2 * omni.height()) {
    throw AspectError("equirectangular image must be 2:1, got " +
                      std::to_string(omni.width()) + "x" +
                      std::to_string(omni.height()));
  }
}

double sample_bilinear(const Raster& omni, const SphereDirection& dir) {
  const auto w = static_cast<long>(omni.width());
  const auto h = static_cast<long>(omni.height());
  const double fx = (dir.longitude + kPi) / (2.0 * kPi) * w - 0.5;
  const double fy = std::clamp((kPi / 2.0 - dir.latitude) / kPi * h - 0.5, 0.0,
                               static_cast<double>(h - 1));
  const double x0f = std::floor(fx);
  const double tx = fx - x0f;
  long x0 = static_cast<long>(x0f) % w;
  if (x0 < 0) x0 += w;
  const long x1 = (x0 + 1) % w;
  const auto y0 = static_cast<long>(std::floor(fy));
  const long y1 = std::min(y0 + 1, h - 1);
  const double ty = fy - static_cast<double>(y0);
  const auto r0 = omni.row(static_cast<std::size_t>(y0));
  const auto r1 = omni.row(static_cast<std::size_t>(y1));
  const double top = r0[x0] + tx * (r0[x1] - r0[x0]);
  const double bot = r1[x0] + tx * (r1[x1] - r1[x0]);
  return top + ty * (bot - top);
}

Raster render_viewport(const Raster& omni, const ViewportSpec& spec) {
  require_equirectangular(omni);
  spec.validate();
  const double lon0 = spec.center.longitude;
  const double lat0 = spec.center.latitude;
  const Vec3 forward = spec.center.unit_vector();
  const Vec3 right = {-std::sin(lon0), std::cos(lon0), 0.0};
  const Vec3 up = {-std::sin(lat0) * std::cos(lon0),
                   -std::sin(lat0) * std::sin(lon0), std::cos(lat0)};
  const double half = std::tan(spec.fov / 2.0);
  const std::size_t n = spec.size;
  const double inv = 1.0 / static_cast<double>(n);

  Raster out(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const double b = (1.0 - 2.0 * (static_cast<double>(j) + 0.5) * inv) * half;
    auto dst = out.row(j);
    for (std::size_t i = 0; i < n; ++i) {
      const double a =
          (2.0 * (static_cast<double>(i) + 0.5) * inv - 1.0) * half;
      const Vec3 ray = {forward[0] + a * right[0] + b * up[0],
                        forward[1] + a * right[1] + b * up[1],
                        forward[2] + a * right[2] + b * up[2]};
      dst[i] = sample_bilinear(omni, SphereDirection::from_vector(ray));
    }
  }
  return out;
}

std::vector<Raster> render_viewports(const Raster& omni,
                                     const std::vector<ViewportSpec>& specs) {
  require_equirectangular(omni);
  std::vector<Raster> out(specs.size());
  parallel_for(specs.size(),
               [&](std::size_t k) { out[k] = render_viewport(omni, specs[k]); });
  return out;
}

std::vector<SphereDirection> fibonacci_sphere(std::size_t n_points) {
  std::vector<SphereDirection> pts;
  pts.reserve(n_points);
  const double golden_angle = kPi * (3.0 - std::sqrt(5.0));
  const double n = static_cast<double>(n_points);
  for (std::size_t k = 0; k < n_points; ++k) {
    const double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / n;
    pts.push_back(SphereDirection::normalized(
        golden_angle * static_cast<double>(k), std::asin(z)));
  }
  return pts;
}

}  // namespace s2::sphere
