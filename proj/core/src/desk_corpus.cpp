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

#include "s2/desk_corpus.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "s2/error.hpp"
#include "s2/feature_file.hpp"
#include "s2/image_io.hpp"
#include "s2/parallel.hpp"
#include "s2/semantic.hpp"

namespace s2::desk {

namespace {

constexpr std::array<int, 64> kLumaTable = {
    16, 11, 10, 16, 24,  40,  51,  61,  12, 12, 14, 19, 26,  58,  60,  55,
    14, 13, 16, 24, 40,  57,  69,  56,  14, 17, 22, 29, 51,  87,  80,  62,
    18, 22, 37, 56, 68,  109, 103, 77,  24, 35, 55, 64, 81,  104, 113, 92,
    49, 64, 78, 87, 103, 121, 120, 101, 72, 92, 95, 98, 112, 100, 103, 99};

constexpr std::size_t kLatentContent = 8;

std::array<double, 64> dct_basis() {
  std::array<double, 64> c{};
  for (int k = 0; k < 8; ++k) {
    const double a = k == 0 ? std::sqrt(1.0 / 8.0) : std::sqrt(2.0 / 8.0);
    for (int n = 0; n < 8; ++n) {
      c[k * 8 + n] = a * std::cos((2 * n + 1) * k * std::numbers::pi / 16.0);
    }
  }
  return c;
}

}  // namespace

double proxy_mos(int quality) {
  if (quality < 1 || quality > 100) {
    throw InvalidArgument("quality must lie in [1, 100]");
  }
  // Saturating curve: large steps at low quality, small near the top.
  return 10.0 + 80.0 * (1.0 - std::exp(-static_cast<double>(quality) / 25.0)) /
                    (1.0 - std::exp(-4.0));
}

std::vector<int> luma_quant_table(int quality) {
  if (quality < 1 || quality > 100) {
    throw InvalidArgument("quality must lie in [1, 100]");
  }
  const int scale = quality < 50 ? 5000 / quality : 200 - 2 * quality;
  std::vector<int> q(64);
  for (std::size_t k = 0; k < 64; ++k) {
    q[k] = std::clamp((kLumaTable[k] * scale + 50) / 100, 1, 255);
  }
  return q;
}

Raster jpeg_like(const Raster& src, int quality) {
  const auto q = luma_quant_table(quality);
  static const std::array<double, 64> c = dct_basis();
  const std::size_t w = src.width(), h = src.height();
  Raster out(w, h);
  std::array<double, 64> block{}, tmp{}, coef{};
  for (std::size_t by = 0; by < h; by += 8) {
    for (std::size_t bx = 0; bx < w; bx += 8) {
      for (std::size_t y = 0; y < 8; ++y) {
        for (std::size_t x = 0; x < 8; ++x) {
          block[y * 8 + x] =
              src.at(std::min(bx + x, w - 1), std::min(by + y, h - 1)) - 128.0;
        }
      }
      // Forward transform: coef = C * block * C^T.
      for (std::size_t k = 0; k < 8; ++k) {
        for (std::size_t x = 0; x < 8; ++x) {
          double s = 0.0;
          for (std::size_t n = 0; n < 8; ++n) s += c[k * 8 + n] * block[n * 8 + x];
          tmp[k * 8 + x] = s;
        }
      }
      for (std::size_t k = 0; k < 8; ++k) {
        for (std::size_t l = 0; l < 8; ++l) {
          double s = 0.0;
          for (std::size_t n = 0; n < 8; ++n) s += tmp[k * 8 + n] * c[l * 8 + n];
          coef[k * 8 + l] = std::round(s / q[k * 8 + l]) * q[k * 8 + l];
        }
      }
      // Inverse: block = C^T * coef * C.
      for (std::size_t n = 0; n < 8; ++n) {
        for (std::size_t l = 0; l < 8; ++l) {
          double s = 0.0;
          for (std::size_t k = 0; k < 8; ++k) s += c[k * 8 + n] * coef[k * 8 + l];
          tmp[n * 8 + l] = s;
        }
      }
      for (std::size_t y = 0; y < 8 && by + y < h; ++y) {
        for (std::size_t x = 0; x < 8 && bx + x < w; ++x) {
          double s = 0.0;
          for (std::size_t l = 0; l < 8; ++l) s += tmp[y * 8 + l] * c[l * 8 + x];
          out.at(bx + x, by + y) = std::clamp(std::round(s + 128.0), 0.0, 255.0);
        }
      }
    }
  }
  return out;
}

Raster pristine_scene(std::size_t width, std::uint64_t seed) {
  if (width < 16 || width % 2 != 0) {
    throw InvalidArgument("scene width must be even and >= 16");
  }
  const std::size_t height = width / 2;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double pi = std::numbers::pi;

  // Smooth background: sinusoids with integer horizontal frequency so the
  // field wraps around in longitude, amplitude falling as 1/f.
  struct Wave {
    double fx, fy, phase, amp;
  };
  std::vector<Wave> waves;
  for (int k = 0; k < 24; ++k) {
    const double fx = std::floor(1.0 + unit(rng) * 24.0);
    const double fy = 0.5 + unit(rng) * 12.0;
    waves.push_back({fx, fy, unit(rng) * 2.0 * pi,
                     1.0 / std::hypot(fx, fy)});
  }
  Raster img(width, height);
  for (std::size_t y = 0; y < height; ++y) {
    const double v = (y + 0.5) / static_cast<double>(height);
    for (std::size_t x = 0; x < width; ++x) {
      const double u = (x + 0.5) / static_cast<double>(width);
      double s = 0.0;
      for (const auto& wv : waves) {
        s += wv.amp * std::sin(2.0 * pi * (wv.fx * u) + pi * wv.fy * v + wv.phase);
      }
      img.at(x, y) = s;
    }
  }
  double lo = img.pixels()[0], hi = lo;
  for (double p : img.pixels()) {
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  for (double& p : img.pixels()) p = 40.0 + 150.0 * (p - lo) / (hi - lo);

  // Hard-edged objects.
  for (int k = 0; k < 40; ++k) {
    const double cx = unit(rng) * width;
    const double cy = (0.15 + 0.7 * unit(rng)) * height;
    const double r = (0.01 + 0.05 * unit(rng)) * width;
    const double level = 20.0 + 215.0 * unit(rng);
    const bool disc = unit(rng) < 0.5;
    const auto y0 = static_cast<std::ptrdiff_t>(std::floor(cy - r));
    const auto y1 = static_cast<std::ptrdiff_t>(std::ceil(cy + r));
    const auto x0 = static_cast<std::ptrdiff_t>(std::floor(cx - r));
    const auto x1 = static_cast<std::ptrdiff_t>(std::ceil(cx + r));
    for (auto y = std::max<std::ptrdiff_t>(y0, 0);
         y <= std::min<std::ptrdiff_t>(y1, static_cast<std::ptrdiff_t>(height) - 1);
         ++y) {
      for (auto xx = x0; xx <= x1; ++xx) {
        const double dx = xx + 0.5 - cx, dy = y + 0.5 - cy;
        const bool inside = disc ? dx * dx + dy * dy <= r * r
                                 : std::abs(dx) <= r && std::abs(dy) <= 0.6 * r;
        if (!inside) continue;
        const auto x = static_cast<std::size_t>(
            (xx % static_cast<std::ptrdiff_t>(width) +
             static_cast<std::ptrdiff_t>(width)) %
            static_cast<std::ptrdiff_t>(width));
        img.at(x, static_cast<std::size_t>(y)) = level;
      }
    }
  }

  // Fine texture that coarse quantization removes.
  const double grain = 3.0 + 5.0 * unit(rng);
  for (double& p : img.pixels()) {
    p = std::clamp(std::round(p + grain * gauss(rng)), 0.0, 255.0);
  }
  return img;
}

std::vector<DeskImage> generate_desk_corpus(const DeskCorpusOptions& options) {
  if (options.sources < 1 || options.qualities.empty()) {
    throw InvalidArgument("desk corpus needs at least one source and level");
  }
  const std::size_t n_q = options.qualities.size();
  std::vector<DeskImage> out(options.sources * n_q);

  std::mt19937_64 meta(options.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> noise(-options.mos_noise,
                                               options.mos_noise);

  // Shared random projection for the stand-in fc1 features.
  const std::size_t latent = 1 + kLatentContent + 4;
  std::vector<double> proj(sem::kFc1Dims * latent), bias(sem::kFc1Dims);
  if (options.semantic) {
    for (double& p : proj) p = gauss(meta) / std::sqrt(static_cast<double>(latent));
    for (double& b : bias) b = 0.3 * gauss(meta);
  }

  for (std::size_t s = 0; s < options.sources; ++s) {
    const std::string id = "src" + std::to_string(s);
    std::vector<double> content(kLatentContent);
    for (double& c : content) c = gauss(meta);
    const std::size_t cls = static_cast<std::size_t>(meta() % sem::kLogitDims);
    for (std::size_t k = 0; k < n_q; ++k) {
      DeskImage& d = out[s * n_q + k];
      d.source_id = id;
      d.quality = options.qualities[k];
      d.mos = std::clamp(proxy_mos(d.quality) + noise(meta), 0.0, 100.0);
      if (options.semantic) {
        const double strength =
            std::log(static_cast<double>(d.quality)) / std::log(100.0);
        std::vector<double> z = {2.0 * strength - 1.0};
        z.insert(z.end(), content.begin(), content.end());
        for (int e = 0; e < 4; ++e) z.push_back(0.5 * gauss(meta));
        d.fc1.resize(sem::kFc1Dims);
        for (std::size_t j = 0; j < sem::kFc1Dims; ++j) {
          double a = bias[j];
          for (std::size_t t = 0; t < latent; ++t) a += proj[j * latent + t] * z[t];
          d.fc1[j] = std::max(0.0, a);
        }
        d.logits.resize(sem::kLogitDims);
        for (double& l : d.logits) l = gauss(meta);
        d.logits[cls] += 2.0 + 8.0 * strength;
      }
    }
  }

  // Rendering is the expensive part; each slot is written by one task.
  parallel_for(options.sources, [&](std::size_t s) {
    const Raster ref = pristine_scene(options.width, options.seed * 7919 + s + 1);
    for (std::size_t k = 0; k < n_q; ++k) {
      out[s * n_q + k].image = jpeg_like(ref, options.qualities[k]);
    }
  });
  return out;
}

DatasetManifest write_desk_corpus(const std::filesystem::path& dir,
                                  const DeskCorpusOptions& options) {
  std::filesystem::create_directories(dir / "img");
  if (options.semantic) std::filesystem::create_directories(dir / "sem");
  const auto images = generate_desk_corpus(options);
  DatasetManifest m;
  m.base_dir = dir;
  for (const auto& d : images) {
    const std::string stem = d.source_id + "_q" + std::to_string(d.quality);
    ManifestEntry e;
    e.image_path = "img/" + stem + ".png";
    e.mos = d.mos;
    e.source_id = d.source_id;
    e.distortion = Distortion::kJpeg;
    write_image(d.image, dir / e.image_path);
    if (options.semantic) {
      e.semantic_feature_path = "sem/" + stem + ".{tag}.fc1.s2fv";
      const std::string base = "sem/" + stem + "." + options.semantic_tag;
      write_feature_file(dir / (base + ".fc1.s2fv"),
                         sem::to_feature_file(d.fc1, FeatureKind::kSemanticFc1,
                                              options.semantic_tag));
      write_feature_file(dir / (base + ".logits.s2fv"),
                         sem::to_feature_file(d.logits, FeatureKind::kLogits,
                                              options.semantic_tag));
    }
    m.entries.push_back(std::move(e));
  }
  write_manifest(dir / "manifest.s2m", m);
  return m;
}

}  // namespace s2::desk
