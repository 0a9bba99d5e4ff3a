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

// Synthetic desk-scale corpus: procedurally generated equirectangular
// scenes, a JPEG-style block-DCT quantizer, a proxy MOS that falls with the
// quality factor, and stand-in semantic features with the extractor's arity.

#ifndef S2_DESK_CORPUS_HPP_
#define S2_DESK_CORPUS_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "s2/manifest.hpp"
#include "s2/raster.hpp"

namespace s2::desk {

struct DeskCorpusOptions {
  std::size_t sources = 10;
  std::vector<int> qualities = {90, 60, 40, 25, 12, 5};
  std::size_t width = 1024;  // height is width / 2
  std::uint64_t seed = 2024;
  // Uniform noise in [-mos_noise, mos_noise] added to the proxy MOS.
  double mos_noise = 2.0;
  bool semantic = true;
  std::string semantic_tag = "synthetic";
};

struct DeskImage {
  Raster image;
  std::string source_id;
  int quality = 0;  // 0 for the pristine reference
  double mos = 0.0;
  std::vector<double> fc1;
  std::vector<double> logits;
};

// Noise-free proxy MOS in [0, 100], strictly increasing in quality (1..100).
double proxy_mos(int quality);

// Standard luminance quantization table scaled for a quality factor in
// [1, 100], as in the reference JPEG encoder.
std::vector<int> luma_quant_table(int quality);

// 8x8 block DCT, quantization, dequantization and inverse DCT with the
// output rounded to integers in [0, 255]. Partial edge blocks replicate the
// last row/column.
Raster jpeg_like(const Raster& src, int quality);

Raster pristine_scene(std::size_t width, std::uint64_t seed);

// Distorted images only (one per source and quality), in source-major order.
std::vector<DeskImage> generate_desk_corpus(const DeskCorpusOptions& options);

// Writes images (PNG), semantic feature files and "manifest.s2m" into `dir`.
// Semantic paths use the "{tag}" placeholder. Returns the manifest.
DatasetManifest write_desk_corpus(const std::filesystem::path& dir,
                                  const DeskCorpusOptions& options);

}  // namespace s2::desk

#endif  // S2_DESK_CORPUS_HPP_
