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

// Binary SVR model files. All reals are little-endian IEEE-754 doubles:
//
//   "S2SM" | u16 version | str16 feature_tag | u32 dims
//   | f64 c | f64 gamma | f64 epsilon | f64 bias
//   | dims x f64 scale_min | dims x f64 scale_max
//   | u32 n_sv | n_sv x (f64 coeff | dims x f64 vector)
//   | u32 CRC-32 of every preceding byte

#ifndef S2_MODEL_FILE_HPP_
#define S2_MODEL_FILE_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "s2/svr.hpp"

namespace s2 {

inline constexpr char kModelMagic[4] = {'S', '2', 'S', 'M'};
inline constexpr std::uint16_t kModelFileVersion = 1;

std::vector<std::uint8_t> encode_model(const svr::SvrModel& model);

// Throws SchemaError for a bad magic, an unknown version or inconsistent
// fields, and CorruptFile for a checksum mismatch or truncation.
svr::SvrModel decode_model(std::span<const std::uint8_t> bytes);

svr::SvrModel read_model(const std::filesystem::path& path);
void write_model(const std::filesystem::path& path, const svr::SvrModel& model);

}  // namespace s2

#endif  // S2_MODEL_FILE_HPP_
