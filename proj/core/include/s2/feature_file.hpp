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

// Binary feature vector file, shared with external extractors.
//
//   offset  size  field
//   0       4     magic "S2FV"
//   4       2     version (u16, currently 1)
//   6       1     kind (u8): 1 statistic, 2 semantic FC1, 3 class logits
//   7       4     dim (u32)
//   11      2+n   source tag: u16 byte length, then UTF-8 bytes
//   ...     4*dim payload: IEEE-754 binary32
//   ...     4     CRC-32 (zlib polynomial) of the payload bytes
//
// All integers and floats are little-endian.

#ifndef S2_FEATURE_FILE_HPP_
#define S2_FEATURE_FILE_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace s2 {

inline constexpr char kFeatureMagic[4] = {'S', '2', 'F', 'V'};
inline constexpr std::uint16_t kFeatureFileVersion = 1;

enum class FeatureKind : std::uint8_t {
  kStatistic = 1,
  kSemanticFc1 = 2,
  kLogits = 3,
};

struct FeatureFile {
  FeatureKind kind = FeatureKind::kStatistic;
  std::string source_tag;
  std::vector<float> payload;

  friend bool operator==(const FeatureFile&, const FeatureFile&) = default;
};

std::vector<std::uint8_t> encode_feature_file(const FeatureFile& file);

// Throws SchemaError for a bad magic, unknown version or kind, or a dim that
// disagrees with the payload length; CorruptFile when the checksum fails.
FeatureFile decode_feature_file(std::span<const std::uint8_t> bytes);

FeatureFile read_feature_file(const std::filesystem::path& path);
void write_feature_file(const std::filesystem::path& path,
                        const FeatureFile& file);

}  // namespace s2

#endif  // S2_FEATURE_FILE_HPP_
