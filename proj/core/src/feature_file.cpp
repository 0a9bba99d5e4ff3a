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

#include "s2/feature_file.hpp"

#include <algorithm>

#include "s2/binary_io.hpp"
#include "s2/error.hpp"

namespace s2 {

std::vector<std::uint8_t> encode_feature_file(const FeatureFile& file) {
  ByteWriter w;
  for (char c : kFeatureMagic) w.u8(static_cast<std::uint8_t>(c));
  w.u16(kFeatureFileVersion);
  w.u8(static_cast<std::uint8_t>(file.kind));
  w.u32(static_cast<std::uint32_t>(file.payload.size()));
  w.str16(file.source_tag);
  const std::size_t payload_begin = w.size();
  for (float v : file.payload) w.f32(v);
  const auto crc = crc32(std::span(w.data()).subspan(payload_begin));
  w.u32(crc);
  return w.release();
}

FeatureFile decode_feature_file(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || !std::equal(kFeatureMagic, kFeatureMagic + 4,
                                      bytes.begin())) {
    throw SchemaError("not a feature file (bad magic)");
  }
  ByteReader r(bytes.subspan(4));
  FeatureFile f;
  std::uint32_t dim = 0;
  try {
    const std::uint16_t version = r.u16();
    if (version != kFeatureFileVersion) {
      throw SchemaError("unsupported feature file version " +
                        std::to_string(version));
    }
    const std::uint8_t kind = r.u8();
    if (kind < 1 || kind > 3) {
      throw SchemaError("unknown feature kind " + std::to_string(kind));
    }
    f.kind = static_cast<FeatureKind>(kind);
    dim = r.u32();
    f.source_tag = r.str16();
  } catch (const CorruptFile& e) {
    throw SchemaError(std::string("truncated feature header: ") + e.what());
  }
  const std::size_t expected = std::size_t{dim} * 4 + 4;
  if (r.remaining() != expected) {
    throw SchemaError("declared dim " + std::to_string(dim) + " needs " +
                      std::to_string(expected) + " bytes of payload+checksum, found " +
                      std::to_string(r.remaining()));
  }
  const auto payload = r.bytes(std::size_t{dim} * 4);
  const std::uint32_t stored = r.u32();
  if (crc32(payload) != stored) {
    throw CorruptFile("feature payload checksum mismatch");
  }
  ByteReader pr(payload);
  f.payload.resize(dim);
  for (auto& v : f.payload) v = pr.f32();
  return f;
}

FeatureFile read_feature_file(const std::filesystem::path& path) {
  const auto bytes = read_file_bytes(path);
  try {
    return decode_feature_file(bytes);
  } catch (const SchemaError& e) {
    throw SchemaError(path.string() + ": " + e.what());
  } catch (const CorruptFile& e) {
    throw CorruptFile(path.string() + ": " + e.what());
  }
}

void write_feature_file(const std::filesystem::path& path,
                        const FeatureFile& file) {
  write_file_atomic(path, encode_feature_file(file));
}

}  // namespace s2
