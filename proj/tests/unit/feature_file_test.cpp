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

#include <gtest/gtest.h>

#include <cstring>

#include "oracles/fixtures.hpp"
#include "s2/binary_io.hpp"
#include "s2/error.hpp"

namespace s2 {
namespace {

FeatureFile sample_file() {
  FeatureFile f;
  f.kind = FeatureKind::kStatistic;
  f.source_tag = "st:v6";
  f.payload = {1.5f, -0.25f, 3.0e-7f, 1e30f};
  return f;
}

TEST(FeatureFile, ExactByteLayout) {
  const auto bytes = encode_feature_file(sample_file());
  // magic 4 + version 2 + kind 1 + dim 4 + tag 2+5 + payload 16 + crc 4
  ASSERT_EQ(bytes.size(), 38u);
  EXPECT_EQ(std::memcmp(bytes.data(), "S2FV", 4), 0);
  EXPECT_EQ(bytes[4], 1);
  EXPECT_EQ(bytes[5], 0);
  EXPECT_EQ(bytes[6], 1);
  EXPECT_EQ(bytes[7], 4);
  EXPECT_EQ(bytes[11], 5);
  EXPECT_EQ(std::memcmp(bytes.data() + 13, "st:v6", 5), 0);
  // 1.5f = 0x3fc00000, little endian
  EXPECT_EQ(bytes[18], 0x00);
  EXPECT_EQ(bytes[21], 0x3f);
  const std::span<const std::uint8_t> payload(bytes.data() + 18, 16);
  ByteReader crc(std::span<const std::uint8_t>(bytes).subspan(34));
  EXPECT_EQ(crc.u32(), crc32(payload));
}

TEST(FeatureFile, RoundTripIsBitExact) {
  const FeatureFile f = sample_file();
  const auto bytes = encode_feature_file(f);
  const FeatureFile back = decode_feature_file(bytes);
  EXPECT_EQ(back, f);
  EXPECT_EQ(encode_feature_file(back), bytes);
}

TEST(FeatureFile, FlippedPayloadByteIsCorrupt) {
  auto bytes = encode_feature_file(sample_file());
  bytes[20] ^= 0x01;
  EXPECT_THROW(decode_feature_file(bytes), CorruptFile);
}

TEST(FeatureFile, HeaderViolations) {
  auto bytes = encode_feature_file(sample_file());
  auto bad = bytes;
  bad[0] = 'X';
  EXPECT_THROW(decode_feature_file(bad), SchemaError);
  bad = bytes;
  bad[4] = 2;
  EXPECT_THROW(decode_feature_file(bad), SchemaError);
  bad = bytes;
  bad[6] = 9;
  EXPECT_THROW(decode_feature_file(bad), SchemaError);
  bad = bytes;
  bad[7] = 5;  // declares one entry more than stored
  EXPECT_THROW(decode_feature_file(bad), SchemaError);
  bad = bytes;
  bad.resize(9);
  EXPECT_THROW(decode_feature_file(bad), SchemaError);
  bad = bytes;
  bad.push_back(0);
  EXPECT_THROW(decode_feature_file(bad), SchemaError);
}

TEST(FeatureFile, DiskRoundTrip) {
  testing::TempDir dir;
  write_feature_file(dir / "a.s2fv", sample_file());
  EXPECT_EQ(read_feature_file(dir / "a.s2fv"), sample_file());
  EXPECT_THROW(read_feature_file(dir / "none.s2fv"), IoError);
  auto bytes = encode_feature_file(sample_file());
  bytes[25] ^= 0x80;
  write_file_atomic(dir / "b.s2fv", bytes);
  try {
    read_feature_file(dir / "b.s2fv");
    FAIL();
  } catch (const CorruptFile& e) {
    EXPECT_NE(std::string(e.what()).find("b.s2fv"), std::string::npos);
  }
}

TEST(FeatureFile, EmptyPayload) {
  FeatureFile f;
  f.kind = FeatureKind::kLogits;
  EXPECT_EQ(decode_feature_file(encode_feature_file(f)), f);
}

}  // namespace
}  // namespace s2
