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

#include "s2/binary_io.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "oracles/fixtures.hpp"
#include "s2/error.hpp"

namespace s2 {
namespace {

TEST(BinaryIo, Crc32CheckValue) {
  const std::string s = "123456789";
  const std::vector<std::uint8_t> b(s.begin(), s.end());
  EXPECT_EQ(crc32(b), 0xCBF43926u);
  EXPECT_EQ(crc32({}), 0u);
}

TEST(BinaryIo, LittleEndianLayout) {
  ByteWriter w;
  w.u16(0x0102);
  w.u32(0x03040506);
  w.f32(1.0f);
  const auto& d = w.data();
  ASSERT_EQ(d.size(), 10u);
  EXPECT_EQ(d[0], 0x02);
  EXPECT_EQ(d[1], 0x01);
  EXPECT_EQ(d[2], 0x06);
  EXPECT_EQ(d[5], 0x03);
  // 1.0f = 0x3f800000
  EXPECT_EQ(d[8], 0x80);
  EXPECT_EQ(d[9], 0x3f);
}

TEST(BinaryIo, RoundTripAllWidths) {
  ByteWriter w;
  w.u8(7);
  w.u16(65535);
  w.u32(0xdeadbeef);
  w.u64(0x0123456789abcdefULL);
  w.f32(-2.5f);
  w.f64(std::nextafter(1.0, 2.0));
  w.str16("tag: vgg-m");
  ByteReader r(w.data());
  EXPECT_EQ(r.u8(), 7);
  EXPECT_EQ(r.u16(), 65535);
  EXPECT_EQ(r.u32(), 0xdeadbeefu);
  EXPECT_EQ(r.u64(), 0x0123456789abcdefULL);
  EXPECT_EQ(r.f32(), -2.5f);
  EXPECT_EQ(r.f64(), std::nextafter(1.0, 2.0));
  EXPECT_EQ(r.str16(), "tag: vgg-m");
  EXPECT_EQ(r.remaining(), 0u);
}

TEST(BinaryIo, ReadPastEndIsCorrupt) {
  const std::vector<std::uint8_t> b = {1, 2, 3};
  ByteReader r(b);
  EXPECT_THROW(r.u32(), CorruptFile);
}

TEST(BinaryIo, AtomicWriteLeavesNoTemporaries) {
  testing::TempDir dir;
  write_file_atomic(dir / "out.txt", std::string_view("hello"));
  write_file_atomic(dir / "out.txt", std::string_view("again"));
  EXPECT_EQ(testing::slurp(dir / "out.txt"), "again");
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir.path())) ++files;
  EXPECT_EQ(files, 1u);
  EXPECT_THROW(read_file_bytes(dir / "nope"), IoError);
  EXPECT_THROW(write_file_atomic(dir / "no/such/dir/x", std::string_view("x")), IoError);
}

}  // namespace
}  // namespace s2
