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

#include "s2/model_file.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "s2/binary_io.hpp"
#include "s2/error.hpp"

namespace s2 {

std::vector<std::uint8_t> encode_model(const svr::SvrModel& model) {
  const std::size_t dims = model.dims();
  if (model.scaling.max.size() != dims ||
      model.support_vectors.size() != model.dual_coeffs.size()) {
    throw InvalidArgument("encode_model: inconsistent model fields");
  }
  ByteWriter w;
  for (char c : kModelMagic) w.u8(static_cast<std::uint8_t>(c));
  w.u16(kModelFileVersion);
  w.str16(model.feature_tag);
  w.u32(static_cast<std::uint32_t>(dims));
  w.f64(model.params.c);
  w.f64(model.params.gamma);
  w.f64(model.params.epsilon);
  w.f64(model.bias);
  for (double v : model.scaling.min) w.f64(v);
  for (double v : model.scaling.max) w.f64(v);
  w.u32(static_cast<std::uint32_t>(model.support_vectors.size()));
  for (std::size_t k = 0; k < model.support_vectors.size(); ++k) {
    if (model.support_vectors[k].size() != dims) {
      throw InvalidArgument("encode_model: support vector dimension mismatch");
    }
    w.f64(model.dual_coeffs[k]);
    for (double v : model.support_vectors[k]) w.f64(v);
  }
  w.u32(crc32(w.data()));
  return w.release();
}

svr::SvrModel decode_model(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 ||
      !std::equal(kModelMagic, kModelMagic + 4, bytes.begin())) {
    throw SchemaError("not a model file (bad magic)");
  }
  if (bytes.size() < 10) throw CorruptFile("truncated model file");
  const auto body = bytes.first(bytes.size() - 4);
  ByteReader tail(bytes.last(4));
  if (crc32(body) != tail.u32()) {
    throw CorruptFile("model file checksum mismatch");
  }

  ByteReader r(body.subspan(4));
  const std::uint16_t version = r.u16();
  if (version != kModelFileVersion) {
    throw SchemaError("unsupported model file version " +
                      std::to_string(version));
  }
  svr::SvrModel m;
  m.feature_tag = r.str16();
  const std::size_t dims = r.u32();
  m.params.c = r.f64();
  m.params.gamma = r.f64();
  m.params.epsilon = r.f64();
  m.bias = r.f64();
  if (r.remaining() < dims * 16) throw CorruptFile("truncated model file");
  m.scaling.min.resize(dims);
  m.scaling.max.resize(dims);
  for (double& v : m.scaling.min) v = r.f64();
  for (double& v : m.scaling.max) v = r.f64();
  const std::size_t n_sv = r.u32();
  if (r.remaining() != n_sv * (dims + 1) * 8) {
    throw SchemaError("model declares " + std::to_string(n_sv) +
                      " support vectors of dimension " + std::to_string(dims) +
                      " but holds " + std::to_string(r.remaining()) +
                      " bytes");
  }
  m.support_vectors.reserve(n_sv);
  m.dual_coeffs.reserve(n_sv);
  for (std::size_t k = 0; k < n_sv; ++k) {
    m.dual_coeffs.push_back(r.f64());
    svr::Sample sv(dims);
    for (double& v : sv) v = r.f64();
    m.support_vectors.push_back(std::move(sv));
  }
  if (!(m.params.c > 0.0) || !(m.params.gamma > 0.0) ||
      !(m.params.epsilon >= 0.0) || !std::isfinite(m.bias)) {
    throw SchemaError("model file holds invalid hyperparameters");
  }
  return m;
}

svr::SvrModel read_model(const std::filesystem::path& path) {
  const auto bytes = read_file_bytes(path);
  try {
    return decode_model(bytes);
  } catch (const SchemaError& e) {
    throw SchemaError(path.string() + ": " + e.what());
  } catch (const CorruptFile& e) {
    throw CorruptFile(path.string() + ": " + e.what());
  }
}

void write_model(const std::filesystem::path& path,
                 const svr::SvrModel& model) {
  write_file_atomic(path, encode_model(model));
}

}  // namespace s2
