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

#include "s2/semantic.hpp"

#include <algorithm>
#include <cmath>

#include "s2/error.hpp"

namespace s2::sem {

namespace {

std::vector<double> checked_payload(const FeatureFile& f, FeatureKind kind,
                                    std::size_t dims, const char* what) {
  if (f.kind != kind) {
    throw SchemaError(std::string(what) + ": unexpected feature kind " +
                      std::to_string(static_cast<int>(f.kind)));
  }
  if (f.payload.size() != dims) {
    throw SchemaError(std::string(what) + ": expected " + std::to_string(dims) +
                      " entries, file declares " +
                      std::to_string(f.payload.size()));
  }
  std::vector<double> out(f.payload.begin(), f.payload.end());
  if (!std::all_of(out.begin(), out.end(),
                   [](double v) { return std::isfinite(v); })) {
    throw SchemaError(std::string(what) + ": non-finite entry");
  }
  return out;
}

}  // namespace

SemanticFeatureVector semantic_from_file(const FeatureFile& fc1) {
  SemanticFeatureVector v;
  v.fc1 = checked_payload(fc1, FeatureKind::kSemanticFc1, kFc1Dims, "fc1");
  v.source_tag = fc1.source_tag;
  return v;
}

std::vector<double> logits_from_file(const FeatureFile& logits) {
  return checked_payload(logits, FeatureKind::kLogits, kLogitDims, "logits");
}

SemanticFeatureVector load_semantic_features(
    const std::filesystem::path& fc1_path,
    const std::optional<std::filesystem::path>& logits_path) {
  SemanticFeatureVector v;
  try {
    v = semantic_from_file(read_feature_file(fc1_path));
  } catch (const SchemaError& e) {
    throw SchemaError(fc1_path.string() + ": " + e.what());
  }
  if (logits_path) {
    try {
      v.logits = logits_from_file(read_feature_file(*logits_path));
    } catch (const SchemaError& e) {
      throw SchemaError(logits_path->string() + ": " + e.what());
    }
  }
  return v;
}

FeatureFile to_feature_file(std::span<const double> values, FeatureKind kind,
                            const std::string& source_tag) {
  FeatureFile f;
  f.kind = kind;
  f.source_tag = source_tag;
  f.payload.assign(values.begin(), values.end());
  return f;
}

double semantic_confidence(std::span<const double> logits) {
  if (logits.empty()) throw InvalidArgument("semantic_confidence: no logits");
  if (!std::all_of(logits.begin(), logits.end(),
                   [](double v) { return std::isfinite(v); })) {
    throw InvalidArgument("semantic_confidence: non-finite logit");
  }
  const double top = *std::max_element(logits.begin(), logits.end());
  double denom = 0.0;
  for (double z : logits) denom += std::exp(z - top);
  // The max term contributes exp(0) = 1 to the denominator.
  return 1.0 / denom;
}

}  // namespace s2::sem
