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

// Semantic-path inputs. Deep features are computed by an external extractor
// that resizes the whole equirectangular image to the network input size and
// writes the first fully connected layer (4096) and the class logits (1000)
// as feature files. This module only validates and consumes them.

#ifndef S2_SEMANTIC_HPP_
#define S2_SEMANTIC_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "s2/feature_file.hpp"

namespace s2::sem {

inline constexpr std::size_t kFc1Dims = 4096;
inline constexpr std::size_t kLogitDims = 1000;

struct SemanticFeatureVector {
  std::vector<double> fc1;                    // kFc1Dims
  std::optional<std::vector<double>> logits;  // kLogitDims when present
  std::string source_tag;                     // extractor architecture
};

// Validates kind, dimension and finiteness. Throws SchemaError on a
// dimension/kind mismatch or non-finite entry.
SemanticFeatureVector semantic_from_file(const FeatureFile& fc1);
std::vector<double> logits_from_file(const FeatureFile& logits);

// Reads a kind-2 file and, optionally, the matching kind-3 logits file.
// Throws SchemaError (wrong kind/dim), CorruptFile (checksum) or IoError.
SemanticFeatureVector load_semantic_features(
    const std::filesystem::path& fc1_path,
    const std::optional<std::filesystem::path>& logits_path = std::nullopt);

FeatureFile to_feature_file(std::span<const double> values, FeatureKind kind,
                            const std::string& source_tag);

// Largest softmax probability, computed after subtracting the max logit.
// Throws InvalidArgument for empty or non-finite input.
double semantic_confidence(std::span<const double> logits);

}  // namespace s2::sem

#endif  // S2_SEMANTIC_HPP_
