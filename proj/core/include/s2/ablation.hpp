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

#ifndef S2_ABLATION_HPP_
#define S2_ABLATION_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "s2/manifest.hpp"
#include "s2/protocol.hpp"
#include "s2/stat_features.hpp"

namespace s2::eval {

// Variant names:
//   GP1 GP2 GP3 GP LP1 LP2 LP St  statistic path on a feature subset
//   Se                            semantic path
//   All                           both paths, all statistic features
//   V6 V20 V80                    St with that many viewports
//   tag:<name>                    Se using the extractor tagged <name>
struct AblationVariant {
  std::string name;
  PathSelection paths = PathSelection::kStatistic;
  std::vector<stat::FeatureBlock> blocks;  // statistic columns in use
  std::size_t viewports = 0;               // 0 = configured default
  std::string semantic_tag;                // empty = configured default
};

// Throws InvalidArgument for an unknown name.
AblationVariant parse_variant(const std::string& name);

std::size_t stat_dims(const AblationVariant& v);

struct AblationRow {
  std::string variant;
  std::size_t st_dims = 0;
  std::size_t se_dims = 0;
  EvalReport report;
};

// Supplies a dataset with all statistic columns for `viewports` (0 = no
// statistic features) and semantic features for `semantic_tag` (empty = no
// semantic features). Results are cached per viewport count and per tag.
using DatasetLoader = std::function<Dataset(std::size_t viewports,
                                            const std::string& semantic_tag)>;

std::vector<AblationRow> run_ablation(const DatasetLoader& loader,
                                      const DatasetOptions& defaults,
                                      const ProtocolConfig& config,
                                      const std::vector<std::string>& variants);

std::vector<AblationRow> run_ablation(const DatasetManifest& manifest,
                                      const DatasetOptions& defaults,
                                      const ProtocolConfig& config,
                                      const std::vector<std::string>& variants);

}  // namespace s2::eval

#endif  // S2_ABLATION_HPP_
