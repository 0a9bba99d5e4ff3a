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

#include "s2/ablation.hpp"

#include <map>
#include <utility>

#include "s2/error.hpp"

namespace s2::eval {

AblationVariant parse_variant(const std::string& name) {
  using stat::gp_block;
  using stat::lp_block;
  AblationVariant v;
  v.name = name;
  const stat::FeatureBlock all_gp{0, stat::kGpDims};
  const stat::FeatureBlock all_lp{stat::kGpDims, stat::kStatDims};
  const stat::FeatureBlock all{0, stat::kStatDims};

  if (name == "GP1" || name == "GP2" || name == "GP3") {
    v.blocks = {gp_block(static_cast<std::size_t>(name[2] - '1'))};
  } else if (name == "LP1" || name == "LP2") {
    v.blocks = {lp_block(static_cast<std::size_t>(name[2] - '1'))};
  } else if (name == "GP") {
    v.blocks = {all_gp};
  } else if (name == "LP") {
    v.blocks = {all_lp};
  } else if (name == "St") {
    v.blocks = {all};
  } else if (name == "Se") {
    v.paths = PathSelection::kSemantic;
  } else if (name == "All") {
    v.paths = PathSelection::kFused;
    v.blocks = {all};
  } else if (name == "V6" || name == "V20" || name == "V80") {
    v.blocks = {all};
    v.viewports = static_cast<std::size_t>(std::stoul(name.substr(1)));
  } else if (name.rfind("tag:", 0) == 0 && name.size() > 4) {
    v.paths = PathSelection::kSemantic;
    v.semantic_tag = name.substr(4);
  } else {
    throw InvalidArgument("unknown ablation variant '" + name + "'");
  }
  return v;
}

std::size_t stat_dims(const AblationVariant& v) {
  std::size_t d = 0;
  for (const auto& b : v.blocks) d += b.size();
  return d;
}

std::vector<AblationRow> run_ablation(const DatasetLoader& loader,
                                      const DatasetOptions& defaults,
                                      const ProtocolConfig& config,
                                      const std::vector<std::string>& variants) {
  std::vector<AblationVariant> parsed;
  for (const auto& name : variants) parsed.push_back(parse_variant(name));

  std::map<std::size_t, Dataset> stat_cache;
  std::map<std::string, Dataset> sem_cache;
  std::vector<AblationRow> rows;
  for (const auto& v : parsed) {
    const bool statistic = v.paths != PathSelection::kSemantic;
    const bool semantic = v.paths != PathSelection::kStatistic;
    Dataset data;
    if (statistic) {
      const std::size_t viewports =
          v.viewports ? v.viewports : defaults.viewports;
      auto it = stat_cache.find(viewports);
      if (it == stat_cache.end()) {
        it = stat_cache.emplace(viewports, loader(viewports, "")).first;
      }
      data = v.blocks.empty() ? it->second
                              : select_stat_columns(it->second, v.blocks);
    }
    if (semantic) {
      const std::string tag =
          v.semantic_tag.empty() ? defaults.semantic_tag : v.semantic_tag;
      auto it = sem_cache.find(tag);
      if (it == sem_cache.end()) it = sem_cache.emplace(tag, loader(0, tag)).first;
      if (statistic) {
        data.semantic = it->second.semantic;
        data.semantic_tag = it->second.semantic_tag;
      } else {
        data = it->second;
      }
    }

    ProtocolConfig cfg = config;
    cfg.paths = v.paths;
    AblationRow row;
    row.variant = v.name;
    row.st_dims = statistic ? stat_dims(v) : 0;
    row.se_dims = semantic && data.has_semantic() ? data.semantic.front().size()
                                                  : 0;
    row.report = run_protocol(data, cfg);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<AblationRow> run_ablation(const DatasetManifest& manifest,
                                      const DatasetOptions& defaults,
                                      const ProtocolConfig& config,
                                      const std::vector<std::string>& variants) {
  const DatasetLoader loader = [&](std::size_t viewports,
                                   const std::string& tag) {
    DatasetOptions o = defaults;
    o.viewports = viewports;
    o.semantic_tag = tag;
    o.semantic = !tag.empty();
    o.statistic = viewports != 0;
    o.per_viewport = config.pooling == Pooling::kScoreMean;
    return load_dataset(manifest, o);
  };
  return run_ablation(loader, defaults, config, variants);
}

}  // namespace s2::eval
