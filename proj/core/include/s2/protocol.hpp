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

// Repeated random-split evaluation. Each repeat draws an 80/20 split, trains
// one SVR per active path with grid search on the training fold, picks the
// fusion weight on out-of-fold training predictions, and scores the test
// fold. Medians across repeats form the report.

#ifndef S2_PROTOCOL_HPP_
#define S2_PROTOCOL_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "s2/grid_search.hpp"
#include "s2/logistic.hpp"
#include "s2/manifest.hpp"
#include "s2/stat_features.hpp"
#include "s2/svr.hpp"

namespace s2::eval {

inline constexpr std::size_t kMinProtocolImages = 10;
inline constexpr std::size_t kDefaultRepeats = 100;

enum class PathSelection { kStatistic, kSemantic, kFused };
// kContent keeps every distortion of a source on one side of the split.
enum class SplitMode { kContent, kImage };
// kScoreMean trains on individual viewports and averages their predictions.
enum class Pooling { kFeatureMean, kScoreMean };

const char* path_name(PathSelection p);
const char* split_name(SplitMode s);
const char* pooling_name(Pooling p);
// Throw InvalidArgument for unknown names.
PathSelection parse_path(const std::string& s);
SplitMode parse_split(const std::string& s);
Pooling parse_pooling(const std::string& s);

struct Dataset {
  std::vector<double> mos;
  std::vector<std::string> source_id;
  // One pooled statistic row per image; empty when the path is not loaded.
  svr::SampleSet stat;
  // Per-image viewport rows, only filled when score-mean pooling is needed.
  std::vector<svr::SampleSet> stat_viewports;
  svr::SampleSet semantic;
  std::size_t viewports = 0;
  std::string semantic_tag;

  std::size_t size() const { return mos.size(); }
  bool has_stat() const { return !stat.empty(); }
  bool has_semantic() const { return !semantic.empty(); }
};

struct DatasetOptions {
  bool statistic = true;
  bool semantic = false;
  bool per_viewport = false;
  std::size_t viewports = 6;
  // Substituted for "{tag}" in semantic paths.
  std::string semantic_tag = "vgg-m";
};

// Extracts statistic features from every image and loads semantic feature
// files. Throws MissingFeature when a semantic path is requested but an
// entry has none or its file does not exist.
Dataset load_dataset(const DatasetManifest& manifest,
                     const DatasetOptions& options);

// Keeps only the listed statistic columns (pooled and per-viewport rows).
Dataset select_stat_columns(const Dataset& data,
                            const std::vector<stat::FeatureBlock>& blocks);

struct ProtocolConfig {
  PathSelection paths = PathSelection::kFused;
  SplitMode split = SplitMode::kContent;
  Pooling pooling = Pooling::kFeatureMean;
  std::size_t repeats = kDefaultRepeats;
  std::uint64_t seed = 0;
  double train_fraction = 0.8;
  // Hyperparameter grids and fold count; the seed is set per repeat.
  svr::GridSearchOptions grid;
  // 0, 0.05, ..., 1.
  std::vector<double> w_grid;

  ProtocolConfig();
};

struct RepeatResult {
  std::uint64_t seed = 0;
  std::size_t n_train = 0;
  std::size_t n_test = 0;
  double w = 1.0;
  svr::SvrParams st_params;
  svr::SvrParams se_params;
  double srocc = 0.0;
  double plcc = 0.0;
  double rmse = 0.0;
  bool logistic_applied = false;
  LogisticParams logistic{};
};

struct EvalReport {
  double srocc = 0.0;
  double plcc = 0.0;
  double rmse = 0.0;
  // Taken from the repeat whose SROCC is the median (lower median for an
  // even count).
  LogisticParams logistic_params{};
  double median_w = 1.0;
  std::size_t n_splits = 0;
  std::size_t n_images = 0;
  std::string aggregation = "median";
  PathSelection paths = PathSelection::kFused;
  SplitMode split = SplitMode::kContent;
  Pooling pooling = Pooling::kFeatureMean;
  std::uint64_t seed = 0;
  std::vector<RepeatResult> repeats;
};

// Per-repeat seed derivation.
std::uint64_t splitmix64(std::uint64_t x);

// Seeded train/test partition. Returns a training flag per image.
std::vector<bool> split_train_test(const Dataset& data, SplitMode mode,
                                   double train_fraction, std::uint64_t seed);

RepeatResult run_repeat(const Dataset& data, const ProtocolConfig& config,
                        std::uint64_t repeat_seed);

// Throws InvalidArgument for fewer than kMinProtocolImages images, a path the
// dataset does not carry, or zero repeats.
EvalReport run_protocol(const Dataset& data, const ProtocolConfig& config);

// Median aggregation of already computed repeats.
EvalReport summarize(std::vector<RepeatResult> repeats,
                     const ProtocolConfig& config, std::size_t n_images);

// Fits scaling, grid search and the final SVR on one path of a dataset.
svr::SvrModel train_path(const svr::SampleSet& x, std::span<const double> y,
                         const svr::GridSearchOptions& grid,
                         std::uint64_t seed, const std::string& feature_tag);

}  // namespace s2::eval

#endif  // S2_PROTOCOL_HPP_
