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

#include "s2/protocol.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "oracles/fixtures.hpp"
#include "s2/binary_io.hpp"
#include "s2/error.hpp"
#include "s2/image_io.hpp"
#include "s2/semantic.hpp"
#include "s2/stat_features.hpp"

namespace s2::eval {
namespace {

ProtocolConfig quick_config(PathSelection paths, std::size_t repeats) {
  ProtocolConfig c;
  c.paths = paths;
  c.repeats = repeats;
  c.seed = 5;
  c.grid = testing::small_grid();
  return c;
}

TEST(Names, RoundTrip) {
  for (auto p : {PathSelection::kStatistic, PathSelection::kSemantic, PathSelection::kFused}) {
    EXPECT_EQ(parse_path(path_name(p)), p);
  }
  EXPECT_EQ(parse_split("content"), SplitMode::kContent);
  EXPECT_EQ(parse_split(split_name(SplitMode::kImage)), SplitMode::kImage);
  EXPECT_EQ(parse_pooling(pooling_name(Pooling::kScoreMean)), Pooling::kScoreMean);
  EXPECT_THROW(parse_path("xx"), InvalidArgument);
  EXPECT_THROW(parse_split("xx"), InvalidArgument);
  EXPECT_THROW(parse_pooling("xx"), InvalidArgument);
}

TEST(Splitmix, ReferenceValue) {
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
  EXPECT_NE(splitmix64(1), splitmix64(2));
}

TEST(Split, ContentModeKeepsSourcesTogether) {
  const Dataset d = testing::synthetic_dataset(10, 5, 1, false);
  const auto is_train = split_train_test(d, SplitMode::kContent, 0.8, 42);
  std::set<std::string> train_src, test_src;
  for (std::size_t i = 0; i < d.size(); ++i) {
    (is_train[i] ? train_src : test_src).insert(d.source_id[i]);
  }
  EXPECT_EQ(train_src.size(), 8u);
  EXPECT_EQ(test_src.size(), 2u);
  for (const auto& s : train_src) EXPECT_EQ(test_src.count(s), 0u);
  EXPECT_EQ(is_train, split_train_test(d, SplitMode::kContent, 0.8, 42));
  bool differs = false;
  for (std::uint64_t s = 43; s < 50; ++s) {
    differs |= is_train != split_train_test(d, SplitMode::kContent, 0.8, s);
  }
  EXPECT_TRUE(differs);
}

TEST(Split, ImageMode) {
  const Dataset d = testing::synthetic_dataset(4, 5, 1, false);
  const auto is_train = split_train_test(d, SplitMode::kImage, 0.8, 3);
  EXPECT_EQ(std::count(is_train.begin(), is_train.end(), true), 16);
  Dataset one = d;
  for (auto& s : one.source_id) s = "same";
  EXPECT_THROW(split_train_test(one, SplitMode::kContent, 0.8, 3), InvalidArgument);
}

TEST(Protocol, StatisticPathRanksWell) {
  const Dataset d = testing::synthetic_dataset(10, 5, 2, false);
  const auto rep = run_protocol(d, quick_config(PathSelection::kStatistic, 4));
  EXPECT_EQ(rep.n_splits, 4u);
  EXPECT_EQ(rep.n_images, 50u);
  EXPECT_EQ(rep.aggregation, "median");
  EXPECT_GE(rep.srocc, 0.9);
  EXPECT_LE(std::fabs(rep.srocc), 1.0);
  EXPECT_LE(std::fabs(rep.plcc), 1.0);
  EXPECT_GE(rep.rmse, 0.0);
  EXPECT_EQ(rep.median_w, 1.0);
  for (const auto& r : rep.repeats) {
    EXPECT_EQ(r.n_train + r.n_test, 50u);
    EXPECT_TRUE(r.logistic_applied);
  }
}

TEST(Protocol, SemanticAndFused) {
  const Dataset d = testing::synthetic_dataset(10, 5, 3, true);
  const auto se = run_protocol(d, quick_config(PathSelection::kSemantic, 3));
  EXPECT_EQ(se.median_w, 0.0);
  const auto both = run_protocol(d, quick_config(PathSelection::kFused, 3));
  EXPECT_GE(both.median_w, 0.0);
  EXPECT_LE(both.median_w, 1.0);
  EXPECT_GE(both.srocc, 0.8);
}

TEST(Protocol, DeterministicForFixedSeed) {
  const Dataset d = testing::synthetic_dataset(10, 4, 4, true);
  const auto cfg = quick_config(PathSelection::kFused, 1);
  const auto a = run_protocol(d, cfg);
  const auto b = run_protocol(d, cfg);
  EXPECT_EQ(a.srocc, b.srocc);
  EXPECT_EQ(a.plcc, b.plcc);
  EXPECT_EQ(a.rmse, b.rmse);
  EXPECT_EQ(a.logistic_params, b.logistic_params);
  EXPECT_EQ(a.repeats[0].st_params, b.repeats[0].st_params);
  EXPECT_EQ(a.repeats[0].se_params, b.repeats[0].se_params);
}

TEST(Protocol, SummaryIgnoresRepeatOrder) {
  std::vector<RepeatResult> rs;
  for (int k = 0; k < 7; ++k) {
    RepeatResult r;
    r.seed = 100 + k;
    r.srocc = 0.5 + 0.05 * ((k * 3) % 7);
    r.plcc = 0.4 + 0.01 * k;
    r.rmse = 10 - k;
    r.logistic = {double(k), 0, 0, 1, 0};
    rs.push_back(r);
  }
  const ProtocolConfig cfg;
  const auto base = summarize(rs, cfg, 50);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 5; ++t) {
    std::shuffle(rs.begin(), rs.end(), rng);
    const auto again = summarize(rs, cfg, 50);
    EXPECT_EQ(again.srocc, base.srocc);
    EXPECT_EQ(again.plcc, base.plcc);
    EXPECT_EQ(again.rmse, base.rmse);
    EXPECT_EQ(again.logistic_params, base.logistic_params);
  }
  EXPECT_DOUBLE_EQ(base.srocc, 0.65);
  EXPECT_EQ(base.rmse, 7.0);
  // The repeat holding the median SROCC (0.65) is k = 1.
  EXPECT_EQ(base.logistic_params[0], 1.0);
  EXPECT_THROW(summarize({}, cfg, 1), InvalidArgument);
}

TEST(Protocol, ScoreMeanPooling) {
  Dataset d = testing::synthetic_dataset(10, 4, 6, false);
  std::mt19937_64 rng(7);
  std::normal_distribution<double> n(0, 0.02);
  d.stat_viewports.resize(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (int v = 0; v < 3; ++v) {
      auto row = d.stat[i];
      for (auto& x : row) x += n(rng);
      d.stat_viewports[i].push_back(row);
    }
  }
  auto cfg = quick_config(PathSelection::kStatistic, 2);
  cfg.pooling = Pooling::kScoreMean;
  const auto rep = run_protocol(d, cfg);
  EXPECT_EQ(rep.pooling, Pooling::kScoreMean);
  EXPECT_GE(rep.srocc, 0.85);
  Dataset no_vp = testing::synthetic_dataset(10, 4, 6, false);
  EXPECT_THROW(run_protocol(no_vp, cfg), InvalidArgument);
}

TEST(Protocol, ImageSplitMode) {
  const Dataset d = testing::synthetic_dataset(6, 5, 8, false);
  auto cfg = quick_config(PathSelection::kStatistic, 2);
  cfg.split = SplitMode::kImage;
  const auto rep = run_protocol(d, cfg);
  EXPECT_EQ(rep.split, SplitMode::kImage);
  for (const auto& r : rep.repeats) EXPECT_EQ(r.n_test, 6u);
}

TEST(Protocol, SmallTestFoldFallsBackToRawMetrics) {
  const Dataset d = testing::synthetic_dataset(5, 3, 9, false);
  const auto rep = run_protocol(d, quick_config(PathSelection::kStatistic, 2));
  for (const auto& r : rep.repeats) {
    EXPECT_LT(r.n_test, kMinLogisticPoints);
    EXPECT_FALSE(r.logistic_applied);
  }
}

TEST(Protocol, Errors) {
  const Dataset small = testing::synthetic_dataset(5, 1, 1, true);
  EXPECT_THROW(run_protocol(small, quick_config(PathSelection::kStatistic, 1)), InvalidArgument);
  const Dataset d = testing::synthetic_dataset(4, 4, 1, false);
  EXPECT_THROW(run_protocol(d, quick_config(PathSelection::kSemantic, 1)), InvalidArgument);
  EXPECT_THROW(run_protocol(d, quick_config(PathSelection::kStatistic, 0)), InvalidArgument);
  auto cfg = quick_config(PathSelection::kStatistic, 1);
  cfg.train_fraction = 1.0;
  EXPECT_THROW(run_protocol(d, cfg), InvalidArgument);
}

TEST(SelectColumns, PicksBlocksInOrder) {
  Dataset d;
  d.mos = {1};
  d.source_id = {"a"};
  d.stat = {{0, 1, 2, 3, 4, 5}};
  const auto s = select_stat_columns(d, {{4, 6}, {0, 2}});
  EXPECT_EQ(s.stat[0], (svr::Sample{4, 5, 0, 1}));
  EXPECT_THROW(select_stat_columns(d, {{0, 7}}), InvalidArgument);
}

TEST(TrainPath, ProducesTaggedModel) {
  const Dataset d = testing::synthetic_dataset(6, 4, 10, false);
  const auto m = train_path(d.stat, d.mos, testing::small_grid(), 1, "st:v6");
  EXPECT_EQ(m.feature_tag, "st:v6");
  EXPECT_EQ(m.dims(), 3u);
  double err = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) err += std::fabs(svr::svr_predict(m, d.stat[i]) - d.mos[i]);
  EXPECT_LT(err / d.size(), 5.0);
  EXPECT_THROW(train_path({{1.0}}, std::vector<double>{5.0}, testing::small_grid(), 1, ""), InvalidArgument);
}

TEST(LoadDataset, ReadsImagesAndSemanticFiles) {
  testing::TempDir dir;
  std::mt19937_64 rng(11);
  DatasetManifest m;
  m.base_dir = dir.path();
  std::vector<double> fc1(sem::kFc1Dims, 0.5);
  for (int i = 0; i < 2; ++i) {
    const std::string name = "i" + std::to_string(i);
    write_image(testing::random_luma(128, 64, rng), dir / (name + ".png"));
    write_feature_file(dir / (name + ".t1.fc1"),
                       sem::to_feature_file(fc1, FeatureKind::kSemanticFc1, "t1"));
    ManifestEntry e;
    e.image_path = name + ".png";
    e.mos = 10.0 * i;
    e.source_id = name;
    e.semantic_feature_path = name + ".{tag}.fc1";
    m.entries.push_back(e);
  }
  DatasetOptions o;
  o.semantic = true;
  o.per_viewport = true;
  o.semantic_tag = "t1";
  const Dataset d = load_dataset(m, o);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.stat[0].size(), stat::kStatDims);
  EXPECT_EQ(d.stat_viewports[1].size(), 6u);
  EXPECT_EQ(d.semantic[1].size(), sem::kFc1Dims);
  EXPECT_EQ(d.mos[1], 10.0);

  o.semantic_tag = "t2";
  EXPECT_THROW(load_dataset(m, o), MissingFeature);
  m.entries[0].semantic_feature_path.reset();
  o.semantic_tag = "t1";
  EXPECT_THROW(load_dataset(m, o), MissingFeature);
  o.semantic = false;
  o.viewports = 7;
  EXPECT_THROW(load_dataset(m, o), InvalidArgument);
}

}  // namespace
}  // namespace s2::eval
