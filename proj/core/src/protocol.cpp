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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "s2/error.hpp"
#include "s2/image_io.hpp"
#include "s2/metrics.hpp"
#include "s2/parallel.hpp"
#include "s2/semantic.hpp"
#include "s2/sphere.hpp"

namespace s2::eval {

const char* path_name(PathSelection p) {
  switch (p) {
    case PathSelection::kStatistic: return "st";
    case PathSelection::kSemantic: return "se";
    case PathSelection::kFused: return "both";
  }
  return "both";
}

const char* split_name(SplitMode s) {
  return s == SplitMode::kContent ? "content" : "image";
}

const char* pooling_name(Pooling p) {
  return p == Pooling::kFeatureMean ? "feature-mean" : "score-mean";
}

PathSelection parse_path(const std::string& s) {
  if (s == "st") return PathSelection::kStatistic;
  if (s == "se") return PathSelection::kSemantic;
  if (s == "both") return PathSelection::kFused;
  throw InvalidArgument("unknown path '" + s + "' (expected st, se or both)");
}

SplitMode parse_split(const std::string& s) {
  if (s == "content") return SplitMode::kContent;
  if (s == "image") return SplitMode::kImage;
  throw InvalidArgument("unknown split mode '" + s +
                        "' (expected content or image)");
}

Pooling parse_pooling(const std::string& s) {
  if (s == "feature-mean") return Pooling::kFeatureMean;
  if (s == "score-mean") return Pooling::kScoreMean;
  throw InvalidArgument("unknown pooling '" + s +
                        "' (expected feature-mean or score-mean)");
}

Dataset load_dataset(const DatasetManifest& manifest,
                     const DatasetOptions& options) {
  const std::size_t n = manifest.size();
  Dataset d;
  d.viewports = options.viewports;
  d.semantic_tag = options.semantic_tag;
  for (const auto& e : manifest.entries) {
    d.mos.push_back(e.mos);
    d.source_id.push_back(e.source_id);
  }
  if (options.semantic) {
    d.semantic.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto path = manifest.semantic(i, options.semantic_tag);
      if (!path) {
        throw MissingFeature("entry '" + manifest.entries[i].image_path.string() +
                             "' has no semantic feature path");
      }
      if (!std::filesystem::exists(*path)) {
        throw MissingFeature("semantic feature file not found: " +
                             path->string());
      }
      d.semantic[i] = sem::load_semantic_features(*path).fc1;
    }
  }
  if (options.statistic) {
    if (!sphere::is_supported_viewport_count(options.viewports)) {
      throw InvalidArgument("unsupported viewport count " +
                            std::to_string(options.viewports));
    }
    d.stat.resize(n);
    if (options.per_viewport) d.stat_viewports.resize(n);
    // Images are processed one at a time; viewports inside each image run in
    // parallel.
    for (std::size_t i = 0; i < n; ++i) {
      const auto feats = stat::extract_image_features(
          read_image(manifest.image(i)), options.viewports);
      const auto pooled = feats.pooled.combined();
      d.stat[i].assign(pooled.begin(), pooled.end());
      if (options.per_viewport) {
        for (const auto& v : feats.per_viewport) {
          const auto c = v.combined();
          d.stat_viewports[i].emplace_back(c.begin(), c.end());
        }
      }
    }
  }
  return d;
}

Dataset select_stat_columns(const Dataset& data,
                            const std::vector<stat::FeatureBlock>& blocks) {
  auto pick = [&](const svr::Sample& row) {
    svr::Sample out;
    for (const auto& b : blocks) {
      if (b.end > row.size()) {
        throw InvalidArgument("feature block exceeds statistic dimension");
      }
      out.insert(out.end(), row.begin() + static_cast<std::ptrdiff_t>(b.begin),
                 row.begin() + static_cast<std::ptrdiff_t>(b.end));
    }
    return out;
  };
  Dataset d = data;
  for (auto& row : d.stat) row = pick(row);
  for (auto& image : d.stat_viewports) {
    for (auto& row : image) row = pick(row);
  }
  return d;
}

ProtocolConfig::ProtocolConfig() {
  for (int k = 0; k <= 20; ++k) w_grid.push_back(k / 20.0);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

template <typename T>
void seeded_shuffle(std::vector<T>& v, std::uint64_t seed) {
  if (v.size() < 2) return;
  std::mt19937_64 rng(seed);
  for (std::size_t i = v.size() - 1; i > 0; --i) {
    std::swap(v[i], v[rng() % (i + 1)]);
  }
}

// Source ids mapped to dense indices in order of first appearance.
std::vector<std::size_t> source_indices(const Dataset& data) {
  std::map<std::string, std::size_t> ids;
  std::vector<std::size_t> out(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    out[i] = ids.emplace(data.source_id[i], ids.size()).first->second;
  }
  return out;
}

std::size_t count_distinct(const std::vector<std::size_t>& v) {
  std::vector<std::size_t> s = v;
  std::sort(s.begin(), s.end());
  return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
}

struct PathOutcome {
  std::vector<double> oof;   // per training image
  std::vector<double> test;  // per test image
  svr::SvrParams params;
};

constexpr std::uint64_t kSemanticSalt = 0x5e3a17c0ffeeULL;

PathOutcome fit_and_predict(const Dataset& data, bool statistic,
                            const std::vector<std::size_t>& train,
                            const std::vector<std::size_t>& test,
                            const std::vector<std::size_t>& unit_of,
                            bool score_mean,
                            const svr::GridSearchOptions& grid_in,
                            std::uint64_t seed) {
  svr::SampleSet x;
  std::vector<double> y;
  std::vector<std::size_t> groups;
  // owner[k] = position in `train` of training row k.
  std::vector<std::size_t> owner;
  for (std::size_t t = 0; t < train.size(); ++t) {
    const std::size_t i = train[t];
    if (statistic && score_mean) {
      for (const auto& row : data.stat_viewports[i]) {
        x.push_back(row);
        y.push_back(data.mos[i]);
        groups.push_back(unit_of[i]);
        owner.push_back(t);
      }
    } else {
      x.push_back(statistic ? data.stat[i] : data.semantic[i]);
      y.push_back(data.mos[i]);
      groups.push_back(unit_of[i]);
      owner.push_back(t);
    }
  }

  svr::ScaledSet scaled = svr::scale_fit_transform(x);
  svr::GridSearchOptions grid = grid_in;
  grid.seed = seed;
  grid.folds = std::min(grid.folds, count_distinct(groups));
  if (grid.folds < 2) {
    throw InvalidArgument("training fold holds fewer than 2 independent units");
  }
  const svr::GridSearchResult gs =
      svr::grid_search(scaled.x, y, grid, std::span<const std::size_t>(groups));
  const svr::SvrModel model =
      svr::svr_train(scaled.x, y, gs.best, seed, scaled.scaling);

  PathOutcome out;
  out.params = gs.best;
  out.oof.assign(train.size(), 0.0);
  std::vector<double> counts(train.size(), 0.0);
  for (std::size_t k = 0; k < owner.size(); ++k) {
    out.oof[owner[k]] += gs.oof_predictions[k];
    counts[owner[k]] += 1.0;
  }
  for (std::size_t t = 0; t < train.size(); ++t) out.oof[t] /= counts[t];

  out.test.reserve(test.size());
  for (std::size_t i : test) {
    if (statistic && score_mean) {
      double s = 0.0;
      for (const auto& row : data.stat_viewports[i]) {
        s += svr::svr_predict(model, row);
      }
      out.test.push_back(s / static_cast<double>(data.stat_viewports[i].size()));
    } else {
      out.test.push_back(
          svr::svr_predict(model, statistic ? data.stat[i] : data.semantic[i]));
    }
  }
  return out;
}

// SROCC that reports 0 instead of throwing when one side is constant.
double safe_srocc(std::span<const double> a, std::span<const double> b) {
  try {
    return srocc(a, b);
  } catch (const DegenerateInput&) {
    return 0.0;
  }
}

void check_dataset(const Dataset& data, const ProtocolConfig& config) {
  if (data.size() < kMinProtocolImages) {
    throw InvalidArgument("evaluation needs at least " +
                          std::to_string(kMinProtocolImages) +
                          " images, manifest has " +
                          std::to_string(data.size()));
  }
  const bool need_st = config.paths != PathSelection::kSemantic;
  const bool need_se = config.paths != PathSelection::kStatistic;
  if (need_st && !data.has_stat()) {
    throw InvalidArgument("dataset carries no statistic features");
  }
  if (need_st && config.pooling == Pooling::kScoreMean &&
      data.stat_viewports.size() != data.size()) {
    throw InvalidArgument("score-mean pooling needs per-viewport features");
  }
  if (need_se && !data.has_semantic()) {
    throw InvalidArgument("dataset carries no semantic features");
  }
  if (!(config.train_fraction > 0.0 && config.train_fraction < 1.0)) {
    throw InvalidArgument("train fraction must lie in (0, 1)");
  }
  if (config.w_grid.empty()) throw InvalidArgument("empty fusion-weight grid");
}

}  // namespace

std::vector<bool> split_train_test(const Dataset& data, SplitMode mode,
                                   double train_fraction, std::uint64_t seed) {
  const std::vector<std::size_t> unit_of =
      mode == SplitMode::kContent
          ? source_indices(data)
          : [&] {
              std::vector<std::size_t> v(data.size());
              std::iota(v.begin(), v.end(), std::size_t{0});
              return v;
            }();
  const std::size_t units = count_distinct(unit_of);
  if (units < 2) {
    throw InvalidArgument(std::string("a ") + split_name(mode) +
                          " split needs at least 2 distinct units");
  }
  std::vector<std::size_t> order(units);
  std::iota(order.begin(), order.end(), std::size_t{0});
  seeded_shuffle(order, seed);
  auto n_train = static_cast<std::size_t>(
      std::llround(train_fraction * static_cast<double>(units)));
  n_train = std::clamp<std::size_t>(n_train, 1, units - 1);
  std::vector<bool> unit_train(units, false);
  for (std::size_t k = 0; k < n_train; ++k) unit_train[order[k]] = true;
  std::vector<bool> is_train(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    is_train[i] = unit_train[unit_of[i]];
  }
  return is_train;
}

RepeatResult run_repeat(const Dataset& data, const ProtocolConfig& config,
                        std::uint64_t repeat_seed) {
  const auto is_train =
      split_train_test(data, config.split, config.train_fraction, repeat_seed);
  std::vector<std::size_t> train, test;
  for (std::size_t i = 0; i < data.size(); ++i) {
    (is_train[i] ? train : test).push_back(i);
  }
  // Cross-validation folds never split a source (content mode) or an image's
  // viewports (score-mean pooling).
  std::vector<std::size_t> unit_of;
  if (config.split == SplitMode::kContent) {
    unit_of = source_indices(data);
  } else {
    unit_of.resize(data.size());
    std::iota(unit_of.begin(), unit_of.end(), std::size_t{0});
  }

  RepeatResult r;
  r.seed = repeat_seed;
  r.n_train = train.size();
  r.n_test = test.size();

  std::vector<double> train_mos, test_mos;
  for (std::size_t i : train) train_mos.push_back(data.mos[i]);
  for (std::size_t i : test) test_mos.push_back(data.mos[i]);

  const bool use_st = config.paths != PathSelection::kSemantic;
  const bool use_se = config.paths != PathSelection::kStatistic;
  PathOutcome st, se;
  if (use_st) {
    st = fit_and_predict(data, true, train, test, unit_of,
                         config.pooling == Pooling::kScoreMean, config.grid,
                         repeat_seed);
    r.st_params = st.params;
  }
  if (use_se) {
    se = fit_and_predict(data, false, train, test, unit_of, false, config.grid,
                         repeat_seed ^ kSemanticSalt);
    r.se_params = se.params;
  }

  if (use_st && use_se) {
    double best_score = -std::numeric_limits<double>::infinity();
    std::vector<double> fused(train.size());
    for (double w : config.w_grid) {
      for (std::size_t t = 0; t < train.size(); ++t) {
        fused[t] = fuse(st.oof[t], se.oof[t], w).q_overall;
      }
      const double score = safe_srocc(fused, train_mos);
      // Ties keep the weight closest to an even blend.
      if (score > best_score ||
          (score == best_score && std::abs(w - 0.5) < std::abs(r.w - 0.5))) {
        best_score = score;
        r.w = w;
      }
    }
  } else {
    r.w = use_st ? 1.0 : 0.0;
  }

  std::vector<double> pred(test.size());
  for (std::size_t t = 0; t < test.size(); ++t) {
    pred[t] = fuse(use_st ? st.test[t] : 0.0, use_se ? se.test[t] : 0.0, r.w)
                  .q_overall;
  }
  r.srocc = safe_srocc(pred, test_mos);
  bool fitted = false;
  if (test.size() >= kMinLogisticPoints) {
    try {
      const LogisticFit fit = logistic_fit(pred, test_mos);
      r.plcc = fit.plcc;
      r.rmse = fit.rmse;
      r.logistic = fit.beta;
      fitted = true;
    } catch (const DegenerateInput&) {
    }
  }
  if (!fitted) {
    // Too few test images for a five-parameter fit: raw predictions.
    try {
      r.plcc = pearson(pred, test_mos);
    } catch (const Error&) {
      r.plcc = 0.0;
    }
    r.rmse = rmse(pred, test_mos);
    r.logistic = {0.0, 0.0, 0.0, 1.0, 0.0};
  }
  r.logistic_applied = fitted;
  return r;
}

EvalReport summarize(std::vector<RepeatResult> repeats,
                     const ProtocolConfig& config, std::size_t n_images) {
  if (repeats.empty()) throw InvalidArgument("no repeats to summarize");
  // Canonical order makes the report independent of completion order.
  std::sort(repeats.begin(), repeats.end(),
            [](const RepeatResult& a, const RepeatResult& b) {
              return a.seed < b.seed;
            });
  EvalReport rep;
  rep.n_splits = repeats.size();
  rep.n_images = n_images;
  rep.paths = config.paths;
  rep.split = config.split;
  rep.pooling = config.pooling;
  rep.seed = config.seed;
  std::vector<double> s, p, e, w;
  for (const auto& r : repeats) {
    s.push_back(r.srocc);
    p.push_back(r.plcc);
    e.push_back(r.rmse);
    w.push_back(r.w);
  }
  rep.srocc = median(s);
  rep.plcc = median(p);
  rep.rmse = median(e);
  rep.median_w = median(w);

  std::vector<std::size_t> by_srocc(repeats.size());
  std::iota(by_srocc.begin(), by_srocc.end(), std::size_t{0});
  std::stable_sort(by_srocc.begin(), by_srocc.end(),
                   [&](std::size_t a, std::size_t b) {
                     return repeats[a].srocc < repeats[b].srocc;
                   });
  rep.logistic_params =
      repeats[by_srocc[(repeats.size() - 1) / 2]].logistic;
  rep.repeats = std::move(repeats);
  return rep;
}

EvalReport run_protocol(const Dataset& data, const ProtocolConfig& config) {
  check_dataset(data, config);
  if (config.repeats == 0) throw InvalidArgument("repeats must be >= 1");
  std::vector<RepeatResult> results(config.repeats);
  parallel_for(config.repeats, [&](std::size_t k) {
    results[k] = run_repeat(data, config, splitmix64(config.seed + k));
  });
  return summarize(std::move(results), config, data.size());
}

svr::SvrModel train_path(const svr::SampleSet& x, std::span<const double> y,
                         const svr::GridSearchOptions& grid_in,
                         std::uint64_t seed, const std::string& feature_tag) {
  if (x.size() < 2) {
    throw InvalidArgument("training needs at least 2 images, got " +
                          std::to_string(x.size()));
  }
  svr::ScaledSet scaled = svr::scale_fit_transform(x);
  svr::GridSearchOptions grid = grid_in;
  grid.seed = seed;
  grid.folds = std::min(grid.folds, x.size());
  const auto gs = svr::grid_search(scaled.x, y, grid);
  svr::SvrModel model =
      svr::svr_train(scaled.x, y, gs.best, seed, std::move(scaled.scaling));
  model.feature_tag = feature_tag;
  return model;
}

}  // namespace s2::eval
