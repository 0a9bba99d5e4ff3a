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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles/fixtures.hpp"
#include "oracles/qp_oracle.hpp"
#include "oracles/stat_oracles.hpp"
#include "s2/ablation.hpp"
#include "s2/desk_corpus.hpp"
#include "s2/logistic.hpp"
#include "s2/metrics.hpp"
#include "s2/nss.hpp"
#include "s2/protocol.hpp"
#include "s2/pyramid.hpp"
#include "s2/sphere.hpp"
#include "s2/stat_features.hpp"
#include "s2/svr.hpp"

namespace {

using namespace s2;
using namespace s2::pyramid;
using s2::stat::fit_aggd;
using s2::stat::fit_ggd;
using s2::eval::logistic_fit;
using s2::eval::pearson;
using s2::eval::rmse;
using s2::eval::srocc;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

std::string fmt(const char* f, double a, double b, double c) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome pyramid_identity() {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<std::size_t> side(64, 512);
  double worst = 0.0;
  std::size_t odd = 0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t w = side(rng), h = side(rng);
    odd += (w % 2) + (h % 2);
    const Raster img = testing::random_raster(w, h, rng, 0.0, 255.0);
    std::size_t n = 2;
    while ((std::min(w, h) + (std::size_t{1} << n) - 1) >> n >= kMinLayerSide) ++n;
    const auto gp = build_gaussian(img, n);
    const auto lp = build_laplacian(gp);
    for (std::size_t i = 0; i + 1 < gp.layers.size(); ++i) {
      const Raster& g = gp.layers[i];
      const Raster up = expand(gp.layers[i + 1], g.width(), g.height());
      for (std::size_t k = 0; k < g.pixels().size(); ++k) {
        worst = std::max(worst, std::fabs(g.pixels()[k] -
                                          (lp.layers[i].pixels()[k] + up.pixels()[k])));
      }
    }
  }
  return {worst <= 1e-9 && odd > 0,
          fmt("max residual %.3g over 50 images, %.0f odd sides", worst,
              static_cast<double>(odd))};
}

Outcome feature_count() {
  std::mt19937_64 rng(7);
  bool ok = stat::kStatDims == 249 && stat::kGpDims == 177 && stat::kLpDims == 72;
  double worst = 0.0;
  for (int t = 0; t < 5; ++t) {
    const Raster vp = testing::random_luma(256, 256, rng);
    const auto f = stat::extract_viewport_features(vp);
    ok = ok && f.combined().size() == 249;
    for (std::size_t i = 0; i < stat::kGaussianLayers; ++i) {
      const auto b = stat::gp_block(i);
      double s = 0.0;
      for (std::size_t k = b.begin; k < b.end; ++k) s += f.values[k];
      worst = std::max(worst, std::fabs(s - 1.0));
    }
  }
  const Raster omni = testing::random_luma(512, 256, rng);
  const auto img = stat::extract_image_features(omni, 6);
  ok = ok && img.pooled.combined().size() == 249 && img.per_viewport.size() == 6;
  for (std::size_t i = 0; i < stat::kGaussianLayers; ++i) {
    const auto b = stat::gp_block(i);
    double s = 0.0;
    for (std::size_t k = b.begin; k < b.end; ++k) s += img.pooled.values[k];
    worst = std::max(worst, std::fabs(s - 1.0));
  }
  return {ok && worst <= 1e-9, fmt("249 dims, worst LBP slice deviation %.3g", worst)};
}

Outcome nss_oracle() {
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  int cases = 0;
  for (double shape : {0.5, 0.8, 1.0, 1.5, 2.0, 3.0, 4.5}) {
    const auto g = oracle::sample_ggd(100000, shape, 1.7, rng);
    worst = std::max(worst, std::fabs(fit_ggd(g).shape - shape));
    ++cases;
    const auto a = oracle::sample_aggd(100000, shape, 0.6, 1.9, rng);
    worst = std::max(worst, std::fabs(fit_aggd(a).shape - shape));
    ++cases;
  }
  return {worst <= 0.15, fmt("%.0f fits, worst shape error %.4f", cases, worst)};
}

Outcome svr_oracle() {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> npts(5, 20), ndim(1, 3), cexp(-1, 6), gexp(-2, 2);
  double worst_obj = 0.0, worst_pred = 0.0;
  for (int t = 0; t < 25; ++t) {
    const int l = npts(rng), d = ndim(rng);
    svr::SampleSet x(static_cast<std::size_t>(l), std::vector<double>(d));
    std::vector<double> y(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) {
      for (double& v : x[i]) v = u(rng);
      y[i] = std::sin(2.0 * x[i][0]) + 0.5 * x[i][d - 1] + 0.1 * u(rng);
    }
    const svr::SvrParams p{std::pow(2.0, cexp(rng)), std::pow(2.0, gexp(rng)), 0.05};
    const auto m = svr::svr_train(x, y, p, 1, svr::ScalingParams::identity(d));
    const auto k = svr::rbf_from_distances(svr::squared_distances(x), p.gamma);
    const auto sol = svr::solve_dual(k, y, p.c, p.epsilon, 1);
    const auto q = oracle::solve_svr_dual(x, y, p.c, p.gamma, p.epsilon);
    worst_obj = std::max(worst_obj, std::fabs(sol.objective - q.objective) /
                                        std::max(std::fabs(q.objective), 1e-12));
    for (int s = 0; s < 30; ++s) {
      std::vector<double> pt(d);
      for (double& v : pt) v = 1.2 * u(rng);
      if (s < l) pt = x[s];
      worst_pred = std::max(worst_pred, std::fabs(svr::svr_predict(m, pt) -
                                                  oracle::qp_predict(q, x, p.gamma, pt)));
    }
  }
  return {worst_obj <= 1e-4 && worst_pred <= 1e-3,
          fmt("25 instances, worst objective rel. error %.3g, worst prediction gap %.3g",
              worst_obj, worst_pred)};
}

Outcome metric_correctness() {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 100.0);
  std::uniform_int_distribution<int> len(5, 200);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    std::vector<double> a(len(rng)), b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      // Every fourth vector is coarsely quantised so ties occur.
      a[i] = t % 4 == 0 ? std::round(u(rng) / 20.0) : u(rng);
      b[i] = 0.5 * a[i] + u(rng);
    }
    worst = std::max(worst, std::fabs(srocc(a, b) - oracle::direct_srocc(a, b)));
    worst = std::max(worst, std::fabs(pearson(a, b) - oracle::direct_pearson(a, b)));
    worst = std::max(worst, std::fabs(rmse(a, b) - oracle::direct_rmse(a, b)));
  }
  double worst_gap = -1e300;
  bool logistic_ok = true;
  std::normal_distribution<double> n(0.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    std::vector<double> pred(60), mos(60);
    for (std::size_t i = 0; i < pred.size(); ++i) {
      pred[i] = u(rng) / 100.0 * (1.0 + t);
      mos[i] = 10.0 + 80.0 / (1.0 + std::exp(-(pred[i] - 0.5 * (1.0 + t)) * 6.0 / (1.0 + t))) +
               (t % 5) * n(rng);
    }
    const double raw = pearson(pred, mos);
    const auto fit = logistic_fit(pred, mos);
    worst_gap = std::max(worst_gap, raw - fit.plcc);
    logistic_ok = logistic_ok && fit.plcc >= raw - 1e-9;
  }
  return {worst <= 1e-12 && logistic_ok,
          fmt("worst metric gap %.3g; worst raw-minus-fitted PLCC %.3g", worst, worst_gap)};
}

Outcome baseline_consistency() {
  std::mt19937_64 rng(31);
  double worst = 0.0;
  for (int t = 0; t < 10; ++t) {
    const std::size_t w = 128 + 64 * (t % 4);
    const Raster ref = testing::random_raster(w, w / 2, rng, 20.0, 230.0);
    Raster dist = ref;
    const double offset = 1.0 + t;
    for (double& p : dist.pixels()) p += offset;
    const double p = psnr(ref, dist);
    worst = std::max({worst, std::fabs(sphere::ws_psnr(ref, dist) - p),
                      std::fabs(sphere::s_psnr(ref, dist, 4000) - p),
                      std::fabs(sphere::cpp_psnr(ref, dist) - p)});
  }
  return {worst <= 0.05, fmt("worst deviation from PSNR %.3g dB", worst)};
}

struct DeskFixture {
  testing::TempDir dir;
  DatasetManifest manifest;
};

DeskFixture& desk_fixture() {
  static DeskFixture f;
  static const bool written = [] {
    desk::DeskCorpusOptions o;
    o.sources = 8;
    o.width = 1024;
    f.manifest = desk::write_desk_corpus(f.dir.path(), o);
    return true;
  }();
  (void)written;
  return f;
}

Outcome desk_end_to_end() {
  auto& fx = desk_fixture();
  const std::size_t n = fx.manifest.size();
  eval::ProtocolConfig cfg;
  cfg.repeats = 20;
  cfg.seed = 2024;
  cfg.paths = eval::PathSelection::kStatistic;
  eval::DatasetOptions opts;
  opts.semantic_tag = "synthetic";
  const auto st = eval::run_protocol(eval::load_dataset(fx.manifest, opts), cfg);

  cfg.paths = eval::PathSelection::kFused;
  const auto rows = eval::run_ablation(fx.manifest, opts, cfg, {"St", "Se", "All"});
  const double s_st = rows[0].report.srocc, s_se = rows[1].report.srocc,
               s_all = rows[2].report.srocc;
  const bool ok = n >= 48 && st.srocc >= 0.90 && s_all >= std::max(s_st, s_se) - 0.02;
  std::ostringstream d;
  d << n << " images; St protocol median SROCC " << fmt("%.4f", st.srocc)
    << "; ablation St " << fmt("%.4f", s_st) << ", Se " << fmt("%.4f", s_se)
    << ", All " << fmt("%.4f", s_all);
  return {ok, d.str()};
}

Outcome determinism() {
  auto& fx = desk_fixture();
  std::string reports[2];
  for (int k = 0; k < 2; ++k) {
    const auto path = fx.dir / ("report" + std::to_string(k) + ".txt");
    std::ostringstream out, err;
    const int code = cli::run({"s2oiqa", "evaluate", (fx.dir / "manifest.s2m").string(),
                               "--repeats", "5", "--seed", "11", "--report",
                               path.string()},
                              out, err);
    if (code != cli::kExitOk) return {false, "evaluate failed: " + err.str()};
    reports[k] = testing::slurp(path);
  }
  const bool same = !reports[0].empty() && reports[0] == reports[1];
  return {same, same ? "two evaluate runs, " + std::to_string(reports[0].size()) +
                           " identical bytes"
                     : "reports differ"};
}

struct Criterion {
  const char* name;
  double budget_s;  // 0 = no runtime limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"pyramid-reconstruction", 10.0, pyramid_identity},
      {"feature-count", 0.0, feature_count},
      {"nss-oracle", 30.0, nss_oracle},
      {"svr-oracle", 60.0, svr_oracle},
      {"metric-correctness", 0.0, metric_correctness},
      {"baseline-consistency", 0.0, baseline_consistency},
      {"desk-end-to-end", 900.0, desk_end_to_end},
      {"determinism", 0.0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = o.pass;
    if (c.budget_s > 0.0 && secs >= c.budget_s) {
      pass = false;
      o.detail += fmt("; over the %.0f s budget", c.budget_s);
    }
    if (!pass) ++failures;
    std::printf("%s %s: %s [%.2f s]\n", pass ? "PASS" : "FAIL", c.name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
  return failures == 0 ? 0 : 1;
}
