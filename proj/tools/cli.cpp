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

#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include "s2/ablation.hpp"
#include "s2/binary_io.hpp"
#include "s2/desk_corpus.hpp"
#include "s2/error.hpp"
#include "s2/feature_file.hpp"
#include "s2/image_io.hpp"
#include "s2/manifest.hpp"
#include "s2/metrics.hpp"
#include "s2/model_file.hpp"
#include "s2/protocol.hpp"
#include "s2/raster.hpp"
#include "s2/report.hpp"
#include "s2/semantic.hpp"
#include "s2/sphere.hpp"
#include "s2/stat_features.hpp"
#include "s2/svr.hpp"

namespace s2::cli {

namespace {

namespace fs = std::filesystem;

// Raised for flag combinations CLI11 cannot express.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string four_places(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string stat_tag(std::size_t viewports) {
  return "st:v" + std::to_string(viewports);
}

// Viewport count encoded in a statistic model's tag, e.g. "st:v20".
std::size_t viewports_from_tag(const std::string& tag) {
  if (tag.rfind("st:v", 0) == 0) {
    try {
      const std::size_t n = std::stoul(tag.substr(4));
      if (sphere::is_supported_viewport_count(n)) return n;
    } catch (const std::exception&) {
    }
  }
  throw SchemaError("model feature tag '" + tag +
                    "' does not name a statistic model");
}

std::vector<double> as_doubles(std::span<const double> v) {
  return {v.begin(), v.end()};
}

struct CommonEval {
  std::string manifest;
  std::size_t viewports = 6;
  std::size_t repeats = eval::kDefaultRepeats;
  std::uint64_t seed = 0;
  std::size_t folds = 5;
  std::string split = "content";
  std::string pooling = "feature-mean";
  std::string tag = "vgg-m";
  std::string report;
  std::string csv;
};

void add_common(CLI::App* cmd, CommonEval& o) {
  cmd->add_option("manifest", o.manifest, "Dataset manifest")->required();
  cmd->add_option("--viewports", o.viewports, "Viewports per image")
      ->check(CLI::IsMember({6, 20, 80}));
  cmd->add_option("--repeats", o.repeats, "Random 80/20 splits")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "Base seed");
  cmd->add_option("--folds", o.folds, "Cross-validation folds")
      ->check(CLI::Range(2, 100));
  cmd->add_option("--split", o.split, "content or image")
      ->check(CLI::IsMember({"content", "image"}));
  cmd->add_option("--pooling", o.pooling, "feature-mean or score-mean")
      ->check(CLI::IsMember({"feature-mean", "score-mean"}));
  cmd->add_option("--tag", o.tag, "Semantic extractor tag for {tag} paths");
  cmd->add_option("--report", o.report,
                  "Write the machine-readable report here ('-' = stdout)");
}

eval::ProtocolConfig protocol_config(const CommonEval& o) {
  eval::ProtocolConfig c;
  c.repeats = o.repeats;
  c.seed = o.seed;
  c.split = eval::parse_split(o.split);
  c.pooling = eval::parse_pooling(o.pooling);
  c.grid.folds = o.folds;
  return c;
}

void emit_document(const std::string& target, const std::string& doc,
                   std::ostream& out) {
  if (target.empty()) return;
  if (target == "-") {
    out << doc;
  } else {
    write_file_atomic(target, doc);
  }
}

int cmd_extract_stat(const std::string& image, std::size_t viewports,
                     const std::string& out_path, std::ostream& out) {
  const Raster omni = read_image(image);
  const auto feats = stat::extract_image_features(omni, viewports);
  FeatureFile f;
  f.kind = FeatureKind::kStatistic;
  f.source_tag = stat_tag(viewports);
  const auto v = feats.pooled.combined();
  f.payload.assign(v.begin(), v.end());
  write_feature_file(out_path, f);
  out << "wrote " << out_path << " (kind 1, dim " << f.payload.size() << ")\n";
  return kExitOk;
}

int cmd_train(const std::string& manifest_path, const std::string& path,
              const std::string& out_path, std::size_t viewports,
              std::uint64_t seed, std::size_t folds, const std::string& tag,
              std::ostream& out) {
  const DatasetManifest m = read_manifest(manifest_path);
  if (m.size() < 2) {
    throw InvalidArgument("training needs at least 2 manifest entries, " +
                          manifest_path + " has " + std::to_string(m.size()));
  }
  eval::DatasetOptions o;
  o.statistic = path == "st";
  o.semantic = path == "se";
  o.viewports = viewports;
  o.semantic_tag = tag;
  const eval::Dataset d = eval::load_dataset(m, o);
  svr::GridSearchOptions grid;
  grid.folds = folds;
  const std::string feature_tag = path == "st" ? stat_tag(viewports) : "se:" + tag;
  const svr::SvrModel model = eval::train_path(
      path == "st" ? d.stat : d.semantic, d.mos, grid, seed, feature_tag);
  write_model(out_path, model);
  char params[160];
  std::snprintf(params, sizeof params, "C %g, gamma %g, epsilon %g",
                model.params.c, model.params.gamma, model.params.epsilon);
  out << "trained " << feature_tag << " on " << d.size() << " images: "
      << params << ", "
      << model.support_vectors.size() << " support vectors\n";
  out << "wrote " << out_path << '\n';
  return kExitOk;
}

int cmd_score(const std::string& image, const std::string& model_st,
              const std::string& model_se, const std::string& semantic,
              double w, std::ostream& out) {
  const bool need_st = w > 0.0;
  const bool need_se = w < 1.0;
  if (need_st && model_st.empty()) {
    throw UsageError("--model-st is required unless --w 0");
  }
  if (need_se && (model_se.empty() || semantic.empty())) {
    throw UsageError("--model-se and --semantic are required unless --w 1");
  }
  std::optional<double> q_st, q_se;
  if (need_st) {
    const svr::SvrModel m = read_model(model_st);
    const Raster omni = read_image(image);
    const auto feats =
        stat::extract_image_features(omni, viewports_from_tag(m.feature_tag));
    q_st = svr::svr_predict(m, as_doubles(feats.pooled.combined()));
  }
  if (need_se) {
    const svr::SvrModel m = read_model(model_se);
    q_se = svr::svr_predict(m, sem::load_semantic_features(semantic).fc1);
  }
  const auto q = eval::fuse(q_st.value_or(0.0), q_se.value_or(0.0), w);
  out << "q_st " << (q_st ? four_places(*q_st) : "n/a") << '\n';
  out << "q_se " << (q_se ? four_places(*q_se) : "n/a") << '\n';
  out << "q_overall " << four_places(q.q_overall) << '\n';
  return kExitOk;
}

int cmd_evaluate(const CommonEval& o, const std::string& path,
                 std::ostream& out) {
  const DatasetManifest m = read_manifest(o.manifest);
  eval::ProtocolConfig c = protocol_config(o);
  c.paths = eval::parse_path(path);
  if (m.size() < eval::kMinProtocolImages) {
    throw InvalidArgument("evaluation needs at least " +
                          std::to_string(eval::kMinProtocolImages) +
                          " images, " + o.manifest + " has " +
                          std::to_string(m.size()));
  }
  eval::DatasetOptions d;
  d.statistic = c.paths != eval::PathSelection::kSemantic;
  d.semantic = c.paths != eval::PathSelection::kStatistic;
  d.per_viewport = c.pooling == eval::Pooling::kScoreMean;
  d.viewports = o.viewports;
  d.semantic_tag = o.tag;
  const eval::EvalReport r = eval::run_protocol(eval::load_dataset(m, d), c);
  out << eval::format_table({{path, r}});
  emit_document(o.report, eval::format_report_document(r), out);
  if (!o.csv.empty()) write_file_atomic(o.csv, eval::format_repeats_csv(r));
  return kExitOk;
}

int cmd_ablate(const CommonEval& o, const std::vector<std::string>& variants,
               std::ostream& out) {
  // Validate names before any expensive work.
  for (const auto& v : variants) eval::parse_variant(v);
  const DatasetManifest m = read_manifest(o.manifest);
  eval::DatasetOptions d;
  d.viewports = o.viewports;
  d.semantic_tag = o.tag;
  const auto rows =
      eval::run_ablation(m, d, protocol_config(o), variants);
  std::vector<std::pair<std::string, eval::EvalReport>> table;
  for (const auto& r : rows) table.emplace_back(r.variant, r.report);
  out << eval::format_table(table);
  emit_document(o.report, eval::format_ablation_document(rows), out);
  return kExitOk;
}

int cmd_baselines(const std::string& ref_path, const std::string& dist_path,
                  std::size_t points, std::ostream& out) {
  const Raster ref = read_image(ref_path);
  const Raster dist = read_image(dist_path);
  const double p = psnr(ref, dist);
  const double s = sphere::s_psnr(ref, dist, points);
  const double ws = sphere::ws_psnr(ref, dist);
  const double cpp = sphere::cpp_psnr(ref, dist);
  out << "PSNR " << four_places(p) << '\n';
  out << "S-PSNR " << four_places(s) << '\n';
  out << "WS-PSNR " << four_places(ws) << '\n';
  out << "CPP-PSNR " << four_places(cpp) << '\n';
  return kExitOk;
}

int cmd_confidence(const std::vector<std::string>& files, std::ostream& out) {
  for (const auto& f : files) {
    const auto logits = sem::logits_from_file(read_feature_file(f));
    out << f << ' ' << eval::format_real(sem::semantic_confidence(logits))
        << '\n';
  }
  return kExitOk;
}

int cmd_synth(const std::string& dir, const desk::DeskCorpusOptions& o,
              std::ostream& out) {
  const auto m = desk::write_desk_corpus(dir, o);
  out << "wrote " << m.size() << " images and "
      << (fs::path(dir) / "manifest.s2m").string() << '\n';
  return kExitOk;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kConvergence:
    case ErrorKind::kDegenerateInput:
      return kExitNumeric;
    default:
      return kExitData;
  }
}

std::string one_line(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Blind quality assessment for omnidirectional images",
               "s2oiqa"};
  app.require_subcommand(1);

  std::string image, out_path;
  std::size_t viewports = 6;
  auto* extract = app.add_subcommand(
      "extract-stat", "Write the pooled 249-d statistic feature file");
  extract->add_option("image", image, "Equirectangular image")->required();
  extract->add_option("--viewports", viewports, "6, 20 or 80")
      ->check(CLI::IsMember({6, 20, 80}));
  extract->add_option("--out", out_path, "Output feature file")->required();

  std::string manifest, path = "st", tag = "vgg-m";
  std::uint64_t seed = 0;
  std::size_t folds = 5;
  auto* train = app.add_subcommand("train", "Grid-search and train one SVR");
  train->add_option("manifest", manifest, "Dataset manifest")->required();
  train->add_option("--path", path, "st or se")
      ->check(CLI::IsMember({"st", "se"}));
  train->add_option("--out", out_path, "Output model file")->required();
  train->add_option("--viewports", viewports, "6, 20 or 80")
      ->check(CLI::IsMember({6, 20, 80}));
  train->add_option("--seed", seed, "Seed");
  train->add_option("--folds", folds, "Cross-validation folds")
      ->check(CLI::Range(2, 100));
  train->add_option("--tag", tag, "Semantic extractor tag for {tag} paths");

  std::string model_st, model_se, semantic;
  double w = 0.5;
  auto* score = app.add_subcommand("score", "Predict the quality of one image");
  score->add_option("image", image, "Equirectangular image")->required();
  score->add_option("--model-st", model_st, "Statistic-path model");
  score->add_option("--model-se", model_se, "Semantic-path model");
  score->add_option("--semantic", semantic, "fc1 feature file of the image");
  score->add_option("--w", w, "Statistic weight in [0, 1]")
      ->check(CLI::Range(0.0, 1.0));

  CommonEval ev;
  std::string eval_path = "st";
  auto* evaluate =
      app.add_subcommand("evaluate", "Repeated 80/20 evaluation protocol");
  add_common(evaluate, ev);
  evaluate->add_option("--path", eval_path, "st, se or both")
      ->check(CLI::IsMember({"st", "se", "both"}));
  evaluate->add_option("--csv", ev.csv, "Per-repeat CSV output");

  CommonEval ab;
  std::vector<std::string> variants = {"St", "Se", "All"};
  auto* ablate = app.add_subcommand("ablate", "Run the protocol per variant");
  add_common(ablate, ab);
  ablate->add_option("--variants", variants, "Comma-separated variant names")
      ->delimiter(',');

  std::string ref_path, dist_path;
  std::size_t points = 65536;
  auto* baselines =
      app.add_subcommand("baselines", "Full-reference PSNR family");
  baselines->add_option("ref", ref_path, "Reference image")->required();
  baselines->add_option("dist", dist_path, "Distorted image")->required();
  baselines->add_option("--points", points, "S-PSNR sphere points")
      ->check(CLI::Range(static_cast<std::size_t>(sphere::kMinSpherePoints),
                         static_cast<std::size_t>(1) << 24));

  std::vector<std::string> logit_files;
  auto* confidence = app.add_subcommand(
      "confidence", "Max softmax probability of logit feature files");
  confidence->add_option("logits", logit_files, "Kind-3 feature files")
      ->required();

  std::string synth_dir;
  desk::DeskCorpusOptions synth;
  auto* synth_cmd =
      app.add_subcommand("synth-corpus", "Generate the synthetic desk corpus");
  synth_cmd->add_option("--out", synth_dir, "Output directory")->required();
  synth_cmd->add_option("--sources", synth.sources, "Pristine scenes")
      ->check(CLI::Range(1, 1000));
  synth_cmd->add_option("--width", synth.width, "Image width (even)")
      ->check(CLI::Range(16, 8192));
  synth_cmd->add_option("--seed", synth.seed, "Seed");
  synth_cmd->add_option("--mos-noise", synth.mos_noise, "MOS noise amplitude")
      ->check(CLI::Range(0.0, 50.0));
  synth_cmd->add_option("--tag", synth.semantic_tag, "Semantic source tag");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "s2oiqa: usage: " << one_line(e.what()) << '\n';
    return kExitUsage;
  }

  try {
    if (*extract) return cmd_extract_stat(image, viewports, out_path, out);
    if (*train) {
      return cmd_train(manifest, path, out_path, viewports, seed, folds, tag,
                       out);
    }
    if (*score) return cmd_score(image, model_st, model_se, semantic, w, out);
    if (*evaluate) return cmd_evaluate(ev, eval_path, out);
    if (*ablate) return cmd_ablate(ab, variants, out);
    if (*baselines) return cmd_baselines(ref_path, dist_path, points, out);
    if (*confidence) return cmd_confidence(logit_files, out);
    if (*synth_cmd) return cmd_synth(synth_dir, synth, out);
  } catch (const UsageError& e) {
    err << "s2oiqa: usage: " << one_line(e.what()) << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "s2oiqa: " << error_kind_name(e.kind()) << ": " << one_line(e.what())
        << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "s2oiqa: error: " << one_line(e.what()) << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace s2::cli
