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

#include "s2/manifest.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "s2/binary_io.hpp"
#include "s2/error.hpp"

namespace s2 {

const char* distortion_name(Distortion d) {
  switch (d) {
    case Distortion::kJpeg: return "JPEG";
    case Distortion::kAvc: return "AVC";
    case Distortion::kHevc: return "HEVC";
    case Distortion::kOther: return "OTHER";
  }
  return "OTHER";
}

Distortion parse_distortion(std::string_view name) {
  if (name == "JPEG") return Distortion::kJpeg;
  if (name == "AVC") return Distortion::kAvc;
  if (name == "HEVC") return Distortion::kHevc;
  if (name == "OTHER") return Distortion::kOther;
  throw SchemaError("unknown distortion '" + std::string(name) +
                    "' (expected JPEG, AVC, HEVC or OTHER)");
}

std::filesystem::path DatasetManifest::resolve(
    const std::filesystem::path& p) const {
  return p.is_absolute() ? p : base_dir / p;
}

std::filesystem::path DatasetManifest::image(std::size_t i) const {
  return resolve(entries.at(i).image_path);
}

std::optional<std::filesystem::path> DatasetManifest::semantic(
    std::size_t i, std::string_view tag) const {
  const auto& p = entries.at(i).semantic_feature_path;
  if (!p) return std::nullopt;
  std::string s = p->string();
  for (auto pos = s.find(kTagPlaceholder); pos != std::string::npos;
       pos = s.find(kTagPlaceholder, pos + tag.size())) {
    s.replace(pos, kTagPlaceholder.size(), tag);
  }
  return resolve(s);
}

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

}  // namespace

DatasetManifest parse_manifest(std::string_view text,
                               const std::filesystem::path& base_dir,
                               const std::string& origin) {
  DatasetManifest m;
  m.base_dir = base_dir;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto fail = [&](const std::string& msg) {
      throw SchemaError(origin + ":" + std::to_string(line_no) + ": " + msg);
    };
    if (!header_seen) {
      if (line != kManifestHeader) {
        fail("expected header '" + std::string(kManifestHeader) + "'");
      }
      header_seen = true;
      continue;
    }
    if (line.empty() || line.front() == '#') continue;

    const auto fields = split_tabs(line);
    if (fields.size() != 5) {
      fail("expected 5 tab-separated fields, found " +
           std::to_string(fields.size()));
    }
    ManifestEntry e;
    if (fields[0].empty()) fail("empty image path");
    e.image_path = std::string(fields[0]);

    double mos = 0.0;
    const auto [ptr, ec] =
        std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), mos);
    if (ec != std::errc() || ptr != fields[1].data() + fields[1].size()) {
      fail("MOS '" + std::string(fields[1]) + "' is not a number");
    }
    if (!(mos >= 0.0 && mos <= 100.0)) {
      fail("MOS " + std::string(fields[1]) + " outside [0, 100]");
    }
    e.mos = mos;

    if (fields[2].empty()) fail("empty source id");
    e.source_id = std::string(fields[2]);
    try {
      e.distortion = parse_distortion(fields[3]);
    } catch (const SchemaError& err) {
      fail(err.what());
    }
    if (fields[4].empty()) fail("empty semantic path (use '-' for none)");
    if (fields[4] != "-") e.semantic_feature_path = std::string(fields[4]);

    if (!seen.insert(e.image_path.lexically_normal().string()).second) {
      fail("duplicate image path '" + e.image_path.string() + "'");
    }
    m.entries.push_back(std::move(e));
  }
  if (!header_seen) {
    throw SchemaError(origin + ":1: expected header '" +
                      std::string(kManifestHeader) + "'");
  }
  return m;
}

DatasetManifest read_manifest(const std::filesystem::path& path) {
  const auto bytes = read_file_bytes(path);
  const std::string text(bytes.begin(), bytes.end());
  return parse_manifest(text, path.parent_path(), path.string());
}

std::string format_manifest(const DatasetManifest& manifest) {
  std::ostringstream out;
  out << kManifestHeader << '\n';
  out << "# image\tmos\tsource\tdistortion\tsemantic\n";
  for (const auto& e : manifest.entries) {
    char mos[64];
    std::snprintf(mos, sizeof mos, "%.17g", e.mos);
    out << e.image_path.string() << '\t' << mos << '\t' << e.source_id << '\t'
        << distortion_name(e.distortion) << '\t'
        << (e.semantic_feature_path ? e.semantic_feature_path->string() : "-")
        << '\n';
  }
  return out.str();
}

void write_manifest(const std::filesystem::path& path,
                    const DatasetManifest& manifest) {
  write_file_atomic(path, format_manifest(manifest));
}

}  // namespace s2
