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

// Dataset manifests are line-oriented text:
//
//   s2-manifest 1
//   # image<TAB>mos<TAB>source<TAB>distortion<TAB>semantic-fc1 or "-"
//   img/a_q10.png	23.5	a	JPEG	sem/a_q10.{tag}.s2fv
//
// Blank lines and lines starting with '#' are ignored. Relative paths are
// resolved against the manifest's directory. A "{tag}" in the semantic path
// is replaced by the extractor tag requested at load time, so several
// architectures can share one manifest.

#ifndef S2_MANIFEST_HPP_
#define S2_MANIFEST_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace s2 {

inline constexpr std::string_view kManifestHeader = "s2-manifest 1";
inline constexpr std::string_view kTagPlaceholder = "{tag}";

enum class Distortion { kJpeg, kAvc, kHevc, kOther };

const char* distortion_name(Distortion d);
// Throws SchemaError for an unknown name.
Distortion parse_distortion(std::string_view name);

struct ManifestEntry {
  std::filesystem::path image_path;
  double mos = 0.0;
  std::string source_id;
  Distortion distortion = Distortion::kOther;
  std::optional<std::filesystem::path> semantic_feature_path;

  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

struct DatasetManifest {
  std::vector<ManifestEntry> entries;
  std::filesystem::path base_dir;

  std::size_t size() const { return entries.size(); }
  std::filesystem::path resolve(const std::filesystem::path& p) const;
  std::filesystem::path image(std::size_t i) const;
  // Semantic fc1 path of entry i with "{tag}" substituted. Empty optional
  // when the entry has none.
  std::optional<std::filesystem::path> semantic(std::size_t i,
                                                std::string_view tag) const;
};

// Throws SchemaError carrying "origin:line: message" for any malformed line,
// an out-of-range MOS, an unknown distortion or a duplicate image path.
DatasetManifest parse_manifest(std::string_view text,
                               const std::filesystem::path& base_dir,
                               const std::string& origin = "<manifest>");
DatasetManifest read_manifest(const std::filesystem::path& path);

// Paths are written exactly as stored.
std::string format_manifest(const DatasetManifest& manifest);
void write_manifest(const std::filesystem::path& path,
                    const DatasetManifest& manifest);

}  // namespace s2

#endif  // S2_MANIFEST_HPP_
