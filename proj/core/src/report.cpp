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

#include "s2/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "s2/error.hpp"

namespace s2::eval {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string fixed(double v, int digits) {
  if (!std::isfinite(v)) return format_real(v);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

void write_fields(std::ostringstream& out, const std::string& prefix,
                  const EvalReport& r) {
  out << prefix << "paths " << path_name(r.paths) << '\n';
  out << prefix << "split " << split_name(r.split) << '\n';
  out << prefix << "pooling " << pooling_name(r.pooling) << '\n';
  out << prefix << "seed " << r.seed << '\n';
  out << prefix << "n_images " << r.n_images << '\n';
  out << prefix << "n_splits " << r.n_splits << '\n';
  out << prefix << "aggregation " << r.aggregation << '\n';
  out << prefix << "median_srocc " << format_real(r.srocc) << '\n';
  out << prefix << "median_plcc " << format_real(r.plcc) << '\n';
  out << prefix << "median_rmse " << format_real(r.rmse) << '\n';
  out << prefix << "median_w " << format_real(r.median_w) << '\n';
  for (std::size_t k = 0; k < r.logistic_params.size(); ++k) {
    out << prefix << "logistic_beta" << (k + 1) << ' '
        << format_real(r.logistic_params[k]) << '\n';
  }
  std::size_t fitted = 0;
  for (const auto& rep : r.repeats) fitted += rep.logistic_applied ? 1 : 0;
  out << prefix << "logistic_fitted_repeats " << fitted << '\n';
}

}  // namespace

std::string format_table(
    const std::vector<std::pair<std::string, EvalReport>>& rows) {
  const std::vector<std::string> header = {"variant", "paths", "splits",
                                           "SROCC",   "PLCC",  "RMSE",
                                           "w"};
  std::vector<std::vector<std::string>> cells = {header};
  for (const auto& [name, r] : rows) {
    cells.push_back({name, path_name(r.paths), std::to_string(r.n_splits),
                     fixed(r.srocc, 4), fixed(r.plcc, 4), fixed(r.rmse, 4),
                     fixed(r.median_w, 2)});
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (std::size_t c = 0; c < cells[r].size(); ++c) {
      const auto& s = cells[r][c];
      const std::string pad(width[c] - s.size(), ' ');
      // First column left-aligned, numbers right-aligned.
      out << (c == 0 ? s + pad : pad + s);
      out << (c + 1 < cells[r].size() ? "  " : "\n");
    }
    if (r == 0) {
      std::size_t total = 0;
      for (std::size_t c = 0; c < width.size(); ++c) total += width[c];
      out << std::string(total + 2 * (width.size() - 1), '-') << '\n';
    }
  }
  return out.str();
}

std::string format_report_document(const EvalReport& report,
                                   const std::string& variant) {
  std::ostringstream out;
  out << kReportHeader << '\n';
  if (!variant.empty()) out << "variant " << variant << '\n';
  write_fields(out, "", report);
  return out.str();
}

std::string format_ablation_document(const std::vector<AblationRow>& rows) {
  std::ostringstream out;
  out << kReportHeader << '\n';
  out << "variants " << rows.size() << '\n';
  for (const auto& row : rows) {
    const std::string prefix = row.variant + ".";
    out << prefix << "st_dims " << row.st_dims << '\n';
    out << prefix << "se_dims " << row.se_dims << '\n';
    write_fields(out, prefix, row.report);
  }
  return out.str();
}

std::string format_repeats_csv(const EvalReport& report) {
  std::ostringstream out;
  out << "seed,srocc,plcc,rmse\n";
  for (const auto& r : report.repeats) {
    out << r.seed << ',' << format_real(r.srocc) << ','
        << format_real(r.plcc) << ',' << format_real(r.rmse) << '\n';
  }
  return out.str();
}

std::map<std::string, std::string> parse_report_document(
    std::string_view text) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (line_no == 1) {
      if (line != kReportHeader) {
        throw SchemaError("report:1: expected header '" +
                          std::string(kReportHeader) + "'");
      }
      continue;
    }
    if (line.empty()) continue;
    const auto sp = line.find(' ');
    if (sp == std::string_view::npos) {
      throw SchemaError("report:" + std::to_string(line_no) +
                        ": expected 'key value'");
    }
    out[std::string(line.substr(0, sp))] = std::string(line.substr(sp + 1));
  }
  if (line_no == 0) throw SchemaError("report: empty document");
  return out;
}

}  // namespace s2::eval
