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

// Text renderings of evaluation results. The machine-readable document is
// line-oriented "key value" text after an "s2-report 1" header; reals are
// printed with 17 significant digits so a report round-trips exactly.

#ifndef S2_REPORT_HPP_
#define S2_REPORT_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "s2/ablation.hpp"
#include "s2/protocol.hpp"

namespace s2::eval {

inline constexpr std::string_view kReportHeader = "s2-report 1";

std::string format_real(double v);

// Aligned, human-readable table with one row per named report.
std::string format_table(
    const std::vector<std::pair<std::string, EvalReport>>& rows);

std::string format_report_document(const EvalReport& report,
                                   const std::string& variant = "");
std::string format_ablation_document(const std::vector<AblationRow>& rows);

// seed,srocc,plcc,rmse per repeat.
std::string format_repeats_csv(const EvalReport& report);

// Parses "key value" lines of a report document (repeated keys keep the last
// value). Throws SchemaError on a missing header or a line without a space.
std::map<std::string, std::string> parse_report_document(std::string_view text);

}  // namespace s2::eval

#endif  // S2_REPORT_HPP_
