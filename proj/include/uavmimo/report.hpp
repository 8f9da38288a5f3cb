// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "uavmimo/parallel.hpp"
#include "uavmimo/trial.hpp"

namespace uavmimo
{

enum class ReportFormat
{
    csv,
    json,
};

ReportFormat parse_format(const std::string &s);

inline constexpr const char *kCsvHeader = "iteration,sum_rate,capacity,bound,gram_residual,mean_travel,max_travel";

/// Shortest-enough decimal with 9 significant digits.
std::string format_number(double v);

void write_csv(const TrialReport &report, std::ostream &out);

nlohmann::json report_to_json(const TrialReport &report);
TrialReport report_from_json(const nlohmann::json &j);

nlohmann::json aggregate_to_json(const MonteCarloResult &result);
nlohmann::json sweep_to_json(const std::string &param, const std::vector<SweepPoint> &points);

/// Writes a trial report to `path` ("-" for stdout). I/O failures throw
/// std::runtime_error naming the path.
void emit_report(const TrialReport &report, ReportFormat format, const std::string &path);

/// CSV for aggregates: one row per trial plus header; JSON: aggregate_to_json.
void emit_aggregate(const MonteCarloResult &result, ReportFormat format, const std::string &path);

void write_text(const std::string &text, const std::string &path);

} // namespace uavmimo
