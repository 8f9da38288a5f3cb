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


#include "uavmimo/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace uavmimo
{

ReportFormat parse_format(const std::string &s)
{
    if (s == "csv")
        return ReportFormat::csv;
    if (s == "json")
        return ReportFormat::json;
    throw std::invalid_argument("unknown report format '" + s + "' (expected csv or json)");
}

std::string format_number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

void write_csv(const TrialReport &report, std::ostream &out)
{
    out << kCsvHeader << '\n';
    for (const auto &r : report.rows)
    {
        out << r.iteration << ',' << format_number(r.sum_rate) << ',' << format_number(r.capacity) << ','
            << format_number(r.bound) << ',' << format_number(r.gram_residual) << ','
            << format_number(r.mean_travel) << ',' << format_number(r.max_travel) << '\n';
    }
}

namespace
{

nlohmann::json positions_to_json(const SwarmState &s)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &p : s.positions)
        arr.push_back({p.x(), p.y(), p.z()});
    return arr;
}

SwarmState positions_from_json(const nlohmann::json &j)
{
    SwarmState s;
    for (const auto &p : j)
        s.positions.emplace_back(p.at(0).get<double>(), p.at(1).get<double>(), p.at(2).get<double>());
    return s;
}

} // namespace

nlohmann::json report_to_json(const TrialReport &report)
{
    nlohmann::json j;
    j["seed"] = report.seed;
    j["method"] = method_name(report.method);
    j["config"] = config_to_json(report.config);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &r : report.rows)
        rows.push_back({{"iteration", r.iteration},
                        {"sum_rate", r.sum_rate},
                        {"capacity", r.capacity},
                        {"bound", r.bound},
                        {"gram_residual", r.gram_residual},
                        {"mean_travel", r.mean_travel},
                        {"max_travel", r.max_travel}});
    j["rows"] = rows;
    j["per_uav_travel"] = report.per_uav_travel;
    j["final_positions"] = positions_to_json(report.final_positions);
    const auto &s = report.summary;
    j["summary"] = {{"final_sum_rate", s.final_sum_rate},
                    {"final_capacity", s.final_capacity},
                    {"final_bound", s.final_bound},
                    {"final_gram_residual", s.final_gram_residual},
                    {"mean_travel", s.mean_travel},
                    {"max_travel", s.max_travel},
                    {"total_travel", s.total_travel},
                    {"converged", s.converged},
                    {"iterations", s.iterations},
                    {"wall_time_s", s.wall_time_s}};
    return j;
}

TrialReport report_from_json(const nlohmann::json &j)
{
    TrialReport r;
    try
    {
        r.seed = j.at("seed").get<std::uint64_t>();
        r.method = parse_method(j.at("method").get<std::string>());
        r.config = config_from_json(j.at("config"));
        for (const auto &row : j.at("rows"))
        {
            TrialRow t;
            t.iteration = row.at("iteration").get<int>();
            t.sum_rate = row.at("sum_rate").get<double>();
            t.capacity = row.at("capacity").get<double>();
            t.bound = row.at("bound").get<double>();
            t.gram_residual = row.at("gram_residual").get<double>();
            t.mean_travel = row.at("mean_travel").get<double>();
            t.max_travel = row.at("max_travel").get<double>();
            r.rows.push_back(t);
        }
        r.per_uav_travel = j.at("per_uav_travel").get<std::vector<double>>();
        r.final_positions = positions_from_json(j.at("final_positions"));
        const auto &s = j.at("summary");
        r.summary.final_sum_rate = s.at("final_sum_rate").get<double>();
        r.summary.final_capacity = s.at("final_capacity").get<double>();
        r.summary.final_bound = s.at("final_bound").get<double>();
        r.summary.final_gram_residual = s.at("final_gram_residual").get<double>();
        r.summary.mean_travel = s.at("mean_travel").get<double>();
        r.summary.max_travel = s.at("max_travel").get<double>();
        r.summary.total_travel = s.at("total_travel").get<double>();
        r.summary.converged = s.at("converged").get<bool>();
        r.summary.iterations = s.at("iterations").get<int>();
        r.summary.wall_time_s = s.at("wall_time_s").get<double>();
    }
    catch (const nlohmann::json::exception &e)
    {
        throw std::invalid_argument(std::string("malformed trial report: ") + e.what());
    }
    return r;
}

nlohmann::json aggregate_to_json(const MonteCarloResult &result)
{
    nlohmann::json j;
    nlohmann::json metrics = nlohmann::json::object();
    for (const auto &[name, a] : result.metrics)
        metrics[name] = {{"mean", a.mean}, {"std", a.std}, {"min", a.min}, {"max", a.max}, {"count", a.count}};
    j["metrics"] = metrics;
    nlohmann::json trials = nlohmann::json::array();
    for (const auto &t : result.trials)
        trials.push_back({{"seed", t.seed},
                          {"final_sum_rate", t.summary.final_sum_rate},
                          {"final_bound", t.summary.final_bound},
                          {"mean_travel", t.summary.mean_travel},
                          {"max_travel", t.summary.max_travel},
                          {"converged", t.summary.converged},
                          {"iterations", t.summary.iterations}});
    j["trials"] = trials;
    nlohmann::json errors = nlohmann::json::array();
    for (const auto &e : result.errors)
        errors.push_back({{"seed", e.seed}, {"error", e.message}});
    j["errors"] = errors;
    if (!result.trials.empty())
        j["config"] = config_to_json(result.trials.front().config);
    return j;
}

nlohmann::json sweep_to_json(const std::string &param, const std::vector<SweepPoint> &points)
{
    nlohmann::json j;
    j["param"] = param;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &p : points)
    {
        nlohmann::json entry = aggregate_to_json(p.result);
        entry["value"] = p.value;
        arr.push_back(entry);
    }
    j["points"] = arr;
    return j;
}

void write_text(const std::string &text, const std::string &path)
{
    if (path == "-")
    {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out)
        throw std::runtime_error("write to '" + path + "' failed");
}

void emit_report(const TrialReport &report, ReportFormat format, const std::string &path)
{
    std::ostringstream ss;
    if (format == ReportFormat::csv)
        write_csv(report, ss);
    else
        ss << report_to_json(report).dump(2) << '\n';
    write_text(ss.str(), path);
}

void emit_aggregate(const MonteCarloResult &result, ReportFormat format, const std::string &path)
{
    std::ostringstream ss;
    if (format == ReportFormat::csv)
    {
        ss << "seed,sum_rate,capacity,bound,gram_residual,mean_travel,max_travel\n";
        for (const auto &t : result.trials)
        {
            const TrialRow &r = t.rows.back();
            ss << t.seed << ',' << format_number(r.sum_rate) << ',' << format_number(r.capacity) << ','
               << format_number(r.bound) << ',' << format_number(r.gram_residual) << ','
               << format_number(r.mean_travel) << ',' << format_number(r.max_travel) << '\n';
        }
    }
    else
    {
        ss << aggregate_to_json(result).dump(2) << '\n';
    }
    write_text(ss.str(), path);
}

} // namespace uavmimo
