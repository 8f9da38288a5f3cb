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


#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "uavmimo/parallel.hpp"
#include "uavmimo/report.hpp"
#include "uavmimo/scenario.hpp"
#include "uavmimo/trial.hpp"

using namespace uavmimo;

namespace
{

struct Common
{
    std::string config_path;
    std::string preset_name;
    std::optional<std::uint64_t> seed;
    std::string out = "-";
    std::string format = "csv";
};

void add_common(CLI::App *cmd, Common &c)
{
    cmd->add_option("--config", c.config_path, "Scenario config (flat JSON)")->check(CLI::ExistingFile);
    cmd->add_option("--preset", c.preset_name, "Preset: ideal, disturbed, massive-mimo:<M>, travel-cube:<R>");
    cmd->add_option("--seed", c.seed, "Run this seed instead of the configured list");
    cmd->add_option("--out", c.out, "Output path, - for stdout");
    cmd->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

ScenarioConfig resolve(const Common &c)
{
    if (!c.config_path.empty() && !c.preset_name.empty())
        throw std::invalid_argument("--config and --preset are mutually exclusive");
    ScenarioConfig cfg = !c.config_path.empty() ? load_config(c.config_path)
                         : !c.preset_name.empty() ? preset(c.preset_name)
                                                  : ScenarioConfig{};
    if (c.seed)
        cfg.seeds = {*c.seed};
    cfg.validate();
    return cfg;
}

int fail(const char *kind, const std::string &message, int code)
{
    nlohmann::json err = {{"error", {{"type", kind}, {"message", message}}}};
    std::cerr << err.dump() << std::endl;
    return code;
}

void run_single(const Common &c, Method method)
{
    ScenarioConfig cfg = resolve(c);
    cfg.method = method;
    const TrialReport rep = run_trial(cfg, cfg.seeds.front());
    emit_report(rep, parse_format(c.format), c.out);
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"LOS MIMO UAV swarm placement simulator"};
    app.require_subcommand(1);

    Common cent_opts, ff_opts, base_opts, sweep_opts, mc_opts;

    auto *cent = app.add_subcommand("centralized", "Minimal-travel placement by block coordinate descent");
    add_common(cent, cent_opts);

    auto *ff = app.add_subcommand("force-field", "Distributed Force Field repositioning");
    add_common(ff, ff_opts);

    auto *base = app.add_subcommand("baseline", "Evaluate the initial swarm or the classical array layout");
    add_common(base, base_opts);
    std::string base_method = "init";
    base->add_option("--method", base_method, "init or ura")->check(CLI::IsMember({"init", "ura"}));

    auto *sweep = app.add_subcommand("sweep", "Monte Carlo over a grid of one config field");
    add_common(sweep, sweep_opts);
    std::string sweep_param;
    std::vector<std::string> sweep_values;
    std::string sweep_method;
    sweep->add_option("--param", sweep_param, "Config field to vary")->required();
    sweep->add_option("--values", sweep_values, "Values (JSON literals)")->required();
    sweep->add_option("--method", sweep_method, "init, ura, centralized or force_field");

    auto *mc = app.add_subcommand("montecarlo", "Monte Carlo over the configured seeds");
    add_common(mc, mc_opts);
    std::string mc_method;
    mc->add_option("--method", mc_method, "init, ura, centralized or force_field");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        return fail("usage", e.what(), 2);
    }

    try
    {
        if (*cent)
            run_single(cent_opts, Method::centralized);
        else if (*ff)
            run_single(ff_opts, Method::force_field);
        else if (*base)
            run_single(base_opts, parse_method(base_method));
        else if (*mc)
        {
            ScenarioConfig cfg = resolve(mc_opts);
            if (!mc_method.empty())
                cfg.method = parse_method(mc_method);
            emit_aggregate(monte_carlo(cfg), parse_format(mc_opts.format), mc_opts.out);
        }
        else if (*sweep)
        {
            ScenarioConfig cfg = resolve(sweep_opts);
            if (!sweep_method.empty())
                cfg.method = parse_method(sweep_method);
            std::vector<nlohmann::json> values;
            for (const auto &v : sweep_values)
            {
                const auto parsed = nlohmann::json::parse(v, nullptr, false);
                values.push_back(parsed.is_discarded() ? nlohmann::json(v) : parsed);
            }
            const auto points = sweep_parameter(cfg, sweep_param, values);
            if (parse_format(sweep_opts.format) == ReportFormat::json)
            {
                write_text(sweep_to_json(sweep_param, points).dump(2) + "\n", sweep_opts.out);
            }
            else
            {
                std::string text = "value,trials,errors,sum_rate_mean,sum_rate_std,bound_mean,mean_travel_mean,"
                                   "max_travel_max\n";
                for (const auto &p : points)
                {
                    const auto &m = p.result.metrics;
                    text += p.value.dump() + "," + std::to_string(p.result.trials.size()) + "," +
                            std::to_string(p.result.errors.size()) + "," + format_number(m.at("sum_rate").mean) +
                            "," + format_number(m.at("sum_rate").std) + "," + format_number(m.at("bound").mean) +
                            "," + format_number(m.at("mean_travel").mean) + "," +
                            format_number(m.at("max_travel").max) + "\n";
                }
                write_text(text, sweep_opts.out);
            }
        }
    }
    catch (const std::invalid_argument &e)
    {
        return fail("invalid_argument", e.what(), 2);
    }
    catch (const std::exception &e)
    {
        return fail("runtime", e.what(), 1);
    }
    return 0;
}
