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


#include "uavmimo/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace uavmimo
{

namespace
{

const char *const kMetricNames[] = {"sum_rate", "capacity", "bound", "gram_residual", "mean_travel", "max_travel"};

struct Slot
{
    std::optional<TrialReport> report;
    std::string error;
};

Slot run_one(const ScenarioConfig &cfg, std::uint64_t seed)
{
    Slot s;
    try
    {
        s.report = run_trial(cfg, seed);
    }
    catch (const std::exception &e)
    {
        s.error = e.what();
    }
    return s;
}

MonteCarloResult collect(const ScenarioConfig &cfg, std::vector<Slot> &slots)
{
    MonteCarloResult res;
    std::vector<std::vector<double>> values(std::size(kMetricNames));
    for (std::size_t i = 0; i < slots.size(); ++i)
    {
        if (!slots[i].report)
        {
            res.errors.push_back({cfg.seeds[i], slots[i].error});
            continue;
        }
        const TrialRow &last = slots[i].report->rows.back();
        const double v[] = {last.sum_rate, last.capacity, last.bound, last.gram_residual, last.mean_travel,
                            last.max_travel};
        for (std::size_t k = 0; k < values.size(); ++k)
            values[k].push_back(v[k]);
        res.trials.push_back(std::move(*slots[i].report));
    }
    for (std::size_t k = 0; k < values.size(); ++k)
        res.metrics[kMetricNames[k]] = aggregate(values[k]);
    return res;
}

} // namespace

Aggregate aggregate(const std::vector<double> &values)
{
    Aggregate a;
    a.count = static_cast<int>(values.size());
    if (values.empty())
        return a;
    double sum = 0.0;
    for (double v : values)
        sum += v;
    a.mean = sum / static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values)
        ss += (v - a.mean) * (v - a.mean);
    a.std = values.size() > 1 ? std::sqrt(ss / static_cast<double>(values.size() - 1)) : 0.0;
    a.min = *std::min_element(values.begin(), values.end());
    a.max = *std::max_element(values.begin(), values.end());
    return a;
}

MonteCarloResult monte_carlo_serial(const ScenarioConfig &cfg)
{
    cfg.validate();
    std::vector<Slot> slots;
    slots.reserve(cfg.seeds.size());
    for (std::uint64_t seed : cfg.seeds)
        slots.push_back(run_one(cfg, seed));
    return collect(cfg, slots);
}

MonteCarloResult monte_carlo(const ScenarioConfig &cfg, Execution mode)
{
    if (mode == Execution::serial)
        return monte_carlo_serial(cfg);
    cfg.validate();
    const auto n = static_cast<long>(cfg.seeds.size());
    std::vector<Slot> slots(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i)
        slots[static_cast<std::size_t>(i)] = run_one(cfg, cfg.seeds[static_cast<std::size_t>(i)]);
    return collect(cfg, slots);
}

std::vector<SweepPoint> sweep_parameter(const ScenarioConfig &cfg, const std::string &param,
                                        const std::vector<nlohmann::json> &values, Execution mode)
{
    const nlohmann::json base = config_to_json(cfg);
    if (!base.contains(param))
        throw std::invalid_argument("unknown sweep parameter '" + param + "'");
    std::vector<SweepPoint> out;
    out.reserve(values.size());
    for (const auto &v : values)
    {
        nlohmann::json j = base;
        j[param] = v;
        out.push_back({v, monte_carlo(config_from_json(j), mode)});
    }
    return out;
}

int worker_threads()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace uavmimo
