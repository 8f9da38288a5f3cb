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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "uavmimo/trial.hpp"

namespace uavmimo
{

struct Aggregate
{
    double mean = 0.0;
    double std = 0.0; // sample standard deviation, 0 for one trial
    double min = 0.0;
    double max = 0.0;
    int count = 0;
};

struct TrialError
{
    std::uint64_t seed = 0;
    std::string message;
};

struct MonteCarloResult
{
    std::vector<TrialReport> trials; // successful trials in seed order
    std::map<std::string, Aggregate> metrics;
    std::vector<TrialError> errors;
};

enum class Execution
{
    serial,
    parallel,
};

/// Runs every seed of `cfg` and aggregates the final-row metrics:
/// sum_rate, capacity, bound, gram_residual, mean_travel, max_travel.
/// Trial failures are collected, not thrown. Both execution modes produce
/// bit-identical results.
MonteCarloResult monte_carlo(const ScenarioConfig &cfg, Execution mode = Execution::parallel);

/// Reference implementation: plain loop over seeds.
MonteCarloResult monte_carlo_serial(const ScenarioConfig &cfg);

Aggregate aggregate(const std::vector<double> &values);

struct SweepPoint
{
    nlohmann::json value;
    MonteCarloResult result;
};

/// Monte Carlo at each value of one flat config field.
std::vector<SweepPoint> sweep_parameter(const ScenarioConfig &cfg, const std::string &param,
                                        const std::vector<nlohmann::json> &values,
                                        Execution mode = Execution::parallel);

int worker_threads();

} // namespace uavmimo
