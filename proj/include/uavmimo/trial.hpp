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
#include <vector>

#include "uavmimo/scenario.hpp"

namespace uavmimo
{

struct TrialRow
{
    int iteration = 0;
    double sum_rate = 0.0;
    double capacity = 0.0;
    double bound = 0.0;
    double gram_residual = 0.0;
    double mean_travel = 0.0;
    double max_travel = 0.0;
};

struct TrialSummary
{
    double final_sum_rate = 0.0;
    double final_capacity = 0.0;
    double final_bound = 0.0;
    double final_gram_residual = 0.0;
    double mean_travel = 0.0;
    double max_travel = 0.0;
    double total_travel = 0.0;
    bool converged = false;
    int iterations = 0;
    double wall_time_s = 0.0;
};

struct TrialReport
{
    std::uint64_t seed = 0;
    Method method = Method::centralized;
    ScenarioConfig config;
    std::vector<TrialRow> rows;
    std::vector<double> per_uav_travel;
    SwarmState final_positions;
    TrialSummary summary;
};

/// Runs one method on the scenario drawn from `seed`. Every row is scored on
/// a fresh exact-distance channel with the configured disturbances; row k uses
/// disturbance round k.
TrialReport run_trial(const ScenarioConfig &cfg, std::uint64_t seed);

/// Same, on an already built scenario.
TrialReport run_trial(const ScenarioConfig &cfg, const Scenario &scenario, std::uint64_t seed);

} // namespace uavmimo
