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
#include <string>
#include <vector>

#include <json.hpp>

#include "uavmimo/core_model.hpp"
#include "uavmimo/metrics.hpp"

namespace uavmimo
{

enum class Method
{
    init,
    ura,
    centralized,
    force_field,
};

std::string method_name(Method m);
Method parse_method(const std::string &s);

/// Flat experiment description. Physical quantities in SI; dB fields carry a
/// `_db`/`_dbm` suffix. Defaults are the ideal desk-scale scenario.
struct ScenarioConfig
{
    double frequency_hz = 5e9;
    int m_x = 6;
    int m_z = 2;
    double d_x = 1.0;
    double d_z = 3.0;
    double gs_height = 10.0;
    double elevation_tilt = 0.043;
    double roi_distance = 2000.0;
    double box_x = 10.0;
    double box_y = 300.0;
    double box_z = 300.0;
    int n_uavs = 12;

    double tx_power_dbm = 10.0;
    double noise_psd_dbm_hz = -174.0;
    double bandwidth_hz = 1e6;
    double noise_figure_db = 3.0;

    double rician_k_db = kInfinity;
    double shadowing_sigma_db = 0.0;
    int est_training_symbols = 0;
    double motion_sigma = 0.0;
    std::uint64_t disturbance_seed = 0;

    std::vector<std::uint64_t> seeds{1};
    Method method = Method::centralized;

    double ff_k_p = 0.0; // x-axis gain; 0 selects ff_kp_fraction of the guarantee bound
    double ff_kp_fraction = 0.3;
    int ff_iterations = 100;
    double ff_stall_threshold = 0.0;

    double bcd_tol = 1e-5;
    int bcd_max_iters = 5;
    double far_field_threshold = 0.1;

    GroundArray ground_array() const;
    LinkBudget link_budget() const;
    DisturbanceConfig disturbances() const;
    double wavelength() const;

    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

nlohmann::json config_to_json(const ScenarioConfig &cfg);
ScenarioConfig config_from_json(const nlohmann::json &j);
ScenarioConfig load_config(const std::string &path);

/// Named presets: `ideal`, `disturbed`, `massive-mimo:<M>`, `travel-cube:<R>`.
ScenarioConfig preset(const std::string &name);

/// M_x x M_z factorization for M antennas: M_x >= M_z with |M_x/M_z - 2|
/// smallest, larger M_x on ties.
void massive_mimo_split(int m, int &m_x, int &m_z);

struct Scenario
{
    SwarmState init; // ground-station frame
    GroundArray gs;
    EnvConstants env;
    LinkBudget budget;
    DisturbanceConfig disturbances;
};

/// Draws the initial swarm uniformly in the box centered on boresight at the
/// configured range and moves it into the ground-station frame.
Scenario build_scenario(const ScenarioConfig &cfg, std::uint64_t seed);

} // namespace uavmimo
