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
#include <optional>
#include <vector>

#include "uavmimo/core_model.hpp"
#include "uavmimo/metrics.hpp"
#include "uavmimo/optimal_set.hpp"

namespace uavmimo
{

enum class Axis
{
    x,
    z,
};

/// Phase difference of one UAV across adjacent ground antennas, in [-pi, pi).
/// x uses elements (0,0)-(1,0), z uses (0,0)-(0,1); an axis with a single
/// element reports 0.
struct PhaseDiff
{
    double x = 0.0;
    double z = 0.0;
};

struct FFAgent
{
    int uav_index = 0;
    GridIndex grid;
    int x_neighbor = -1; // agent index, -1 for none
    int z_neighbor = -1;
    double phi_x = 0.0; // unwrapped states
    double phi_z = 0.0;
    double prev_measured_x = 0.0;
    double prev_measured_z = 0.0;
    double psi_x = 0.0; // targets
    double psi_z = 0.0;
    bool primed = false; // unwrapped states hold a value
    Vec3 position = Vec3::Zero();

    bool anchor() const { return grid.i == 0 && grid.j == 0; }
};

struct FFGains
{
    double x = 0.0;
    double z = 0.0;
};

struct FFConfig
{
    FFGains k_p;
    int iterations = 100;
    double stall_threshold = 0.0; // meters; 0 disables the early stop
};

struct FFTrajectory
{
    std::vector<SwarmState> positions; // commanded, rows 0..iterations
    std::vector<RateReport> rates;
    std::vector<double> per_uav_travel;
    std::vector<FFAgent> agents;
    double max_state_transition = 0.0; // largest per-round |Phi[k] - Phi[k-1]|
    int iterations_run = 0;
    bool stalled = false;
};

PhaseDiff phase_differences(const Eigen::Ref<const Eigen::VectorXcd> &column, const GroundArray &gs);

/// Targets for grid slot (i, j): 0 on the first line of each axis, 2*pi/M otherwise.
PhaseDiff phase_targets(const GroundArray &gs, GridIndex grid);

/// Orders UAVs onto an m_x' x m_z' sub-grid by circular x then z phase difference and
/// wires neighbor links toward the anchor. Targets use the full array.
std::vector<FFAgent> init_formation(const ChannelMatrix &h_est, const GroundArray &gs, int grid_m_x, int grid_m_z);
std::vector<FFAgent> init_formation(const ChannelMatrix &h_est, const GroundArray &gs);

double measure_state(double own_dphi, double neighbor_dphi);

double unwrap_state(double measured, double prev_unwrapped, double prev_measured);

double controller_step(const FFAgent &agent, Axis axis, double k_p);

/// One round of a single agent. Reads only its own channel column, the phase
/// differences its neighbors share, and its stored state.
struct AgentUpdate
{
    FFAgent next;
    double dx = 0.0;
    double dz = 0.0;
    double transition_x = 0.0;
    double transition_z = 0.0;
};
AgentUpdate agent_step(const FFAgent &agent, const Eigen::Ref<const Eigen::VectorXcd> &own_column,
                       const GroundArray &gs, const std::optional<PhaseDiff> &x_message,
                       const std::optional<PhaseDiff> &z_message, const FFGains &gains);

/// Per-axis gain below which the cascade is guaranteed to converge.
FFGains kp_guarantee_bound(const SwarmState &swarm, const EnvConstants &env);

double travel_bound_ff(double eps_anchor, double eps_n, const EnvConstants &env);

/// Synchronous rounds: realize channel, exchange phase differences, update
/// states, move all non-anchor agents. Row k holds the placement after k moves.
FFTrajectory run_force_field(const SwarmState &init, const GroundArray &gs, const EnvConstants &env,
                             const FFConfig &cfg, const DisturbanceConfig &disturbances, const LinkBudget &budget,
                             std::uint64_t trial_seed);

} // namespace uavmimo
