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

#include <vector>

#include "uavmimo/core_model.hpp"

namespace uavmimo
{

/// Per (slot, UAV) offsets from the initial position to the nearest lattice
/// point of that slot at delta = 0, wrapped into [0, S * eps_n).
struct RelaxedInstance
{
    Eigen::MatrixXd tilde_x; // M x N
    Eigen::MatrixXd tilde_z; // M x N
    std::vector<double> eps;
    EnvConstants env;
    SwarmState init;

    int slots() const { return static_cast<int>(tilde_x.rows()); }
    int uavs() const { return static_cast<int>(tilde_x.cols()); }
};

struct ShiftResult
{
    double delta_x = 0.0;
    double delta_z = 0.0;
    double objective = 0.0; // meters, jumps frozen
};

struct OptimizedPlacement
{
    std::vector<int> assignment; // UAV n -> slot m
    double delta_x = 0.0;
    double delta_z = 0.0;
    std::vector<int> jump_x; // in {-1, 0}
    std::vector<int> jump_z;
    SwarmState final_positions;
    double objective = 0.0;
    std::vector<double> per_uav_travel;
    int iterations = 0;
    bool converged = false;

    std::vector<double> objective_history;     // one entry per BCD iteration
    std::vector<SwarmState> position_history;  // placement after each iteration
    FarFieldReport far_field;
};

struct BcdOptions
{
    double tol = 1e-5;
    int max_iters = 5;
    double far_field_threshold = 0.1;
};

RelaxedInstance build_relaxed_instance(const SwarmState &init, const EnvConstants &env, const GroundArray &gs);

/// Integer f minimizing (tilde + f*s*eps + delta*s*eps)^2; always 0 or -1 in range.
int nearest_jump(double tilde, double delta, double s, double eps);

struct AssignmentStep
{
    std::vector<int> assignment;
    double cost = 0.0;
};

AssignmentStep assignment_step(const RelaxedInstance &inst, double delta_x, double delta_z);

/// Minimizes total travel over (delta_x, delta_z) in [-1/2, 1/2]^2 with the
/// jumps frozen at (incumbent_x, incumbent_z).
ShiftResult shift_step(const RelaxedInstance &inst, const std::vector<int> &assignment, double incumbent_x = 0.0,
                       double incumbent_z = 0.0);

/// Total travel with the jumps of each UAV frozen as given.
double shift_objective(const RelaxedInstance &inst, const std::vector<int> &assignment,
                       const std::vector<int> &jump_x, const std::vector<int> &jump_z, double delta_x,
                       double delta_z);

/// Total travel with jumps chosen by nearest_jump at (delta_x, delta_z).
double relaxed_objective(const RelaxedInstance &inst, const std::vector<int> &assignment, double delta_x,
                         double delta_z);

OptimizedPlacement bcd_solve(const SwarmState &init, const EnvConstants &env, const GroundArray &gs,
                             const BcdOptions &opts = {});

double travel_bound_centralized(double eps_n, const EnvConstants &env);

} // namespace uavmimo
