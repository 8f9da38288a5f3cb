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

#include <optional>
#include <vector>

#include "uavmimo/core_model.hpp"

namespace uavmimo
{

struct GridIndex
{
    int i = 0;
    int j = 0;

    bool operator==(const GridIndex &) const = default;
};

/// Parameters of one member of the capacity-maximizing set:
///   x_n = (i_n / M_x + f_n + delta_x) * S_x * eps_n
///   z_n = (j_n / M_z + g_n + delta_z) * S_z * eps_n
struct PlacementParams
{
    std::vector<GridIndex> grid_index; // per UAV
    std::vector<int> jump_x;           // f_n
    std::vector<int> jump_z;           // g_n
    double delta_x = 0.0;
    double delta_z = 0.0;
    std::vector<double> eps;

    // UAV n -> slot m = i_n * M_z + j_n.
    std::vector<int> permutation(const GroundArray &gs) const;
};

struct MembershipReport
{
    bool member = false;
    double worst_mismatch = 0.0; // in lattice units of S_x*eps, S_z*eps
    std::optional<PlacementParams> recovered;
};

/// Uniform grid with UAV n = i*M_z + j at x = i*lambda*y_n/(M_x d_x),
/// z = j*lambda*y_n/(M_z d_z). `y_coords` must have M entries.
SwarmState lemma1_grid(const EnvConstants &env, const GroundArray &gs, const std::vector<double> &y_coords);

SwarmState apply_scaled_shift(const SwarmState &swarm, const EnvConstants &env, double delta_x, double delta_z);

SwarmState apply_integer_jumps(const SwarmState &swarm, const EnvConstants &env, const std::vector<int> &f,
                               const std::vector<int> &g);

/// Positions for explicit parameters; y_n = eps_n * R.
SwarmState compose_placement(const PlacementParams &params, const EnvConstants &env, const GroundArray &gs);

/// Decides whether every UAV sits on the shifted lattice with distinct slots.
///
/// The common shift is only identifiable modulo one grid pitch, so the
/// recovered delta is canonical in [-1/(2 M_x), 1/(2 M_x)) x [-1/(2 M_z), 1/(2 M_z))
/// and the slot labels absorb the remainder.
MembershipReport membership_test(const SwarmState &swarm, const EnvConstants &env, const GroundArray &gs,
                                 double tol);

/// Classical array layout: common y at the mean range, grid pitch at eps = 1,
/// grid centroid on the swarm x-z centroid, UAVs matched to slots by minimum
/// total 3-D distance.
SwarmState ura_baseline(const SwarmState &init, const EnvConstants &env, const GroundArray &gs);

/// Circular distance of `v` to the nearest integer, in [0, 1/2].
double circular_frac_distance(double v);

/// v - floor(v), in [0, 1).
double frac(double v);

} // namespace uavmimo
