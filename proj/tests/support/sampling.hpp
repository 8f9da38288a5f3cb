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

#include <algorithm>
#include <numeric>
#include <vector>

#include "uavmimo/core_model.hpp"
#include "uavmimo/metrics.hpp"
#include "uavmimo/optimal_set.hpp"

namespace sampling
{

using namespace uavmimo;

inline GroundArray reference_array()
{
    GroundArray gs;
    gs.m_x = 6;
    gs.m_z = 2;
    gs.d_x = 1.0;
    gs.d_z = 3.0;
    return gs;
}

struct Member
{
    SwarmState swarm;
    EnvConstants env;
    PlacementParams params;
};

// Lemma-1 grid at y drawn from [r - half_depth, r + half_depth], then integer
// jumps in [-max_jump, max_jump], a common shift in [-1/2, 1/2)^2 and a random
// UAV order.
inline Member random_member(Rng &rng, const GroundArray &gs, double r, double half_depth, int max_jump,
                            double lambda = 0.06)
{
    const int m = gs.size();
    std::vector<double> ys(static_cast<std::size_t>(m));
    for (auto &y : ys)
        y = rng.uniform(r - half_depth, r + half_depth);

    Member out;
    SwarmState tmp;
    for (double y : ys)
        tmp.positions.emplace_back(0.0, y, 0.0);
    out.env = env_constants(gs, tmp, lambda);

    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng.engine());

    PlacementParams &p = out.params;
    p.delta_x = rng.uniform(-0.5, 0.5);
    p.delta_z = rng.uniform(-0.5, 0.5);
    for (int n = 0; n < m; ++n)
    {
        const int slot = order[static_cast<std::size_t>(n)];
        p.grid_index.push_back({gs.row_of(slot), gs.col_of(slot)});
        p.jump_x.push_back(static_cast<int>(rng.engine()() % (2 * max_jump + 1)) - max_jump);
        p.jump_z.push_back(static_cast<int>(rng.engine()() % (2 * max_jump + 1)) - max_jump);
        p.eps.push_back(out.env.eps(ys[static_cast<std::size_t>(n)]));
    }
    out.swarm = compose_placement(p, out.env, gs);
    return out;
}

// Distance of a - b to the nearest multiple of `period`.
inline double mod_distance(double a, double b, double period)
{
    const double d = (a - b) / period;
    return std::abs(d - std::round(d)) * period;
}

// Gram residual of the normalized channel under the linearized (far-field)
// phase model, which is where the lattice orthogonality is exact.
inline double far_field_residual(const SwarmState &s, const GroundArray &gs, double lambda)
{
    ChannelMatrix h;
    h.entries.resize(gs.size(), static_cast<Eigen::Index>(s.size()));
    for (std::size_t n = 0; n < s.size(); ++n)
        for (int m = 0; m < gs.size(); ++m)
        {
            const double a = gs.row_of(m) * gs.d_x;
            const double b = gs.col_of(m) * gs.d_z;
            const double ph = 2.0 * kPi * (a * s[n].x() + b * s[n].z()) / (lambda * s[n].y());
            h.entries(m, static_cast<Eigen::Index>(n)) = std::polar(1.0, ph);
        }
    return gram_orthogonality_residual(h);
}

} // namespace sampling
