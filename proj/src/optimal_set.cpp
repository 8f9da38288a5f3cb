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


#include "uavmimo/optimal_set.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "uavmimo/assignment.hpp"

namespace uavmimo
{

double frac(double v)
{
    const double f = v - std::floor(v);
    return f >= 1.0 ? 0.0 : f;
}

double circular_frac_distance(double v)
{
    return std::abs(v - std::round(v));
}

std::vector<int> PlacementParams::permutation(const GroundArray &gs) const
{
    std::vector<int> out;
    out.reserve(grid_index.size());
    for (const auto &g : grid_index)
        out.push_back(gs.index(g.i, g.j));
    return out;
}

SwarmState lemma1_grid(const EnvConstants &env, const GroundArray &gs, const std::vector<double> &y_coords)
{
    gs.validate();
    if (y_coords.size() != static_cast<std::size_t>(gs.size()))
        throw std::invalid_argument("lemma1_grid: need one y coordinate per grid slot");
    SwarmState s;
    s.positions.reserve(y_coords.size());
    for (int m = 0; m < gs.size(); ++m)
    {
        const double y = y_coords[static_cast<std::size_t>(m)];
        if (!(y > 0.0))
            throw std::invalid_argument("lemma1_grid: y must be positive");
        const double x = gs.row_of(m) * env.wavelength * y / (gs.m_x * gs.d_x);
        const double z = gs.col_of(m) * env.wavelength * y / (gs.m_z * gs.d_z);
        s.positions.emplace_back(x, y, z);
    }
    return s;
}

SwarmState apply_scaled_shift(const SwarmState &swarm, const EnvConstants &env, double delta_x, double delta_z)
{
    SwarmState out = swarm;
    for (auto &p : out.positions)
    {
        const double e = env.eps(p.y());
        p.x() += delta_x * env.s_x * e;
        p.z() += delta_z * env.s_z * e;
    }
    return out;
}

SwarmState apply_integer_jumps(const SwarmState &swarm, const EnvConstants &env, const std::vector<int> &f,
                               const std::vector<int> &g)
{
    if (f.size() != swarm.size() || g.size() != swarm.size())
        throw std::invalid_argument("apply_integer_jumps: jump lists must match the swarm size");
    SwarmState out = swarm;
    for (std::size_t n = 0; n < out.size(); ++n)
    {
        const double e = env.eps(out[n].y());
        out[n].x() += f[n] * env.s_x * e;
        out[n].z() += g[n] * env.s_z * e;
    }
    return out;
}

SwarmState compose_placement(const PlacementParams &params, const EnvConstants &env, const GroundArray &gs)
{
    const std::size_t n_total = params.grid_index.size();
    if (params.jump_x.size() != n_total || params.jump_z.size() != n_total || params.eps.size() != n_total)
        throw std::invalid_argument("compose_placement: inconsistent parameter lengths");
    SwarmState s;
    s.positions.reserve(n_total);
    for (std::size_t n = 0; n < n_total; ++n)
    {
        const auto &gi = params.grid_index[n];
        const double e = params.eps[n];
        const double x = (static_cast<double>(gi.i) / gs.m_x + params.jump_x[n] + params.delta_x) * env.s_x * e;
        const double z = (static_cast<double>(gi.j) / gs.m_z + params.jump_z[n] + params.delta_z) * env.s_z * e;
        s.positions.emplace_back(x, e * env.range_r, z);
    }
    return s;
}

namespace
{

// Offset c in [-1/2, 1/2) such that m*u_n ~ c (mod 1) for all n, via circular mean.
double common_offset(const std::vector<double> &u, int m)
{
    std::complex<double> acc = 0.0;
    for (double v : u)
        acc += std::polar(1.0, kTwoPi * frac(m * v));
    if (std::abs(acc) == 0.0)
        return 0.0;
    double c = std::arg(acc) / kTwoPi;
    if (c >= 0.5)
        c -= 1.0;
    return c;
}

} // namespace

MembershipReport membership_test(const SwarmState &swarm, const EnvConstants &env, const GroundArray &gs,
                                 double tol)
{
    MembershipReport rep;
    const std::size_t n_total = swarm.size();
    if (n_total == 0 || n_total > static_cast<std::size_t>(gs.size()))
        return rep;

    std::vector<double> u(n_total), w(n_total), eps(n_total);
    for (std::size_t n = 0; n < n_total; ++n)
    {
        eps[n] = env.eps(swarm[n].y());
        if (!(eps[n] > 0.0))
            return rep;
        u[n] = swarm[n].x() / (env.s_x * eps[n]);
        w[n] = swarm[n].z() / (env.s_z * eps[n]);
    }

    const double delta_x = common_offset(u, gs.m_x) / gs.m_x;
    const double delta_z = common_offset(w, gs.m_z) / gs.m_z;

    Eigen::MatrixXd cost(static_cast<Eigen::Index>(n_total), gs.size());
    for (std::size_t n = 0; n < n_total; ++n)
        for (int m = 0; m < gs.size(); ++m)
        {
            const double ex = circular_frac_distance(u[n] - delta_x - static_cast<double>(gs.row_of(m)) / gs.m_x);
            const double ez = circular_frac_distance(w[n] - delta_z - static_cast<double>(gs.col_of(m)) / gs.m_z);
            cost(static_cast<Eigen::Index>(n), m) = ex + ez;
        }
    const AssignmentResult match = solve_assignment(cost);

    PlacementParams params;
    params.delta_x = delta_x;
    params.delta_z = delta_z;
    params.eps = eps;
    double worst = 0.0;
    for (std::size_t n = 0; n < n_total; ++n)
    {
        const int m = match.slot_of[n];
        const GridIndex gi{gs.row_of(m), gs.col_of(m)};
        const double ru = u[n] - delta_x - static_cast<double>(gi.i) / gs.m_x;
        const double rw = w[n] - delta_z - static_cast<double>(gi.j) / gs.m_z;
        worst = std::max({worst, circular_frac_distance(ru), circular_frac_distance(rw)});
        params.grid_index.push_back(gi);
        params.jump_x.push_back(static_cast<int>(std::lround(ru)));
        params.jump_z.push_back(static_cast<int>(std::lround(rw)));
    }

    rep.worst_mismatch = worst;
    rep.member = worst <= tol;
    if (rep.member)
        rep.recovered = std::move(params);
    return rep;
}

SwarmState ura_baseline(const SwarmState &init, const EnvConstants &env, const GroundArray &gs)
{
    gs.validate();
    if (init.empty())
        throw std::invalid_argument("ura_baseline: empty swarm");
    if (init.size() > static_cast<std::size_t>(gs.size()))
        throw std::invalid_argument("ura_baseline: more UAVs than grid slots");

    const double y = mean_y(init);
    double cx = 0.0;
    double cz = 0.0;
    for (const auto &p : init.positions)
    {
        cx += p.x();
        cz += p.z();
    }
    cx /= static_cast<double>(init.size());
    cz /= static_cast<double>(init.size());

    const double pitch_x = env.s_x / gs.m_x;
    const double pitch_z = env.s_z / gs.m_z;
    const double off_x = cx - 0.5 * (gs.m_x - 1) * pitch_x;
    const double off_z = cz - 0.5 * (gs.m_z - 1) * pitch_z;

    std::vector<Vec3> slots;
    slots.reserve(static_cast<std::size_t>(gs.size()));
    for (int m = 0; m < gs.size(); ++m)
        slots.emplace_back(off_x + gs.row_of(m) * pitch_x, y, off_z + gs.col_of(m) * pitch_z);

    Eigen::MatrixXd cost(static_cast<Eigen::Index>(init.size()), gs.size());
    for (std::size_t n = 0; n < init.size(); ++n)
        for (int m = 0; m < gs.size(); ++m)
            cost(static_cast<Eigen::Index>(n), m) = (slots[static_cast<std::size_t>(m)] - init[n]).norm();
    const AssignmentResult match = solve_assignment(cost);

    SwarmState out;
    for (std::size_t n = 0; n < init.size(); ++n)
        out.positions.push_back(slots[static_cast<std::size_t>(match.slot_of[n])]);
    return out;
}

} // namespace uavmimo
