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


#include "uavmimo/force_field.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "uavmimo/realization.hpp"

namespace uavmimo
{

namespace
{

double wrap_2pi(double v)
{
    double r = std::fmod(v, kTwoPi);
    if (r < 0.0)
        r += kTwoPi;
    return r >= kTwoPi ? 0.0 : r;
}

// Branch of `measured` (mod 2*pi) closest to `target`.
double nearest_branch(double measured, double target)
{
    return measured + kTwoPi * std::round((target - measured) / kTwoPi);
}

// Sorts `idx` by circular phase, starting just after the widest gap.
template <class Key>
void circular_sort(std::vector<int>::iterator first, std::vector<int>::iterator last, Key key)
{
    std::stable_sort(first, last, [&](int a, int b) { return key(a) < key(b); });
    const auto n = last - first;
    if (n < 2)
        return;
    std::ptrdiff_t start = 0;
    double widest = key(*first) + kTwoPi - key(*(last - 1));
    for (std::ptrdiff_t k = 1; k < n; ++k)
    {
        const double gap = key(first[k]) - key(first[k - 1]);
        if (gap > widest)
        {
            widest = gap;
            start = k;
        }
    }
    std::rotate(first, first + start, last);
}

} // namespace

PhaseDiff phase_differences(const Eigen::Ref<const Eigen::VectorXcd> &column, const GroundArray &gs)
{
    if (column.size() != gs.size())
        throw std::invalid_argument("phase_differences: column length must equal the antenna count");
    PhaseDiff d;
    const std::complex<double> ref = column(0);
    // Propagation phase is -arg(h); phi_0 - phi_m equals arg(h_m * conj(h_0)).
    if (gs.m_x > 1)
        d.x = std::arg(column(gs.index(1, 0)) * std::conj(ref));
    if (gs.m_z > 1)
        d.z = std::arg(column(gs.index(0, 1)) * std::conj(ref));
    if (d.x >= kPi)
        d.x -= kTwoPi;
    if (d.z >= kPi)
        d.z -= kTwoPi;
    return d;
}

PhaseDiff phase_targets(const GroundArray &gs, GridIndex grid)
{
    PhaseDiff t;
    t.x = grid.i == 0 ? 0.0 : kTwoPi / gs.m_x;
    t.z = grid.j == 0 ? 0.0 : kTwoPi / gs.m_z;
    return t;
}

std::vector<FFAgent> init_formation(const ChannelMatrix &h_est, const GroundArray &gs)
{
    return init_formation(h_est, gs, gs.m_x, gs.m_z);
}

std::vector<FFAgent> init_formation(const ChannelMatrix &h_est, const GroundArray &gs, int grid_m_x, int grid_m_z)
{
    gs.validate();
    const int n_total = static_cast<int>(h_est.uavs());
    if (h_est.antennas() != gs.size())
        throw std::invalid_argument("init_formation: channel rows must equal the antenna count");
    if (grid_m_x < 1 || grid_m_z < 1 || grid_m_x > gs.m_x || grid_m_z > gs.m_z)
        throw std::invalid_argument("init_formation: sub-grid must fit inside the ground array");
    if (grid_m_x * grid_m_z != n_total)
        throw std::invalid_argument("init_formation: UAV count does not fill the formation grid");

    std::vector<PhaseDiff> dphi(static_cast<std::size_t>(n_total));
    for (int n = 0; n < n_total; ++n)
        dphi[static_cast<std::size_t>(n)] = phase_differences(h_est.entries.col(n), gs);

    std::vector<int> order(static_cast<std::size_t>(n_total));
    std::iota(order.begin(), order.end(), 0);
    circular_sort(order.begin(), order.end(), [&](int a) { return dphi[static_cast<std::size_t>(a)].x; });
    for (int g = 0; g < grid_m_x; ++g)
    {
        auto first = order.begin() + g * grid_m_z;
        circular_sort(first, first + grid_m_z, [&](int a) { return dphi[static_cast<std::size_t>(a)].z; });
    }

    // Agent k sits at grid slot (k / grid_m_z, k % grid_m_z).
    std::vector<FFAgent> agents(static_cast<std::size_t>(n_total));
    auto agent_at = [&](int i, int j) { return i * grid_m_z + j; };
    const bool x_axis = gs.m_x > 1;
    const bool z_axis = gs.m_z > 1;
    for (int k = 0; k < n_total; ++k)
    {
        FFAgent &a = agents[static_cast<std::size_t>(k)];
        a.uav_index = order[static_cast<std::size_t>(k)];
        a.grid = {k / grid_m_z, k % grid_m_z};
        const PhaseDiff psi = phase_targets(gs, a.grid);
        a.psi_x = psi.x;
        a.psi_z = psi.z;
        if (a.anchor())
            continue;
        const int i = a.grid.i;
        const int j = a.grid.j;
        if (x_axis)
            a.x_neighbor = i >= 1 ? agent_at(i - 1, j) : agent_at(0, j - 1);
        if (z_axis)
            a.z_neighbor = j >= 1 ? agent_at(i, j - 1) : agent_at(i - 1, 0);
    }
    return agents;
}

double measure_state(double own_dphi, double neighbor_dphi)
{
    return wrap_2pi(own_dphi - neighbor_dphi);
}

double unwrap_state(double measured, double prev_unwrapped, double prev_measured)
{
    double best_c = 0.0;
    double best = std::abs(measured - prev_measured);
    for (double c : {kTwoPi, -kTwoPi})
    {
        const double d = std::abs(measured + c - prev_measured);
        if (d < best)
        {
            best = d;
            best_c = c;
        }
    }
    return measured + best_c + kTwoPi * std::floor(prev_unwrapped / kTwoPi);
}

double controller_step(const FFAgent &agent, Axis axis, double k_p)
{
    if (agent.anchor())
        return 0.0;
    const double e = axis == Axis::x ? agent.phi_x - agent.psi_x : agent.phi_z - agent.psi_z;
    return -k_p * e;
}

AgentUpdate agent_step(const FFAgent &agent, const Eigen::Ref<const Eigen::VectorXcd> &own_column,
                       const GroundArray &gs, const std::optional<PhaseDiff> &x_message,
                       const std::optional<PhaseDiff> &z_message, const FFGains &gains)
{
    AgentUpdate u;
    u.next = agent;
    if (agent.anchor())
        return u;

    const PhaseDiff own = phase_differences(own_column, gs);
    FFAgent &a = u.next;

    auto advance = [&](double measured, double &phi, double &prev_measured, double target) {
        const double before = phi;
        phi = agent.primed ? unwrap_state(measured, phi, prev_measured) : nearest_branch(measured, target);
        prev_measured = measured;
        return agent.primed ? std::abs(phi - before) : 0.0;
    };

    if (agent.x_neighbor >= 0 && x_message)
    {
        u.transition_x = advance(measure_state(own.x, x_message->x), a.phi_x, a.prev_measured_x, a.psi_x);
        u.dx = controller_step(a, Axis::x, gains.x);
    }
    if (agent.z_neighbor >= 0 && z_message)
    {
        u.transition_z = advance(measure_state(own.z, z_message->z), a.phi_z, a.prev_measured_z, a.psi_z);
        u.dz = controller_step(a, Axis::z, gains.z);
    }
    a.primed = true;
    a.position.x() += u.dx;
    a.position.z() += u.dz;
    return u;
}

FFGains kp_guarantee_bound(const SwarmState &swarm, const EnvConstants &env)
{
    if (swarm.empty())
        throw std::invalid_argument("kp_guarantee_bound: empty swarm");
    double min_eps = kInfinity;
    for (const auto &p : swarm.positions)
    {
        const double e = env.eps(p.y());
        if (!(e > 0.0))
            throw std::invalid_argument("kp_guarantee_bound: non-positive eps");
        min_eps = std::min(min_eps, e);
    }
    return {min_eps * env.s_x / (4.0 * kPi), min_eps * env.s_z / (4.0 * kPi)};
}

double travel_bound_ff(double eps_anchor, double eps_n, const EnvConstants &env)
{
    return std::hypot(env.s_x, env.s_z) * std::max(eps_anchor, eps_n);
}

namespace
{

void subgrid_shape(int n, const GroundArray &gs, int &gx, int &gz)
{
    for (int z = std::min(gs.m_z, n); z >= 1; --z)
    {
        if (n % z == 0 && n / z <= gs.m_x)
        {
            gx = n / z;
            gz = z;
            return;
        }
    }
    throw std::invalid_argument("force field: UAV count cannot fill a sub-grid of the ground array");
}

} // namespace

FFTrajectory run_force_field(const SwarmState &init, const GroundArray &gs, const EnvConstants &env,
                             const FFConfig &cfg, const DisturbanceConfig &disturbances, const LinkBudget &budget,
                             std::uint64_t trial_seed)
{
    if (cfg.iterations < 1)
        throw std::invalid_argument("force field: iterations must be at least 1");
    if (!(cfg.k_p.x >= 0.0) || !(cfg.k_p.z >= 0.0))
        throw std::invalid_argument("force field: gains must be non-negative");
    disturbances.validate();
    int gx = 0;
    int gz = 0;
    subgrid_shape(static_cast<int>(init.size()), gs, gx, gz);

    FFTrajectory traj;
    SwarmState commanded = init;
    const std::size_t n_total = init.size();
    traj.per_uav_travel.assign(n_total, 0.0);

    std::vector<FFAgent> agents;
    for (int k = 0;; ++k)
    {
        const ChannelRealization r = realize_channel(commanded, gs, env.wavelength, disturbances, budget, trial_seed,
                                                     static_cast<std::uint64_t>(k));
        traj.positions.push_back(commanded);
        traj.rates.push_back(lmmse_sum_rate(r.truth, r.estimate, budget));
        if (k == cfg.iterations || traj.stalled)
            break;

        if (k == 0)
        {
            agents = init_formation(r.estimate, gs, gx, gz);
            for (auto &a : agents)
                a.position = commanded[static_cast<std::size_t>(a.uav_index)];
        }

        // Shared messages: every agent's phase differences from its own column.
        std::vector<PhaseDiff> shared(agents.size());
        for (std::size_t a = 0; a < agents.size(); ++a)
            shared[a] = phase_differences(r.estimate.entries.col(agents[a].uav_index), gs);

        std::vector<FFAgent> next(agents.size());
        double max_move = 0.0;
        for (std::size_t a = 0; a < agents.size(); ++a)
        {
            const FFAgent &ag = agents[a];
            std::optional<PhaseDiff> xm;
            std::optional<PhaseDiff> zm;
            if (ag.x_neighbor >= 0)
                xm = shared[static_cast<std::size_t>(ag.x_neighbor)];
            if (ag.z_neighbor >= 0)
                zm = shared[static_cast<std::size_t>(ag.z_neighbor)];
            const AgentUpdate u = agent_step(ag, r.estimate.entries.col(ag.uav_index), gs, xm, zm, cfg.k_p);
            next[a] = u.next;
            traj.max_state_transition = std::max({traj.max_state_transition, u.transition_x, u.transition_z});
            max_move = std::max({max_move, std::abs(u.dx), std::abs(u.dz)});
            traj.per_uav_travel[static_cast<std::size_t>(ag.uav_index)] += std::hypot(u.dx, u.dz);
        }
        agents = std::move(next);
        for (const auto &ag : agents)
            commanded[static_cast<std::size_t>(ag.uav_index)] = ag.position;
        traj.iterations_run = k + 1;
        if (cfg.stall_threshold > 0.0 && max_move < cfg.stall_threshold)
            traj.stalled = true;
    }
    traj.agents = std::move(agents);
    return traj;
}

} // namespace uavmimo
