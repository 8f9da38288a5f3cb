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


#include "uavmimo/trial.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "uavmimo/centralized.hpp"
#include "uavmimo/force_field.hpp"
#include "uavmimo/optimal_set.hpp"
#include "uavmimo/realization.hpp"

namespace uavmimo
{

namespace
{

std::vector<double> displacement(const SwarmState &from, const SwarmState &to)
{
    std::vector<double> d(from.size());
    for (std::size_t n = 0; n < from.size(); ++n)
        d[n] = (to[n] - from[n]).norm();
    return d;
}

TrialRow make_row(int iteration, const RateReport &r, const std::vector<double> &travel)
{
    TrialRow row;
    row.iteration = iteration;
    row.sum_rate = r.sum_rate;
    row.capacity = r.capacity;
    row.bound = r.single_user_bound;
    row.gram_residual = r.gram_residual;
    if (!travel.empty())
    {
        double sum = 0.0;
        for (double t : travel)
            sum += t;
        row.mean_travel = sum / static_cast<double>(travel.size());
        row.max_travel = *std::max_element(travel.begin(), travel.end());
    }
    return row;
}

FFConfig ff_config(const ScenarioConfig &cfg, const Scenario &s)
{
    FFConfig ff;
    ff.iterations = cfg.ff_iterations;
    ff.stall_threshold = cfg.ff_stall_threshold;
    if (cfg.ff_k_p > 0.0)
    {
        // Same contraction ratio on both axes.
        ff.k_p.x = cfg.ff_k_p;
        ff.k_p.z = cfg.ff_k_p * s.env.s_z / s.env.s_x;
    }
    else
    {
        const FFGains bound = kp_guarantee_bound(s.init, s.env);
        ff.k_p.x = cfg.ff_kp_fraction * bound.x;
        ff.k_p.z = cfg.ff_kp_fraction * bound.z;
    }
    return ff;
}

} // namespace

TrialReport run_trial(const ScenarioConfig &cfg, std::uint64_t seed)
{
    return run_trial(cfg, build_scenario(cfg, seed), seed);
}

TrialReport run_trial(const ScenarioConfig &cfg, const Scenario &s, std::uint64_t seed)
{
    const auto t0 = std::chrono::steady_clock::now();
    TrialReport rep;
    rep.seed = seed;
    rep.method = cfg.method;
    rep.config = cfg;
    const double lambda = s.env.wavelength;

    auto evaluate = [&](const SwarmState &positions, std::uint64_t round) {
        return evaluate_placement(positions, s.gs, lambda, s.disturbances, s.budget, seed, round);
    };

    switch (cfg.method)
    {
    case Method::init:
    {
        rep.per_uav_travel.assign(s.init.size(), 0.0);
        rep.final_positions = s.init;
        rep.rows.push_back(make_row(0, evaluate(s.init, 0), rep.per_uav_travel));
        rep.summary.converged = true;
        break;
    }
    case Method::ura:
    {
        rep.final_positions = ura_baseline(s.init, s.env, s.gs);
        rep.per_uav_travel = displacement(s.init, rep.final_positions);
        rep.rows.push_back(make_row(0, evaluate(rep.final_positions, 0), rep.per_uav_travel));
        rep.summary.converged = true;
        break;
    }
    case Method::centralized:
    {
        BcdOptions opts;
        opts.tol = cfg.bcd_tol;
        opts.max_iters = cfg.bcd_max_iters;
        opts.far_field_threshold = cfg.far_field_threshold;
        const OptimizedPlacement p = bcd_solve(s.init, s.env, s.gs, opts);
        rep.rows.push_back(make_row(0, evaluate(s.init, 0), std::vector<double>(s.init.size(), 0.0)));
        for (std::size_t k = 0; k < p.position_history.size(); ++k)
        {
            const auto &pos = p.position_history[k];
            rep.rows.push_back(make_row(static_cast<int>(k + 1), evaluate(pos, k + 1), displacement(s.init, pos)));
        }
        rep.final_positions = p.final_positions;
        rep.per_uav_travel = p.per_uav_travel;
        rep.summary.converged = p.converged;
        break;
    }
    case Method::force_field:
    {
        const FFConfig ff = ff_config(cfg, s);
        const FFTrajectory t = run_force_field(s.init, s.gs, s.env, ff, s.disturbances, s.budget, seed);
        std::vector<double> cumulative(s.init.size(), 0.0);
        for (std::size_t k = 0; k < t.positions.size(); ++k)
        {
            if (k > 0)
                for (std::size_t n = 0; n < cumulative.size(); ++n)
                    cumulative[n] += (t.positions[k][n] - t.positions[k - 1][n]).norm();
            rep.rows.push_back(make_row(static_cast<int>(k), t.rates[k], cumulative));
        }
        rep.final_positions = t.positions.back();
        rep.per_uav_travel = t.per_uav_travel;
        double worst = 0.0;
        for (const auto &a : t.agents)
        {
            if (a.x_neighbor >= 0)
                worst = std::max(worst, std::abs(a.phi_x - a.psi_x));
            if (a.z_neighbor >= 0)
                worst = std::max(worst, std::abs(a.phi_z - a.psi_z));
        }
        rep.summary.converged = worst < 1e-3;
        break;
    }
    }

    const TrialRow &last = rep.rows.back();
    rep.summary.final_sum_rate = last.sum_rate;
    rep.summary.final_capacity = last.capacity;
    rep.summary.final_bound = last.bound;
    rep.summary.final_gram_residual = last.gram_residual;
    rep.summary.mean_travel = last.mean_travel;
    rep.summary.max_travel = last.max_travel;
    rep.summary.total_travel = 0.0;
    for (double t : rep.per_uav_travel)
        rep.summary.total_travel += t;
    rep.summary.iterations = last.iteration;
    rep.summary.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace uavmimo
