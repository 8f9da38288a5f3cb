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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../support/oracles.hpp"
#include "../support/sampling.hpp"
#include "uavmimo/centralized.hpp"
#include "uavmimo/metrics.hpp"
#include "uavmimo/optimal_set.hpp"
#include "uavmimo/scenario.hpp"

using namespace uavmimo;

namespace
{

EnvConstants reference_env()
{
    EnvConstants env;
    env.wavelength = 0.06;
    env.range_r = 2000.0;
    env.s_x = 120.0;
    env.s_z = 40.0;
    return env;
}

RelaxedInstance hand_instance(const std::vector<double> &tx, const std::vector<double> &tz, int slots)
{
    RelaxedInstance inst;
    inst.env = reference_env();
    const int n = static_cast<int>(tx.size());
    inst.tilde_x = Eigen::MatrixXd::Zero(slots, n);
    inst.tilde_z = Eigen::MatrixXd::Zero(slots, n);
    for (int k = 0; k < n; ++k)
    {
        inst.tilde_x(k, k) = tx[static_cast<std::size_t>(k)];
        inst.tilde_z(k, k) = tz[static_cast<std::size_t>(k)];
        inst.eps.push_back(1.0);
        inst.init.positions.emplace_back(0.0, 2000.0, 0.0);
    }
    return inst;
}

void frozen_jumps(const RelaxedInstance &inst, const std::vector<int> &assign, std::vector<int> &f,
                  std::vector<int> &g)
{
    f.clear();
    g.clear();
    for (int n = 0; n < inst.uavs(); ++n)
    {
        const int m = assign[static_cast<std::size_t>(n)];
        const double e = inst.eps[static_cast<std::size_t>(n)];
        f.push_back(nearest_jump(inst.tilde_x(m, n), 0.0, inst.env.s_x, e));
        g.push_back(nearest_jump(inst.tilde_z(m, n), 0.0, inst.env.s_z, e));
    }
}

} // namespace

TEST_CASE("relaxed instance offsets")
{
    const GroundArray gs = sampling::reference_array();
    const EnvConstants env = reference_env();
    SUBCASE("init on a slot")
    {
        const SwarmState grid = lemma1_grid(env, gs, std::vector<double>(12, 2000.0));
        const RelaxedInstance inst = build_relaxed_instance(grid, env, gs);
        for (int n = 0; n < 12; ++n)
        {
            CHECK(std::abs(inst.tilde_x(n, n)) < 1e-9);
            CHECK(std::abs(inst.tilde_z(n, n)) < 1e-9);
        }
    }
    SUBCASE("quarter pitch")
    {
        SwarmState s;
        s.positions.emplace_back(0.25 * 120.0, 2000.0, 0.0);
        const RelaxedInstance inst = build_relaxed_instance(s, env, gs);
        CHECK(inst.tilde_x(0, 0) == doctest::Approx(0.75 * 120.0).epsilon(1e-12));
        CHECK(inst.slots() == 12);
        CHECK(inst.uavs() == 1);
    }
    SUBCASE("offsets wrap into one period")
    {
        Rng rng(51);
        SwarmState s;
        for (int n = 0; n < 12; ++n)
            s.positions.emplace_back(rng.uniform(-150, 150), rng.uniform(1850, 2150), rng.uniform(-150, 150));
        const EnvConstants e2 = env_constants(gs, s, 0.06);
        const RelaxedInstance inst = build_relaxed_instance(s, e2, gs);
        for (int m = 0; m < 12; ++m)
            for (int n = 0; n < 12; ++n)
            {
                const double eps = inst.eps[static_cast<std::size_t>(n)];
                CHECK(inst.tilde_x(m, n) >= 0.0);
                CHECK(inst.tilde_x(m, n) < e2.s_x * eps);
                CHECK(inst.tilde_z(m, n) >= 0.0);
                CHECK(inst.tilde_z(m, n) < e2.s_z * eps);
            }
    }
}

TEST_CASE("nearest jump")
{
    CHECK(nearest_jump(0.0, 0.0, 120.0, 1.0) == 0);
    CHECK(nearest_jump(70.0, 0.0, 120.0, 1.0) == -1);
    CHECK(nearest_jump(100.0, 0.4, 120.0, 1.0) == -1);
    CHECK(nearest_jump(10.0, -0.4, 120.0, 1.0) == 0);
    CHECK_THROWS_AS(nearest_jump(130.0, 0.0, 120.0, 1.0), std::invalid_argument);

    Rng rng(52);
    for (int t = 0; t < 10000; ++t)
    {
        const double s = rng.uniform(10.0, 200.0);
        const double eps = rng.uniform(0.5, 1.5);
        const double tilde = rng.uniform(0.0, s * eps * (1.0 - 1e-12));
        const double delta = rng.uniform(-0.5, 0.5);
        const int f = nearest_jump(tilde, delta, s, eps);
        CHECK(f == oracle::brute_jump(tilde, delta, s, eps));
        CHECK((f == 0 || f == -1));
    }
}

TEST_CASE("assignment step matches exhaustive search")
{
    Rng rng(53);
    for (int t = 0; t < 300; ++t)
    {
        GroundArray gs;
        gs.m_x = 1 + static_cast<int>(rng.engine()() % 3);
        gs.m_z = 1 + static_cast<int>(rng.engine()() % 2);
        const int n = 1 + static_cast<int>(rng.engine()() % static_cast<unsigned>(gs.size()));
        SwarmState s;
        for (int k = 0; k < n; ++k)
            s.positions.emplace_back(rng.uniform(-150, 150), rng.uniform(1850, 2150), rng.uniform(-150, 150));
        const EnvConstants env = env_constants(gs, s, 0.06);
        const RelaxedInstance inst = build_relaxed_instance(s, env, gs);
        const double dx = rng.uniform(-0.5, 0.5);
        const double dz = rng.uniform(-0.5, 0.5);
        const AssignmentStep a = assignment_step(inst, dx, dz);

        Eigen::MatrixXd cost(n, gs.size());
        for (int k = 0; k < n; ++k)
            for (int m = 0; m < gs.size(); ++m)
            {
                const double e = inst.eps[static_cast<std::size_t>(k)];
                const double px = env.s_x * e;
                const double pz = env.s_z * e;
                const double rx = inst.tilde_x(m, k) + (oracle::brute_jump(inst.tilde_x(m, k), dx, env.s_x, e) + dx) * px;
                const double rz = inst.tilde_z(m, k) + (oracle::brute_jump(inst.tilde_z(m, k), dz, env.s_z, e) + dz) * pz;
                cost(k, m) = std::sqrt(rx * rx + rz * rz);
            }
        CHECK(a.cost == doctest::Approx(oracle::brute_assignment(cost)).epsilon(1e-9));
    }
}

TEST_CASE("shift step worked examples")
{
    SUBCASE("all zero")
    {
        const RelaxedInstance inst = hand_instance({0.0, 0.0}, {0.0, 0.0}, 2);
        const ShiftResult r = shift_step(inst, {0, 1});
        CHECK(r.objective < 1e-9);
        CHECK(std::abs(r.delta_x) < 1e-6);
        CHECK(std::abs(r.delta_z) < 1e-6);
    }
    SUBCASE("single UAV")
    {
        const RelaxedInstance inst = hand_instance({0.3 * 120.0}, {0.0}, 1);
        const ShiftResult r = shift_step(inst, {0});
        CHECK(r.objective < 1e-6);
        CHECK(r.delta_x == doctest::Approx(-0.3).epsilon(1e-6));
    }
    SUBCASE("two UAVs symmetric about a center")
    {
        const double a = 10.0;
        const RelaxedInstance inst = hand_instance({30.0 - a, 30.0 + a}, {0.0, 0.0}, 2);
        const ShiftResult r = shift_step(inst, {0, 1});
        CHECK(r.objective == doctest::Approx(2.0 * a).epsilon(1e-7));
    }
}

TEST_CASE("shift step against the dense-grid oracle")
{
    const GroundArray gs = sampling::reference_array();
    Rng rng(54);
    for (int t = 0; t < 100; ++t)
    {
        SwarmState s;
        for (int n = 0; n < 12; ++n)
            s.positions.emplace_back(rng.uniform(-150, 150), rng.uniform(1850, 2150), rng.uniform(-150, 150));
        const EnvConstants env = env_constants(gs, s, 0.06);
        const RelaxedInstance inst = build_relaxed_instance(s, env, gs);
        const AssignmentStep a = assignment_step(inst, 0.0, 0.0);
        const ShiftResult r = shift_step(inst, a.assignment);
        std::vector<int> f, g;
        frozen_jumps(inst, a.assignment, f, g);
        const double best = oracle::grid_minimum(
            [&](double x, double z) { return shift_objective(inst, a.assignment, f, g, x, z); });
        CHECK(r.objective <= best + 1e-6);
        CHECK(r.objective <= a.cost + 1e-9);
        CHECK(r.objective == doctest::Approx(shift_objective(inst, a.assignment, f, g, r.delta_x, r.delta_z)));
    }
}

TEST_CASE("travel bound arithmetic")
{
    const EnvConstants env = reference_env();
    CHECK(travel_bound_centralized(1.0, env) == doctest::Approx(63.2456).epsilon(1e-5));
    CHECK(travel_bound_centralized(0.5, env) == doctest::Approx(0.5 * travel_bound_centralized(1.0, env)));
}

TEST_CASE("bcd on a swarm already in the set")
{
    const GroundArray gs = sampling::reference_array();
    const EnvConstants env = reference_env();
    const SwarmState grid = apply_scaled_shift(lemma1_grid(env, gs, std::vector<double>(12, 2000.0)), env, 0.1, 0.05);
    const OptimizedPlacement p = bcd_solve(grid, env, gs);
    CHECK(p.objective < 1e-6);
    CHECK(p.converged);
    CHECK(p.iterations == 1);
    for (double d : p.per_uav_travel)
        CHECK(d < 1e-6);
}

TEST_CASE("bcd on reference scenarios")
{
    const LinkBudget b = LinkBudget::defaults();
    for (std::uint64_t seed = 1; seed <= 40; ++seed)
    {
        CAPTURE(seed);
        const Scenario sc = build_scenario(ScenarioConfig{}, seed);
        const OptimizedPlacement p = bcd_solve(sc.init, sc.env, sc.gs);
        REQUIRE(!p.objective_history.empty());
        for (std::size_t k = 1; k < p.objective_history.size(); ++k)
            CHECK(p.objective_history[k] <= p.objective_history[k - 1] + 1e-9);
        CHECK(p.iterations <= 5);
        CHECK(p.far_field.ok);

        double total = 0.0;
        for (std::size_t n = 0; n < sc.init.size(); ++n)
        {
            const double d = (p.final_positions[n] - sc.init[n]).norm();
            CHECK(d == doctest::Approx(p.per_uav_travel[n]).epsilon(1e-12));
            CHECK(d <= travel_bound_centralized(sc.env.eps(sc.init[n].y()), sc.env) + 1e-9);
            CHECK(p.final_positions[n].y() == sc.init[n].y());
            total += d;
        }
        CHECK(total == doctest::Approx(p.objective).epsilon(1e-9));
        for (int j : p.jump_x)
            CHECK((j == 0 || j == -1));
        for (int j : p.jump_z)
            CHECK((j == 0 || j == -1));

        CHECK(membership_test(p.final_positions, sc.env, sc.gs, 1e-6).member);
        CHECK(sampling::far_field_residual(p.final_positions, sc.gs, sc.env.wavelength) <= 1e-2);
        const ChannelMatrix h = los_channel(p.final_positions, sc.gs, sc.env.wavelength, Scaling::path_loss);
        const RateReport r = lmmse_sum_rate(h, h, b);
        CHECK(r.sum_rate >= 0.99 * r.single_user_bound);
    }
}
