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


#include "uavmimo/centralized.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "uavmimo/assignment.hpp"
#include "uavmimo/optimal_set.hpp"

namespace uavmimo
{

RelaxedInstance build_relaxed_instance(const SwarmState &init, const EnvConstants &env, const GroundArray &gs)
{
    gs.validate();
    if (init.empty())
        throw std::invalid_argument("build_relaxed_instance: empty swarm");
    if (init.size() > static_cast<std::size_t>(gs.size()))
        throw std::invalid_argument("build_relaxed_instance: more UAVs than grid slots");

    RelaxedInstance inst;
    inst.env = env;
    inst.init = init;
    const int n_total = static_cast<int>(init.size());
    inst.tilde_x.resize(gs.size(), n_total);
    inst.tilde_z.resize(gs.size(), n_total);
    inst.eps.resize(init.size());

    for (int n = 0; n < n_total; ++n)
    {
        const double e = env.eps(init[n].y());
        if (!(e > 0.0))
            throw std::invalid_argument("build_relaxed_instance: non-positive eps");
        inst.eps[static_cast<std::size_t>(n)] = e;
        const double ux = init[n].x() / (env.s_x * e);
        const double uz = init[n].z() / (env.s_z * e);
        for (int m = 0; m < gs.size(); ++m)
        {
            inst.tilde_x(m, n) = env.s_x * e * frac(static_cast<double>(gs.row_of(m)) / gs.m_x - ux);
            inst.tilde_z(m, n) = env.s_z * e * frac(static_cast<double>(gs.col_of(m)) / gs.m_z - uz);
        }
    }
    return inst;
}

int nearest_jump(double tilde, double delta, double s, double eps)
{
    const double period = s * eps;
    if (!(period > 0.0))
        throw std::invalid_argument("nearest_jump: s * eps must be positive");
    if (tilde < 0.0 || tilde >= period)
        throw std::invalid_argument("nearest_jump: tilde outside [0, s * eps)");
    if (delta < -0.5 || delta > 0.5)
        throw std::invalid_argument("nearest_jump: delta outside [-1/2, 1/2]");
    const double r = tilde + delta * period;
    return (r >= -0.5 * period && r < 0.5 * period) ? 0 : -1;
}

namespace
{

double residual(double tilde, int jump, double delta, double period)
{
    return tilde + (jump + delta) * period;
}

} // namespace

AssignmentStep assignment_step(const RelaxedInstance &inst, double delta_x, double delta_z)
{
    const int m_total = inst.slots();
    const int n_total = inst.uavs();
    if (n_total > m_total)
        throw std::invalid_argument("assignment_step: more UAVs than slots");

    // Hungarian rows are UAVs, columns are slots.
    Eigen::MatrixXd cost(n_total, m_total);
    for (int n = 0; n < n_total; ++n)
    {
        const double e = inst.eps[static_cast<std::size_t>(n)];
        const double px = inst.env.s_x * e;
        const double pz = inst.env.s_z * e;
        for (int m = 0; m < m_total; ++m)
        {
            const double tx = inst.tilde_x(m, n);
            const double tz = inst.tilde_z(m, n);
            const double rx = residual(tx, nearest_jump(tx, delta_x, inst.env.s_x, e), delta_x, px);
            const double rz = residual(tz, nearest_jump(tz, delta_z, inst.env.s_z, e), delta_z, pz);
            cost(n, m) = std::hypot(rx, rz);
        }
    }
    const AssignmentResult res = solve_assignment(cost);
    return {res.slot_of, res.total_cost};
}

double shift_objective(const RelaxedInstance &inst, const std::vector<int> &assignment,
                       const std::vector<int> &jump_x, const std::vector<int> &jump_z, double delta_x,
                       double delta_z)
{
    double total = 0.0;
    for (std::size_t n = 0; n < assignment.size(); ++n)
    {
        const int m = assignment[n];
        const auto col = static_cast<Eigen::Index>(n);
        const double e = inst.eps[n];
        const double rx = residual(inst.tilde_x(m, col), jump_x[n], delta_x, inst.env.s_x * e);
        const double rz = residual(inst.tilde_z(m, col), jump_z[n], delta_z, inst.env.s_z * e);
        total += std::hypot(rx, rz);
    }
    return total;
}

namespace
{

struct Jumps
{
    std::vector<int> x;
    std::vector<int> z;
};

Jumps jumps_at(const RelaxedInstance &inst, const std::vector<int> &assignment, double delta_x, double delta_z)
{
    Jumps j;
    j.x.resize(assignment.size());
    j.z.resize(assignment.size());
    for (std::size_t n = 0; n < assignment.size(); ++n)
    {
        const int m = assignment[n];
        const auto col = static_cast<Eigen::Index>(n);
        j.x[n] = nearest_jump(inst.tilde_x(m, col), delta_x, inst.env.s_x, inst.eps[n]);
        j.z[n] = nearest_jump(inst.tilde_z(m, col), delta_z, inst.env.s_z, inst.eps[n]);
    }
    return j;
}

template <class F>
double golden_min(F &&f, double lo, double hi, double width, double *fmin)
{
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > width)
    {
        if (fc <= fd)
        {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        }
        else
        {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    // Compare against the endpoints so minimizers on the box boundary are exact.
    double best_x = fc <= fd ? c : d;
    double best_f = std::min(fc, fd);
    for (double edge : {lo, hi})
    {
        const double fe = f(edge);
        if (fe < best_f)
        {
            best_f = fe;
            best_x = edge;
        }
    }
    *fmin = best_f;
    return best_x;
}

} // namespace

double relaxed_objective(const RelaxedInstance &inst, const std::vector<int> &assignment, double delta_x,
                         double delta_z)
{
    const Jumps j = jumps_at(inst, assignment, delta_x, delta_z);
    return shift_objective(inst, assignment, j.x, j.z, delta_x, delta_z);
}

ShiftResult shift_step(const RelaxedInstance &inst, const std::vector<int> &assignment, double incumbent_x,
                       double incumbent_z)
{
    if (assignment.size() != static_cast<std::size_t>(inst.uavs()))
        throw std::invalid_argument("shift_step: assignment size mismatch");
    const Jumps j = jumps_at(inst, assignment, incumbent_x, incumbent_z);

    // The objective is jointly convex, so the partial minimum over delta_z is
    // convex in delta_x and nested 1-D searches reach the global minimum.
    constexpr double width = 1e-11;
    auto inner = [&](double dx, double *dz_out) {
        double fz = 0.0;
        const double dz = golden_min(
            [&](double z) { return shift_objective(inst, assignment, j.x, j.z, dx, z); }, -0.5, 0.5, width, &fz);
        if (dz_out)
            *dz_out = dz;
        return fz;
    };
    double fbest = 0.0;
    const double dx = golden_min([&](double x) { return inner(x, nullptr); }, -0.5, 0.5, width, &fbest);
    double dz = 0.0;
    inner(dx, &dz);

    ShiftResult r;
    r.delta_x = dx;
    r.delta_z = dz;
    r.objective = shift_objective(inst, assignment, j.x, j.z, dx, dz);

    // Never report worse than the incumbent.
    const double at_incumbent = shift_objective(inst, assignment, j.x, j.z, incumbent_x, incumbent_z);
    if (at_incumbent < r.objective)
    {
        r.delta_x = incumbent_x;
        r.delta_z = incumbent_z;
        r.objective = at_incumbent;
    }
    return r;
}

namespace
{

void finalize(OptimizedPlacement &out, const RelaxedInstance &inst, const std::vector<int> &assignment,
              double delta_x, double delta_z)
{
    const Jumps j = jumps_at(inst, assignment, delta_x, delta_z);
    out.assignment = assignment;
    out.delta_x = delta_x;
    out.delta_z = delta_z;
    out.jump_x = j.x;
    out.jump_z = j.z;
    out.final_positions = inst.init;
    out.per_uav_travel.assign(assignment.size(), 0.0);
    out.objective = 0.0;
    for (std::size_t n = 0; n < assignment.size(); ++n)
    {
        const int m = assignment[n];
        const auto col = static_cast<Eigen::Index>(n);
        const double e = inst.eps[n];
        const double rx = residual(inst.tilde_x(m, col), j.x[n], delta_x, inst.env.s_x * e);
        const double rz = residual(inst.tilde_z(m, col), j.z[n], delta_z, inst.env.s_z * e);
        out.final_positions[n].x() = inst.init[n].x() + rx;
        out.final_positions[n].z() = inst.init[n].z() + rz;
        out.per_uav_travel[n] = std::hypot(rx, rz);
        out.objective += out.per_uav_travel[n];
    }
}

} // namespace

OptimizedPlacement bcd_solve(const SwarmState &init, const EnvConstants &env, const GroundArray &gs,
                             const BcdOptions &opts)
{
    if (opts.max_iters < 1)
        throw std::invalid_argument("bcd_solve: max_iters must be at least 1");
    if (!(opts.tol >= 0.0))
        throw std::invalid_argument("bcd_solve: tol must be non-negative");

    const RelaxedInstance inst = build_relaxed_instance(init, env, gs);
    OptimizedPlacement out;
    out.far_field = far_field_report(init, gs, opts.far_field_threshold);

    double delta_x = 0.0;
    double delta_z = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= opts.max_iters; ++k)
    {
        const AssignmentStep a = assignment_step(inst, delta_x, delta_z);
        const ShiftResult s = shift_step(inst, a.assignment, delta_x, delta_z);
        delta_x = s.delta_x;
        delta_z = s.delta_z;
        finalize(out, inst, a.assignment, delta_x, delta_z);
        out.iterations = k;
        out.objective_history.push_back(out.objective);
        out.position_history.push_back(out.final_positions);
        if (out.objective < opts.tol || prev - out.objective < opts.tol || a.cost - out.objective < opts.tol)
        {
            out.converged = true;
            break;
        }
        prev = out.objective;
    }
    return out;
}

double travel_bound_centralized(double eps_n, const EnvConstants &env)
{
    return std::hypot(env.s_x, env.s_z) / 2.0 * eps_n;
}

} // namespace uavmimo
