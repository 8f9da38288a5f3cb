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


#include "uavmimo/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace uavmimo
{

Vec3 GroundArray::antenna(int m) const
{
    return {row_of(m) * d_x, 0.0, col_of(m) * d_z};
}

void GroundArray::validate() const
{
    if (m_x < 1 || m_z < 1)
        throw std::invalid_argument("ground array needs m_x >= 1 and m_z >= 1");
    if (!(d_x > 0.0) || !(d_z > 0.0))
        throw std::invalid_argument("ground array spacing must be positive");
}

void DisturbanceConfig::validate() const
{
    if (!(rician_k >= 0.0))
        throw std::invalid_argument("Rician K-factor must be non-negative");
    if (!(shadowing_sigma_db >= 0.0))
        throw std::invalid_argument("shadowing sigma must be non-negative");
    if (est_training_symbols < 0)
        throw std::invalid_argument("training symbol count must be non-negative");
    if (!(motion_sigma >= 0.0))
        throw std::invalid_argument("motion sigma must be non-negative");
}

double wavelength_from_frequency(double frequency_hz)
{
    if (!(frequency_hz > 0.0))
        throw std::invalid_argument("carrier frequency must be positive");
    return kSpeedOfLight / frequency_hz;
}

double mean_y(const SwarmState &swarm)
{
    double sum = 0.0;
    for (const auto &p : swarm.positions)
        sum += p.y();
    return sum / static_cast<double>(swarm.size());
}

EnvConstants env_constants(const GroundArray &gs, const SwarmState &swarm, double wavelength)
{
    gs.validate();
    if (swarm.empty())
        throw std::invalid_argument("env_constants: empty swarm");
    for (std::size_t n = 0; n < swarm.size(); ++n)
        if (!(swarm[n].y() > 0.0))
            throw std::invalid_argument("env_constants: UAV " + std::to_string(n) + " has non-positive y");
    if (!(wavelength > 0.0))
        throw std::invalid_argument("env_constants: wavelength must be positive");

    EnvConstants env;
    env.wavelength = wavelength;
    env.range_r = mean_y(swarm);
    env.s_x = wavelength * env.range_r / gs.d_x;
    env.s_z = wavelength * env.range_r / gs.d_z;
    return env;
}

FarFieldReport far_field_report(const SwarmState &swarm, const GroundArray &gs, double ratio_threshold)
{
    FarFieldReport rep;
    if (swarm.empty())
        return rep;
    const double range = mean_y(swarm);
    const double aperture_x = gs.m_x * gs.d_x;
    const double aperture_z = gs.m_z * gs.d_z;
    double worst = 0.0;
    for (const auto &p : swarm.positions)
    {
        const double y = p.y();
        if (!(y > 0.0))
        {
            worst = kInfinity;
            break;
        }
        worst = std::max({worst, std::abs(y - range) / y, std::abs(p.x()) / y, std::abs(p.z()) / y,
                          aperture_x / y, aperture_z / y});
    }
    rep.worst_ratio = worst;
    rep.ok = worst <= ratio_threshold;
    return rep;
}

ChannelMatrix los_channel(const SwarmState &swarm, const GroundArray &gs, double wavelength, Scaling scaling)
{
    gs.validate();
    if (swarm.empty())
        throw std::invalid_argument("los_channel: empty swarm");
    if (swarm.size() > static_cast<std::size_t>(gs.size()))
        throw std::invalid_argument("los_channel: more UAVs than ground antennas");

    const int m_total = gs.size();
    const auto n_total = static_cast<Eigen::Index>(swarm.size());
    ChannelMatrix h;
    h.scaling = scaling;
    h.provenance = Provenance::los;
    h.entries.resize(m_total, n_total);

    const double k = kTwoPi / wavelength;
    for (Eigen::Index n = 0; n < n_total; ++n)
    {
        for (int m = 0; m < m_total; ++m)
        {
            const double dist = (swarm[n] - gs.antenna(m)).norm();
            if (!(dist > 0.0))
                throw std::invalid_argument("los_channel: UAV " + std::to_string(n) + " coincides with antenna " +
                                            std::to_string(m));
            // Reduce the phase first so large distances keep full precision.
            const double phase = -k * std::fmod(dist, wavelength);
            const double mag = scaling == Scaling::path_loss ? wavelength / (2.0 * kTwoPi * dist) : 1.0;
            h.entries(m, n) = std::polar(mag, phase);
        }
    }
    return h;
}

ChannelMatrix rician_channel(const ChannelMatrix &h_los, double k_factor, Rng &rng)
{
    if (!(k_factor >= 0.0))
        throw std::invalid_argument("rician_channel: K-factor must be non-negative");
    if (k_factor == kInfinity)
        return h_los;

    const auto m = h_los.antennas();
    const auto n = h_los.uavs();
    const double variance = h_los.entries.squaredNorm() / static_cast<double>(m * n);
    const double los_gain = std::sqrt(k_factor / (k_factor + 1.0));
    const double nlos_gain = std::sqrt(1.0 / (k_factor + 1.0));

    ChannelMatrix out = h_los;
    out.provenance = Provenance::rician;
    for (Eigen::Index c = 0; c < n; ++c)
        for (Eigen::Index r = 0; r < m; ++r)
            out.entries(r, c) = los_gain * h_los.entries(r, c) + nlos_gain * rng.complex_normal(variance);
    return out;
}

ChannelMatrix apply_shadowing(const ChannelMatrix &h, double sigma_db, Rng &rng)
{
    if (!(sigma_db >= 0.0))
        throw std::invalid_argument("apply_shadowing: sigma must be non-negative");
    if (sigma_db == 0.0)
        return h;
    ChannelMatrix out = h;
    for (Eigen::Index c = 0; c < h.uavs(); ++c)
    {
        const double gain_db = rng.normal(sigma_db);
        out.entries.col(c) *= std::pow(10.0, gain_db / 20.0);
    }
    return out;
}

ChannelMatrix estimate_channel(const ChannelMatrix &h, double snr, int t_tau, Rng &rng)
{
    if (!(snr >= 0.0))
        throw std::invalid_argument("estimate_channel: snr must be non-negative");
    if (t_tau < 0)
        throw std::invalid_argument("estimate_channel: training length must be non-negative");

    const auto m = h.antennas();
    const auto n = h.uavs();
    const double power = h.entries.squaredNorm() / static_cast<double>(m * n);
    const double variance = power / (1.0 + snr * static_cast<double>(t_tau));

    ChannelMatrix out = h;
    out.provenance = Provenance::estimated;
    for (Eigen::Index c = 0; c < n; ++c)
        for (Eigen::Index r = 0; r < m; ++r)
            out.entries(r, c) += rng.complex_normal(variance);
    return out;
}

SwarmState perturb_positions(const SwarmState &swarm, double sigma, Rng &rng)
{
    if (!(sigma >= 0.0))
        throw std::invalid_argument("perturb_positions: sigma must be non-negative");
    SwarmState out = swarm;
    if (sigma == 0.0)
        return out;
    for (auto &p : out.positions)
    {
        p.x() += rng.normal(sigma);
        p.y() += rng.normal(sigma);
        p.z() += rng.normal(sigma);
    }
    return out;
}

Vec3 world_to_gs(const Vec3 &world, const GroundArray &gs)
{
    const double c = std::cos(gs.elevation_tilt);
    const double s = std::sin(gs.elevation_tilt);
    const double y = world.y();
    const double z = world.z() - gs.base_height;
    return {world.x(), c * y + s * z, -s * y + c * z};
}

Vec3 gs_to_world(const Vec3 &local, const GroundArray &gs)
{
    const double c = std::cos(gs.elevation_tilt);
    const double s = std::sin(gs.elevation_tilt);
    const double y = c * local.y() - s * local.z();
    const double z = s * local.y() + c * local.z();
    return {local.x(), y, z + gs.base_height};
}

} // namespace uavmimo
