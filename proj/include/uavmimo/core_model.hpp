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

#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "uavmimo/rng.hpp"

namespace uavmimo
{

using Vec3 = Eigen::Vector3d;
using CMatrix = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kSpeedOfLight = 299792458.0;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Uniform rectangular ground-station array in its own frame: elements in the
/// x-z plane, boresight along +y, element 0 at the origin.
///
/// Element m = i*m_z + j sits at (i*d_x, 0, j*d_z). `elevation_tilt` and
/// `base_height` place the array in the scenario world frame (rotation of the
/// boresight above horizontal, height of element 0).
struct GroundArray
{
    int m_x = 6;
    int m_z = 2;
    double d_x = 1.0;
    double d_z = 3.0;
    double elevation_tilt = 0.0;
    double base_height = 0.0;

    int size() const { return m_x * m_z; }
    int index(int i, int j) const { return i * m_z + j; }
    int row_of(int m) const { return m / m_z; }
    int col_of(int m) const { return m % m_z; }
    Vec3 antenna(int m) const;

    // Throws std::invalid_argument on non-positive counts or spacings.
    void validate() const;
};

/// Ordered UAV positions in the ground-station frame.
struct SwarmState
{
    std::vector<Vec3> positions;

    std::size_t size() const { return positions.size(); }
    bool empty() const { return positions.empty(); }
    const Vec3 &operator[](std::size_t n) const { return positions[n]; }
    Vec3 &operator[](std::size_t n) { return positions[n]; }
};

/// Lattice constants of the capacity-maximizing placement set.
struct EnvConstants
{
    double wavelength = 0.0;
    double range_r = 0.0; // mean UAV y
    double s_x = 0.0;     // wavelength * range_r / d_x
    double s_z = 0.0;     // wavelength * range_r / d_z

    // Normalized range of a UAV at height-along-boresight y.
    double eps(double y) const { return y / range_r; }
};

enum class Scaling
{
    normalized,
    path_loss,
};

enum class Provenance
{
    los,
    rician,
    estimated,
};

/// Complex M x N channel; column n belongs to UAV n, row m to antenna m.
struct ChannelMatrix
{
    CMatrix entries;
    Scaling scaling = Scaling::normalized;
    Provenance provenance = Provenance::los;

    Eigen::Index antennas() const { return entries.rows(); }
    Eigen::Index uavs() const { return entries.cols(); }
};

struct DisturbanceConfig
{
    double rician_k = kInfinity;    // linear; +inf means LOS only
    double shadowing_sigma_db = 0.0;
    int est_training_symbols = 0;   // 0 means perfect channel knowledge
    double motion_sigma = 0.0;      // meters, per axis
    std::uint64_t rng_seed = 0;

    bool ideal() const
    {
        return rician_k == kInfinity && shadowing_sigma_db == 0.0 && est_training_symbols == 0 &&
               motion_sigma == 0.0;
    }
    void validate() const;
};

struct FarFieldReport
{
    bool ok = true;
    double worst_ratio = 0.0;
};

double wavelength_from_frequency(double frequency_hz);

/// Mean range and lattice constants derived from the realized swarm.
EnvConstants env_constants(const GroundArray &gs, const SwarmState &swarm, double wavelength);

/// Checks the far-field ratios |y_n - R|/y_n, |x_n|/y_n, |z_n|/y_n,
/// M_x d_x / y_n and M_z d_z / y_n against `ratio_threshold`.
FarFieldReport far_field_report(const SwarmState &swarm, const GroundArray &gs, double ratio_threshold);

/// Exact-distance line-of-sight channel, entry phase -2*pi*|p_n - q_m|/lambda.
ChannelMatrix los_channel(const SwarmState &swarm, const GroundArray &gs, double wavelength, Scaling scaling);

/// H = sqrt(K/(K+1)) H_los + sqrt(1/(K+1)) H_nlos with power-matched NLOS.
ChannelMatrix rician_channel(const ChannelMatrix &h_los, double k_factor, Rng &rng);

/// Scales column n by 10^(g_n/20), g_n ~ N(0, sigma_db^2).
ChannelMatrix apply_shadowing(const ChannelMatrix &h, double sigma_db, Rng &rng);

/// Adds i.i.d. CN(0, |H|_F^2/(MN) / (1 + snr * t_tau)) estimation error.
ChannelMatrix estimate_channel(const ChannelMatrix &h, double snr, int t_tau, Rng &rng);

SwarmState perturb_positions(const SwarmState &swarm, double sigma, Rng &rng);

/// Scenario world frame (ground at z = 0) to ground-station frame: translate by
/// the array height, then rotate by -tilt about x so the boresight becomes +y.
Vec3 world_to_gs(const Vec3 &world, const GroundArray &gs);
Vec3 gs_to_world(const Vec3 &local, const GroundArray &gs);

double mean_y(const SwarmState &swarm);

} // namespace uavmimo
