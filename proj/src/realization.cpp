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


#include "uavmimo/realization.hpp"

namespace uavmimo
{

double training_snr(const ChannelMatrix &h, const LinkBudget &budget)
{
    const double per_entry = h.entries.squaredNorm() / static_cast<double>(h.antennas() * h.uavs());
    return budget.tx_power * per_entry / budget.noise_power();
}

ChannelRealization realize_channel(const SwarmState &commanded, const GroundArray &gs, double wavelength,
                                   const DisturbanceConfig &disturbances, const LinkBudget &budget,
                                   std::uint64_t trial_seed, std::uint64_t round)
{
    const std::uint64_t key = disturbances.rng_seed;
    ChannelRealization r;

    Rng motion = Rng::derive(key, Stream::motion, trial_seed, round);
    r.actual = perturb_positions(commanded, disturbances.motion_sigma, motion);

    r.truth = los_channel(r.actual, gs, wavelength, Scaling::path_loss);
    Rng nlos = Rng::derive(key, Stream::nlos, trial_seed, round);
    r.truth = rician_channel(r.truth, disturbances.rician_k, nlos);
    Rng shadow = Rng::derive(key, Stream::shadowing, trial_seed, round);
    r.truth = apply_shadowing(r.truth, disturbances.shadowing_sigma_db, shadow);

    if (disturbances.est_training_symbols > 0)
    {
        Rng est = Rng::derive(key, Stream::estimation, trial_seed, round);
        r.estimate = estimate_channel(r.truth, training_snr(r.truth, budget), disturbances.est_training_symbols, est);
    }
    else
    {
        r.estimate = r.truth;
    }
    return r;
}

RateReport evaluate_placement(const SwarmState &commanded, const GroundArray &gs, double wavelength,
                              const DisturbanceConfig &disturbances, const LinkBudget &budget,
                              std::uint64_t trial_seed, std::uint64_t round)
{
    const ChannelRealization r = realize_channel(commanded, gs, wavelength, disturbances, budget, trial_seed, round);
    return lmmse_sum_rate(r.truth, r.estimate, budget);
}

} // namespace uavmimo
