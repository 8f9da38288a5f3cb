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

#include <cstdint>

#include "uavmimo/core_model.hpp"
#include "uavmimo/metrics.hpp"

namespace uavmimo
{

/// One disturbed channel draw at a commanded placement.
struct ChannelRealization
{
    SwarmState actual;     // commanded positions plus motion error
    ChannelMatrix truth;   // path-loss LOS, then Rician, then shadowing
    ChannelMatrix estimate; // truth plus estimation error (equals truth when T_tau = 0)
};

/// Draws every disturbance from its own stream keyed by
/// (disturbances.rng_seed, purpose, trial_seed, round).
ChannelRealization realize_channel(const SwarmState &commanded, const GroundArray &gs, double wavelength,
                                   const DisturbanceConfig &disturbances, const LinkBudget &budget,
                                   std::uint64_t trial_seed, std::uint64_t round);

/// Per-entry training SNR used for the estimation-error variance.
double training_snr(const ChannelMatrix &h, const LinkBudget &budget);

/// LMMSE report for one realization.
RateReport evaluate_placement(const SwarmState &commanded, const GroundArray &gs, double wavelength,
                              const DisturbanceConfig &disturbances, const LinkBudget &budget,
                              std::uint64_t trial_seed, std::uint64_t round);

} // namespace uavmimo
