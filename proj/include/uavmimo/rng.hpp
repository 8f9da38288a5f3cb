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
#include <cstdint>
#include <random>

namespace uavmimo
{

// Independent draw purposes. Each purpose gets its own stream so enabling one
// disturbance never shifts the samples of another.
enum class Stream : std::uint64_t
{
    placement = 1,
    nlos = 2,
    shadowing = 3,
    estimation = 4,
    motion = 5,
    composition = 6,
};

/// Seedable random source used by every stochastic operation.
///
/// Engine is std::mt19937_64. Gaussian samples come from
/// std::normal_distribution (libstdc++: Marsaglia polar method). Streams are
/// derived by hashing (seed, purpose, a, b) with SplitMix64, so identical keys
/// give bit-identical sequences.
class Rng
{
public:
    explicit Rng(std::uint64_t seed);

    static Rng derive(std::uint64_t seed, Stream purpose, std::uint64_t a = 0, std::uint64_t b = 0);

    double normal(double sigma = 1.0);
    double uniform(double lo, double hi);

    // Circularly-symmetric complex Gaussian with E|w|^2 = variance.
    std::complex<double> complex_normal(double variance);

    std::mt19937_64 &engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> gauss_{0.0, 1.0};
};

std::uint64_t splitmix64(std::uint64_t x);

} // namespace uavmimo
