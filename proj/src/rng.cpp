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


#include "uavmimo/rng.hpp"

#include <cmath>

namespace uavmimo
{

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

Rng Rng::derive(std::uint64_t seed, Stream purpose, std::uint64_t a, std::uint64_t b)
{
    std::uint64_t key = splitmix64(seed);
    key = splitmix64(key ^ static_cast<std::uint64_t>(purpose));
    key = splitmix64(key ^ a);
    key = splitmix64(key ^ (b + 0x632be59bd9b4e019ULL));
    return Rng(key);
}

double Rng::normal(double sigma)
{
    return sigma * gauss_(engine_);
}

double Rng::uniform(double lo, double hi)
{
    std::uniform_real_distribution<double> dist(lo, hi);
    return dist(engine_);
}

std::complex<double> Rng::complex_normal(double variance)
{
    const double s = std::sqrt(variance / 2.0);
    const double re = normal(s);
    const double im = normal(s);
    return {re, im};
}

} // namespace uavmimo
