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

#include <set>

#include "../support/oracles.hpp"
#include "uavmimo/assignment.hpp"
#include "uavmimo/rng.hpp"

using namespace uavmimo;

TEST_CASE("two by two anti-diagonal cost")
{
    Eigen::MatrixXd c(2, 2);
    c << 0, 5, 5, 0;
    const AssignmentResult r = solve_assignment(c);
    CHECK(r.slot_of == std::vector<int>{0, 1});
    CHECK(r.total_cost == 0.0);
}

TEST_CASE("single row picks the cheapest column")
{
    Eigen::MatrixXd c(1, 4);
    c << 3, 1, 2, 1;
    const AssignmentResult r = solve_assignment(c);
    CHECK(r.slot_of == std::vector<int>{1});
    CHECK(r.total_cost == 1.0);
}

TEST_CASE("rejects bad input")
{
    CHECK_THROWS_AS(solve_assignment(Eigen::MatrixXd::Zero(3, 2)), std::invalid_argument);
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(2, 2);
    c(0, 1) = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(solve_assignment(c), std::invalid_argument);
}

TEST_CASE("matches exhaustive search on random instances")
{
    Rng rng(31);
    for (int t = 0; t < 1000; ++t)
    {
        const int m = 1 + t % 6;
        const int n = 1 + static_cast<int>(rng.engine()() % static_cast<unsigned>(m));
        Eigen::MatrixXd c(n, m);
        for (Eigen::Index i = 0; i < c.size(); ++i)
            c(i) = (t % 3 == 0) ? std::floor(rng.uniform(0.0, 4.0)) : rng.uniform(0.0, 100.0);

        const AssignmentResult r = solve_assignment(c);
        REQUIRE(r.slot_of.size() == static_cast<std::size_t>(n));
        std::set<int> used(r.slot_of.begin(), r.slot_of.end());
        CHECK(used.size() == static_cast<std::size_t>(n));
        double total = 0.0;
        for (int i = 0; i < n; ++i)
        {
            CHECK(r.slot_of[static_cast<std::size_t>(i)] >= 0);
            CHECK(r.slot_of[static_cast<std::size_t>(i)] < m);
            total += c(i, r.slot_of[static_cast<std::size_t>(i)]);
        }
        CHECK(total == doctest::Approx(r.total_cost).epsilon(1e-12));
        CHECK(r.total_cost == doctest::Approx(oracle::brute_assignment(c)).epsilon(1e-12));
    }
}
