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


#include "uavmimo/assignment.hpp"

#include <limits>
#include <stdexcept>

namespace uavmimo
{

AssignmentResult solve_assignment(const Eigen::MatrixXd &cost)
{
    const int n = static_cast<int>(cost.rows());
    const int m = static_cast<int>(cost.cols());
    if (n > m)
        throw std::invalid_argument("solve_assignment: more rows than columns");
    if (!cost.allFinite())
        throw std::invalid_argument("solve_assignment: non-finite cost");

    AssignmentResult res;
    if (n == 0)
        return res;

    const double inf = std::numeric_limits<double>::infinity();
    // 1-based shortest augmenting path formulation; index 0 is a virtual row/column.
    std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
    std::vector<int> p(m + 1, 0), way(m + 1, 0);

    for (int i = 1; i <= n; ++i)
    {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(m + 1, inf);
        std::vector<char> used(m + 1, 0);
        do
        {
            used[j0] = 1;
            const int i0 = p[j0];
            double delta = inf;
            int j1 = 0;
            for (int j = 1; j <= m; ++j)
            {
                if (used[j])
                    continue;
                const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j])
                {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta)
                {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= m; ++j)
            {
                if (used[j])
                {
                    u[p[j]] += delta;
                    v[j] -= delta;
                }
                else
                {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do
        {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    res.slot_of.assign(static_cast<std::size_t>(n), -1);
    for (int j = 1; j <= m; ++j)
        if (p[j] != 0)
            res.slot_of[static_cast<std::size_t>(p[j] - 1)] = j - 1;
    for (int i = 0; i < n; ++i)
        res.total_cost += cost(i, res.slot_of[static_cast<std::size_t>(i)]);
    return res;
}

} // namespace uavmimo
