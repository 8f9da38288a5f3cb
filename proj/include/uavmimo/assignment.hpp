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

#include <vector>

#include <Eigen/Dense>

namespace uavmimo
{

struct AssignmentResult
{
    std::vector<int> slot_of; // row -> column
    double total_cost = 0.0;
};

/// Exact rectangular linear assignment (Hungarian / Kuhn-Munkres with
/// potentials). `cost` is rows x cols with rows <= cols; every row receives
/// exactly one column and every column at most one row. Among equal reduced
/// costs the lowest column index is preferred.
AssignmentResult solve_assignment(const Eigen::MatrixXd &cost);

} // namespace uavmimo
