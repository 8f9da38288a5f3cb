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


#include <benchmark/benchmark.h>

#include "uavmimo/parallel.hpp"

using namespace uavmimo;

namespace
{

ScenarioConfig bench_config(Method m, int n_seeds)
{
    ScenarioConfig c = preset("disturbed");
    c.method = m;
    c.ff_iterations = 50;
    c.seeds.clear();
    for (int s = 1; s <= n_seeds; ++s)
        c.seeds.push_back(static_cast<std::uint64_t>(s));
    return c;
}

void monte_carlo_bench(benchmark::State &state, Method m, Execution mode)
{
    const ScenarioConfig c = bench_config(m, static_cast<int>(state.range(0)));
    for (auto _ : state)
    {
        MonteCarloResult r = monte_carlo(c, mode);
        benchmark::DoNotOptimize(r);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
    state.counters["threads"] = mode == Execution::parallel ? worker_threads() : 1;
}

} // namespace

BENCHMARK_CAPTURE(monte_carlo_bench, centralized_serial, Method::centralized, Execution::serial)
    ->Arg(32)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(monte_carlo_bench, centralized_parallel, Method::centralized, Execution::parallel)
    ->Arg(32)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(monte_carlo_bench, force_field_serial, Method::force_field, Execution::serial)
    ->Arg(32)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(monte_carlo_bench, force_field_parallel, Method::force_field, Execution::parallel)
    ->Arg(32)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
