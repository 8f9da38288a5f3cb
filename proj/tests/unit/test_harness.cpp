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

#include <sstream>

#include "uavmimo/parallel.hpp"
#include "uavmimo/report.hpp"
#include "uavmimo/scenario.hpp"
#include "uavmimo/trial.hpp"

using namespace uavmimo;

namespace
{

std::string csv_of(const TrialReport &r)
{
    std::ostringstream os;
    write_csv(r, os);
    return os.str();
}

void same_trial(const TrialReport &a, const TrialReport &b)
{
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t k = 0; k < a.rows.size(); ++k)
    {
        CHECK(a.rows[k].sum_rate == b.rows[k].sum_rate);
        CHECK(a.rows[k].mean_travel == b.rows[k].mean_travel);
        CHECK(a.rows[k].gram_residual == b.rows[k].gram_residual);
    }
    CHECK(a.per_uav_travel == b.per_uav_travel);
    CHECK(a.summary.final_sum_rate == b.summary.final_sum_rate);
    CHECK(a.summary.converged == b.summary.converged);
    CHECK(a.summary.iterations == b.summary.iterations);
}

} // namespace

TEST_CASE("default configuration")
{
    const ScenarioConfig c;
    CHECK(c.frequency_hz == 5e9);
    CHECK(c.m_x == 6);
    CHECK(c.m_z == 2);
    CHECK(c.roi_distance == 2000.0);
    CHECK(c.n_uavs == 12);
    CHECK(c.d_x * c.m_x == 6.0);
    CHECK(c.d_z * c.m_z == 6.0);
    CHECK(c.gs_height == 10.0);
    CHECK(c.elevation_tilt == 0.043);
    CHECK(c.box_x == 10.0);
    CHECK(c.box_y == 300.0);
    CHECK(c.box_z == 300.0);
    CHECK(c.tx_power_dbm == 10.0);
    CHECK(c.noise_psd_dbm_hz == -174.0);
    CHECK(c.bandwidth_hz == 1e6);
    CHECK(c.noise_figure_db == 3.0);
    CHECK(c.ff_iterations == 100);
    CHECK(c.wavelength() == doctest::Approx(0.0599584916));
    CHECK(c.link_budget().tx_power == doctest::Approx(0.01));
    CHECK(c.disturbances().rician_k == kInfinity);
    CHECK_NOTHROW(c.validate());

    ScenarioConfig bad;
    bad.n_uavs = 13;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = ScenarioConfig{};
    bad.seeds.clear();
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("presets")
{
    const ScenarioConfig d = preset("disturbed");
    CHECK(d.rician_k_db == 20.0);
    CHECK(d.est_training_symbols == 10);
    CHECK(d.motion_sigma == 1.0);
    CHECK(d.shadowing_sigma_db == 3.2);

    const ScenarioConfig mm = preset("massive-mimo:64");
    CHECK(mm.m_x * mm.m_z == 64);
    CHECK(mm.n_uavs == 8);
    CHECK(mm.d_x * mm.m_x == doctest::Approx(4.0));
    CHECK(mm.d_z * mm.m_z == doctest::Approx(6.0));

    const ScenarioConfig tc = preset("travel-cube:4000");
    CHECK(tc.roi_distance == 4000.0);
    CHECK(tc.box_x == 10.0);
    CHECK(tc.box_y == 10.0);
    CHECK(tc.box_z == 10.0);

    CHECK_THROWS_AS(preset("nope"), std::invalid_argument);
    CHECK_THROWS_AS(preset("massive-mimo:abc"), std::invalid_argument);

    int mx = 0, mz = 0;
    massive_mimo_split(16, mx, mz);
    CHECK((mx == 4 && mz == 4));
    massive_mimo_split(128, mx, mz);
    CHECK((mx == 16 && mz == 8));
}

TEST_CASE("config json round trip")
{
    ScenarioConfig c = preset("disturbed");
    c.seeds = {3, 4, 5};
    c.method = Method::force_field;
    const ScenarioConfig back = config_from_json(config_to_json(c));
    CHECK(config_to_json(back) == config_to_json(c));
    CHECK(std::isinf(config_from_json(config_to_json(ScenarioConfig{})).rician_k_db));

    nlohmann::json j = config_to_json(c);
    j["no_such_field"] = 1;
    CHECK_THROWS_AS(config_from_json(j), std::invalid_argument);
    CHECK_THROWS_AS(load_config("/nonexistent/config.json"), std::runtime_error);
}

TEST_CASE("scenario construction")
{
    const ScenarioConfig c;
    double mean_height = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
    {
        const Scenario s = build_scenario(c, seed);
        REQUIRE(s.init.size() == 12);
        for (const auto &p : s.init.positions)
            mean_height += gs_to_world(p, s.gs).z() / (20.0 * 12.0);
    }
    CHECK(mean_height == doctest::Approx(96.0).epsilon(0.05));

    ScenarioConfig point = c;
    point.box_x = point.box_y = point.box_z = 0.0;
    const Scenario p = build_scenario(point, 7);
    for (const auto &q : p.init.positions)
        CHECK((q - p.init[0]).norm() == 0.0);

    const Scenario a = build_scenario(c, 9);
    const Scenario b = build_scenario(c, 9);
    const Scenario other = build_scenario(c, 10);
    for (std::size_t n = 0; n < 12; ++n)
        CHECK(a.init[n] == b.init[n]);
    CHECK(a.init[0] != other.init[0]);
    CHECK(a.env.range_r == doctest::Approx(mean_y(a.init)));
}

TEST_CASE("trial methods on one seed")
{
    ScenarioConfig c;
    c.method = Method::init;
    const TrialReport init = run_trial(c, 5);
    CHECK(init.rows.size() == 1);
    CHECK(init.summary.final_sum_rate < init.summary.final_bound);
    CHECK(init.summary.mean_travel == 0.0);

    c.method = Method::centralized;
    const TrialReport cent = run_trial(c, 5);
    CHECK(cent.rows.size() >= 2);
    CHECK(cent.rows.front().sum_rate == init.summary.final_sum_rate);
    CHECK(cent.summary.final_sum_rate >= 0.99 * cent.summary.final_bound);

    c.method = Method::ura;
    const TrialReport ura = run_trial(c, 5);
    CHECK(ura.summary.final_sum_rate == doctest::Approx(cent.summary.final_sum_rate).epsilon(0.005));
    CHECK(ura.summary.mean_travel > cent.summary.mean_travel);

    c.method = Method::force_field;
    c.ff_iterations = 200;
    const TrialReport ff = run_trial(c, 5);
    CHECK(ff.rows.size() == 201);
    CHECK(ff.rows[100].sum_rate >= 0.99 * ff.rows[100].bound);
    CHECK(ff.summary.final_sum_rate >= 0.99 * ff.summary.final_bound);
    CHECK(ff.summary.converged);
}

TEST_CASE("seeds are isolated")
{
    ScenarioConfig c = preset("disturbed");
    c.method = Method::centralized;
    const TrialReport alone = run_trial(c, 4);
    c.seeds = {1, 2, 3, 4};
    const MonteCarloResult mc = monte_carlo(c);
    REQUIRE(mc.trials.size() == 4);
    same_trial(alone, mc.trials[3]);
}

TEST_CASE("disturbance seed changes draws only")
{
    ScenarioConfig a = preset("disturbed");
    ScenarioConfig b = a;
    b.disturbance_seed = 99;
    const Scenario sa = build_scenario(a, 6);
    const Scenario sb = build_scenario(b, 6);
    for (std::size_t n = 0; n < sa.init.size(); ++n)
        CHECK(sa.init[n] == sb.init[n]);
    a.method = b.method = Method::init;
    CHECK(run_trial(a, 6).summary.final_sum_rate != run_trial(b, 6).summary.final_sum_rate);
}

TEST_CASE("rician sweep is nondecreasing in K")
{
    ScenarioConfig c;
    c.seeds.clear();
    for (std::uint64_t s = 1; s <= 100; ++s)
        c.seeds.push_back(s);
    std::vector<nlohmann::json> ks;
    for (double k : {-10.0, 0.0, 10.0, 20.0, 30.0, 40.0})
        ks.emplace_back(k);
    const auto pts = sweep_parameter(c, "rician_k_db", ks);
    for (std::size_t k = 1; k < pts.size(); ++k)
        CHECK(pts[k].result.metrics.at("sum_rate").mean >= pts[k - 1].result.metrics.at("sum_rate").mean);
}

TEST_CASE("monte carlo aggregates")
{
    ScenarioConfig c;
    c.seeds = {8};
    const MonteCarloResult one = monte_carlo(c);
    const TrialReport t = run_trial(c, 8);
    CHECK(one.metrics.at("sum_rate").mean == t.summary.final_sum_rate);
    CHECK(one.metrics.at("sum_rate").std == 0.0);
    CHECK(one.metrics.at("mean_travel").mean == t.summary.mean_travel);
    CHECK(one.metrics.at("sum_rate").count == 1);

    const Aggregate a = aggregate({1.0, 2.0, 3.0, 4.0});
    CHECK(a.mean == 2.5);
    CHECK(a.std == doctest::Approx(std::sqrt(5.0 / 3.0)));
    CHECK(a.min == 1.0);
    CHECK(a.max == 4.0);
}

TEST_CASE("serial and parallel execution agree bit for bit")
{
    for (Method m : {Method::centralized, Method::force_field})
    {
        ScenarioConfig c = preset("disturbed");
        c.method = m;
        c.ff_iterations = 30;
        c.seeds.clear();
        for (std::uint64_t s = 1; s <= 16; ++s)
            c.seeds.push_back(s);
        const MonteCarloResult par = monte_carlo(c, Execution::parallel);
        const MonteCarloResult ser = monte_carlo_serial(c);
        REQUIRE(par.trials.size() == ser.trials.size());
        for (std::size_t k = 0; k < par.trials.size(); ++k)
        {
            CHECK(par.trials[k].seed == ser.trials[k].seed);
            CHECK(csv_of(par.trials[k]) == csv_of(ser.trials[k]));
            CHECK(par.trials[k].per_uav_travel == ser.trials[k].per_uav_travel);
        }
        for (const auto &[name, agg] : ser.metrics)
        {
            CHECK(par.metrics.at(name).mean == agg.mean);
            CHECK(par.metrics.at(name).std == agg.std);
        }
    }
}

TEST_CASE("failed trials are collected")
{
    ScenarioConfig c;
    c.method = Method::force_field;
    c.n_uavs = 7;
    c.seeds = {1, 2};
    const MonteCarloResult r = monte_carlo(c);
    CHECK(r.trials.empty());
    CHECK(r.errors.size() == 2);
}

TEST_CASE("csv output")
{
    TrialReport empty;
    CHECK(csv_of(empty) == std::string(kCsvHeader) + "\n");

    ScenarioConfig c;
    const std::string a = csv_of(run_trial(c, 2));
    const std::string b = csv_of(run_trial(c, 2));
    CHECK(a == b);
    CHECK(a.rfind(kCsvHeader, 0) == 0);
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(1234567.891) == "1234567.89");
}

TEST_CASE("json report round trip")
{
    ScenarioConfig c;
    c.method = Method::force_field;
    c.ff_iterations = 10;
    const TrialReport r = run_trial(c, 3);
    const TrialReport back = report_from_json(report_to_json(r));
    same_trial(r, back);
    CHECK(report_to_json(back) == report_to_json(r));
    CHECK(parse_format("csv") == ReportFormat::csv);
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("parameter sweep")
{
    ScenarioConfig c;
    c.seeds = {1, 2};
    const std::vector<nlohmann::json> values{1000.0, 2000.0};
    const auto pts = sweep_parameter(c, "roi_distance", values);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].value == 1000.0);
    CHECK(pts[0].result.trials.size() == 2);
    CHECK(pts[0].result.trials[0].config.roi_distance == 1000.0);
    CHECK_THROWS_AS(sweep_parameter(c, "bogus", values), std::invalid_argument);
    const nlohmann::json j = sweep_to_json("roi_distance", pts);
    CHECK(j.at("param") == "roi_distance");
}
