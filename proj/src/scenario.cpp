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


#include "uavmimo/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

namespace uavmimo
{

std::string method_name(Method m)
{
    switch (m)
    {
    case Method::init:
        return "init";
    case Method::ura:
        return "ura";
    case Method::centralized:
        return "centralized";
    case Method::force_field:
        return "force_field";
    }
    return "unknown";
}

Method parse_method(const std::string &s)
{
    if (s == "init")
        return Method::init;
    if (s == "ura")
        return Method::ura;
    if (s == "centralized" || s == "cent")
        return Method::centralized;
    if (s == "force_field" || s == "force-field" || s == "ff")
        return Method::force_field;
    throw std::invalid_argument("unknown method '" + s + "'");
}

GroundArray ScenarioConfig::ground_array() const
{
    GroundArray gs;
    gs.m_x = m_x;
    gs.m_z = m_z;
    gs.d_x = d_x;
    gs.d_z = d_z;
    gs.elevation_tilt = elevation_tilt;
    gs.base_height = gs_height;
    return gs;
}

LinkBudget ScenarioConfig::link_budget() const
{
    LinkBudget b;
    b.tx_power = dbm_to_watts(tx_power_dbm);
    b.noise_psd = dbm_to_watts(noise_psd_dbm_hz);
    b.bandwidth = bandwidth_hz;
    b.noise_figure = db_to_linear(noise_figure_db);
    return b;
}

DisturbanceConfig ScenarioConfig::disturbances() const
{
    DisturbanceConfig d;
    d.rician_k = rician_k_db == kInfinity ? kInfinity : db_to_linear(rician_k_db);
    d.shadowing_sigma_db = shadowing_sigma_db;
    d.est_training_symbols = est_training_symbols;
    d.motion_sigma = motion_sigma;
    d.rng_seed = disturbance_seed;
    return d;
}

double ScenarioConfig::wavelength() const
{
    return wavelength_from_frequency(frequency_hz);
}

void ScenarioConfig::validate() const
{
    auto need = [](bool ok, const char *field, const char *what) {
        if (!ok)
            throw std::invalid_argument(std::string("config field '") + field + "' " + what);
    };
    need(frequency_hz > 0.0, "frequency_hz", "must be positive");
    need(m_x >= 1, "m_x", "must be at least 1");
    need(m_z >= 1, "m_z", "must be at least 1");
    need(d_x > 0.0, "d_x", "must be positive");
    need(d_z > 0.0, "d_z", "must be positive");
    need(std::isfinite(gs_height), "gs_height", "must be finite");
    need(std::isfinite(elevation_tilt), "elevation_tilt", "must be finite");
    need(roi_distance > 0.0, "roi_distance", "must be positive");
    need(box_x >= 0.0, "box_x", "must be non-negative");
    need(box_y >= 0.0, "box_y", "must be non-negative");
    need(box_z >= 0.0, "box_z", "must be non-negative");
    need(n_uavs >= 1, "n_uavs", "must be at least 1");
    need(n_uavs <= m_x * m_z, "n_uavs", "must not exceed the antenna count");
    need(std::isfinite(tx_power_dbm), "tx_power_dbm", "must be finite");
    need(std::isfinite(noise_psd_dbm_hz), "noise_psd_dbm_hz", "must be finite");
    need(bandwidth_hz > 0.0, "bandwidth_hz", "must be positive");
    need(std::isfinite(noise_figure_db), "noise_figure_db", "must be finite");
    need(!std::isnan(rician_k_db), "rician_k_db", "must be a number or inf");
    need(shadowing_sigma_db >= 0.0, "shadowing_sigma_db", "must be non-negative");
    need(est_training_symbols >= 0, "est_training_symbols", "must be non-negative");
    need(motion_sigma >= 0.0, "motion_sigma", "must be non-negative");
    need(!seeds.empty(), "seeds", "must list at least one seed");
    need(ff_k_p >= 0.0, "ff_k_p", "must be non-negative");
    need(ff_kp_fraction > 0.0, "ff_kp_fraction", "must be positive");
    need(ff_iterations >= 1, "ff_iterations", "must be at least 1");
    need(ff_stall_threshold >= 0.0, "ff_stall_threshold", "must be non-negative");
    need(bcd_tol >= 0.0, "bcd_tol", "must be non-negative");
    need(bcd_max_iters >= 1, "bcd_max_iters", "must be at least 1");
    need(far_field_threshold > 0.0, "far_field_threshold", "must be positive");
}

nlohmann::json config_to_json(const ScenarioConfig &c)
{
    nlohmann::json j;
    j["frequency_hz"] = c.frequency_hz;
    j["m_x"] = c.m_x;
    j["m_z"] = c.m_z;
    j["d_x"] = c.d_x;
    j["d_z"] = c.d_z;
    j["gs_height"] = c.gs_height;
    j["elevation_tilt"] = c.elevation_tilt;
    j["roi_distance"] = c.roi_distance;
    j["box_x"] = c.box_x;
    j["box_y"] = c.box_y;
    j["box_z"] = c.box_z;
    j["n_uavs"] = c.n_uavs;
    j["tx_power_dbm"] = c.tx_power_dbm;
    j["noise_psd_dbm_hz"] = c.noise_psd_dbm_hz;
    j["bandwidth_hz"] = c.bandwidth_hz;
    j["noise_figure_db"] = c.noise_figure_db;
    if (c.rician_k_db == kInfinity)
        j["rician_k_db"] = "inf";
    else
        j["rician_k_db"] = c.rician_k_db;
    j["shadowing_sigma_db"] = c.shadowing_sigma_db;
    j["est_training_symbols"] = c.est_training_symbols;
    j["motion_sigma"] = c.motion_sigma;
    j["disturbance_seed"] = c.disturbance_seed;
    j["seeds"] = c.seeds;
    j["method"] = method_name(c.method);
    j["ff_k_p"] = c.ff_k_p;
    j["ff_kp_fraction"] = c.ff_kp_fraction;
    j["ff_iterations"] = c.ff_iterations;
    j["ff_stall_threshold"] = c.ff_stall_threshold;
    j["bcd_tol"] = c.bcd_tol;
    j["bcd_max_iters"] = c.bcd_max_iters;
    j["far_field_threshold"] = c.far_field_threshold;
    return j;
}

namespace
{

template <class T>
void read_field(const nlohmann::json &j, const char *key, T &out)
{
    auto it = j.find(key);
    if (it == j.end())
        return;
    try
    {
        out = it->get<T>();
    }
    catch (const nlohmann::json::exception &)
    {
        throw std::invalid_argument(std::string("config field '") + key + "' has the wrong type");
    }
}

} // namespace

ScenarioConfig config_from_json(const nlohmann::json &j)
{
    if (!j.is_object())
        throw std::invalid_argument("config must be a JSON object");
    static const std::set<std::string> known = {
        "frequency_hz",   "m_x",          "m_z",          "d_x",
        "d_z",            "gs_height",    "elevation_tilt", "roi_distance",
        "box_x",          "box_y",        "box_z",        "n_uavs",
        "tx_power_dbm",   "noise_psd_dbm_hz", "bandwidth_hz", "noise_figure_db",
        "rician_k_db",    "shadowing_sigma_db", "est_training_symbols", "motion_sigma",
        "disturbance_seed", "seeds",      "method",       "ff_k_p",
        "ff_kp_fraction", "ff_iterations", "ff_stall_threshold", "bcd_tol",
        "bcd_max_iters",  "far_field_threshold"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key()))
            throw std::invalid_argument("unknown config field '" + it.key() + "'");

    ScenarioConfig c;
    read_field(j, "frequency_hz", c.frequency_hz);
    read_field(j, "m_x", c.m_x);
    read_field(j, "m_z", c.m_z);
    read_field(j, "d_x", c.d_x);
    read_field(j, "d_z", c.d_z);
    read_field(j, "gs_height", c.gs_height);
    read_field(j, "elevation_tilt", c.elevation_tilt);
    read_field(j, "roi_distance", c.roi_distance);
    read_field(j, "box_x", c.box_x);
    read_field(j, "box_y", c.box_y);
    read_field(j, "box_z", c.box_z);
    read_field(j, "n_uavs", c.n_uavs);
    read_field(j, "tx_power_dbm", c.tx_power_dbm);
    read_field(j, "noise_psd_dbm_hz", c.noise_psd_dbm_hz);
    read_field(j, "bandwidth_hz", c.bandwidth_hz);
    read_field(j, "noise_figure_db", c.noise_figure_db);
    if (auto it = j.find("rician_k_db"); it != j.end())
    {
        if (it->is_null() || (it->is_string() && (it->get<std::string>() == "inf" || it->get<std::string>() == "+inf")))
            c.rician_k_db = kInfinity;
        else if (it->is_number())
            c.rician_k_db = it->get<double>();
        else
            throw std::invalid_argument("config field 'rician_k_db' must be a number, null or \"inf\"");
    }
    read_field(j, "shadowing_sigma_db", c.shadowing_sigma_db);
    read_field(j, "est_training_symbols", c.est_training_symbols);
    read_field(j, "motion_sigma", c.motion_sigma);
    read_field(j, "disturbance_seed", c.disturbance_seed);
    read_field(j, "seeds", c.seeds);
    if (auto it = j.find("method"); it != j.end())
    {
        if (!it->is_string())
            throw std::invalid_argument("config field 'method' must be a string");
        c.method = parse_method(it->get<std::string>());
    }
    read_field(j, "ff_k_p", c.ff_k_p);
    read_field(j, "ff_kp_fraction", c.ff_kp_fraction);
    read_field(j, "ff_iterations", c.ff_iterations);
    read_field(j, "ff_stall_threshold", c.ff_stall_threshold);
    read_field(j, "bcd_tol", c.bcd_tol);
    read_field(j, "bcd_max_iters", c.bcd_max_iters);
    read_field(j, "far_field_threshold", c.far_field_threshold);
    c.validate();
    return c;
}

ScenarioConfig load_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file '" + path + "'");
    nlohmann::json j;
    try
    {
        in >> j;
    }
    catch (const nlohmann::json::parse_error &e)
    {
        throw std::invalid_argument("config file '" + path + "' is not valid JSON: " + e.what());
    }
    return config_from_json(j);
}

void massive_mimo_split(int m, int &m_x, int &m_z)
{
    if (m < 1)
        throw std::invalid_argument("massive_mimo_split: antenna count must be positive");
    double best = kInfinity;
    for (int z = 1; z * z <= m; ++z)
    {
        if (m % z != 0)
            continue;
        const int x = m / z;
        const double score = std::abs(static_cast<double>(x) / z - 2.0);
        // Ascending z visits larger m_x first, so strict < keeps it on ties.
        if (score < best - 1e-12)
        {
            best = score;
            m_x = x;
            m_z = z;
        }
    }
}

ScenarioConfig preset(const std::string &name)
{
    ScenarioConfig c;
    if (name == "ideal" || name == "default")
        return c;
    if (name == "disturbed")
    {
        c.rician_k_db = 20.0;
        c.est_training_symbols = 10;
        c.motion_sigma = 1.0;
        c.shadowing_sigma_db = 3.2;
        return c;
    }
    const auto colon = name.find(':');
    const std::string head = name.substr(0, colon);
    if (colon == std::string::npos)
        throw std::invalid_argument("unknown preset '" + name + "'");
    const std::string arg = name.substr(colon + 1);
    double value = 0.0;
    try
    {
        std::size_t used = 0;
        value = std::stod(arg, &used);
        if (used != arg.size())
            throw std::invalid_argument(arg);
    }
    catch (const std::exception &)
    {
        throw std::invalid_argument("preset '" + name + "' needs a numeric argument");
    }
    if (head == "massive-mimo")
    {
        const int m = static_cast<int>(value);
        if (m < 8 || m != value)
            throw std::invalid_argument("massive-mimo preset needs an integer antenna count >= 8");
        massive_mimo_split(m, c.m_x, c.m_z);
        c.d_x = 4.0 / c.m_x;
        c.d_z = 6.0 / c.m_z;
        c.n_uavs = 8;
        return c;
    }
    if (head == "travel-cube")
    {
        if (!(value > 0.0))
            throw std::invalid_argument("travel-cube preset needs a positive range");
        c.roi_distance = value;
        c.box_x = c.box_y = c.box_z = 10.0;
        return c;
    }
    throw std::invalid_argument("unknown preset '" + name + "'");
}

Scenario build_scenario(const ScenarioConfig &cfg, std::uint64_t seed)
{
    cfg.validate();
    Scenario s;
    s.gs = cfg.ground_array();
    s.budget = cfg.link_budget();
    s.disturbances = cfg.disturbances();

    const double th = cfg.elevation_tilt;
    const Vec3 center(0.0, cfg.roi_distance * std::cos(th), cfg.gs_height + cfg.roi_distance * std::sin(th));
    Rng rng = Rng::derive(seed, Stream::placement);
    s.init.positions.reserve(static_cast<std::size_t>(cfg.n_uavs));
    for (int n = 0; n < cfg.n_uavs; ++n)
    {
        const double dx = rng.uniform(-0.5 * cfg.box_x, 0.5 * cfg.box_x);
        const double dy = rng.uniform(-0.5 * cfg.box_y, 0.5 * cfg.box_y);
        const double dz = rng.uniform(-0.5 * cfg.box_z, 0.5 * cfg.box_z);
        const Vec3 local = world_to_gs(center + Vec3(dx, dy, dz), s.gs);
        if (!(local.y() > 0.0))
            throw std::invalid_argument("box places a UAV behind the ground array");
        s.init.positions.push_back(local);
    }
    s.env = env_constants(s.gs, s.init, cfg.wavelength());
    return s;
}

} // namespace uavmimo
