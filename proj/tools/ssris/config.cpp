// SPDX-License-Identifier: Apache-2.0
//
// ssris - element-count feasibility solver for self-sustainable RIS
// Copyright (C) 2026 The ssris authors
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

#include "ssris/config.hpp"

#include <algorithm>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace ssris::app {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message)
{
    throw ConfigError(path + ": " + message);
}

void reject_unknown_keys(const json& obj, const std::string& path, const std::set<std::string>& allowed)
{
    for (const auto& [key, _] : obj.items()) {
        if (!allowed.contains(key))
            fail(path.empty() ? key : path + "." + key, "unknown field");
    }
}

const json& require_object(const json& value, const std::string& path)
{
    if (!value.is_object())
        fail(path, "expected an object");
    return value;
}

double number_at(const json& obj, const std::string& key, const std::string& path)
{
    const json& v = obj.at(key);
    if (!v.is_number())
        fail(path + "." + key, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d))
        fail(path + "." + key, "must be finite");
    return d;
}

std::optional<double> optional_number(const json& obj, const std::string& key, const std::string& path)
{
    if (!obj.contains(key))
        return std::nullopt;
    return number_at(obj, key, path);
}

std::vector<double> number_list(const json& obj, const std::string& key, const std::string& path)
{
    std::vector<double> out;
    if (!obj.contains(key))
        return out;
    const json& v = obj.at(key);
    const std::string here = path + "." + key;
    if (v.is_number()) {
        out.push_back(v.get<double>());
        return out;
    }
    if (!v.is_array())
        fail(here, "expected a number or an array of numbers");
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number())
            fail(here + "[" + std::to_string(i) + "]", "expected a number");
        out.push_back(v[i].get<double>());
    }
    return out;
}

Point2 point_at(const json& obj, const std::string& key, const std::string& path)
{
    const std::string here = path + "." + key;
    if (!obj.contains(key))
        fail(here, "missing");
    const json& v = obj.at(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        fail(here, "expected [x, y]");
    return {v[0].get<double>(), v[1].get<double>()};
}

// Reads "<stem>_rad" or "<stem>_deg".
std::optional<double> angle_at(const json& obj, const std::string& stem, const std::string& path)
{
    const bool has_rad = obj.contains(stem + "_rad");
    const bool has_deg = obj.contains(stem + "_deg");
    if (has_rad && has_deg)
        fail(path + "." + stem, "give either _rad or _deg, not both");
    if (has_rad)
        return number_at(obj, stem + "_rad", path);
    if (has_deg)
        return deg_to_rad(number_at(obj, stem + "_deg", path));
    return std::nullopt;
}

SystemParams parse_params(const json& doc)
{
    SystemParams p;
    if (!doc.contains("params"))
        return p;
    const json& obj = require_object(doc.at("params"), "params");
    reject_unknown_keys(obj, "params",
                        {"carrier_freq_hz", "bandwidth_hz", "noise_psd_w_per_hz", "noise_figure_db",
                         "num_bs_antennas", "harvest_efficiency", "element_power_w", "tx_power_w", "area_side_m"});
    const std::string path = "params";
    if (auto v = optional_number(obj, "carrier_freq_hz", path)) p.carrier_freq_hz = *v;
    if (auto v = optional_number(obj, "bandwidth_hz", path)) p.bandwidth_hz = *v;
    if (obj.contains("noise_psd_w_per_hz") && obj.contains("noise_figure_db"))
        fail("params.noise_psd_w_per_hz", "give either noise_psd_w_per_hz or noise_figure_db");
    if (auto v = optional_number(obj, "noise_psd_w_per_hz", path)) p.noise_psd_w_per_hz = *v;
    if (auto v = optional_number(obj, "noise_figure_db", path)) p.noise_psd_w_per_hz = thermal_noise_psd(*v);
    if (obj.contains("num_bs_antennas")) {
        const json& v = obj.at("num_bs_antennas");
        if (!v.is_number_integer())
            fail("params.num_bs_antennas", "expected an integer");
        p.num_bs_antennas = v.get<int>();
    }
    if (auto v = optional_number(obj, "harvest_efficiency", path)) p.harvest_efficiency = *v;
    if (auto v = optional_number(obj, "element_power_w", path)) p.element_power_w = *v;
    if (auto v = optional_number(obj, "tx_power_w", path)) p.tx_power_w = *v;
    if (auto v = optional_number(obj, "area_side_m", path)) p.area_side_m = *v;
    try {
        p.validate();
    } catch (const std::invalid_argument& e) {
        fail("params", e.what());
    }
    return p;
}

LinkGeometry parse_geometry(const json& doc, const SystemParams& params)
{
    try {
        if (!doc.contains("geometry"))
            return default_geometry(params.area_side_m);
        const json& obj = require_object(doc.at("geometry"), "geometry");
        reject_unknown_keys(obj, "geometry",
                            {"bs", "ue", "ris", "normal_deg", "normal_rad", "psi_deg", "psi_rad", "theta_deg",
                             "theta_rad", "d_sr_m", "d_rd_m"});
        const bool raw = obj.contains("d_sr_m") || obj.contains("d_rd_m") || obj.contains("psi_deg")
                         || obj.contains("psi_rad") || obj.contains("theta_deg") || obj.contains("theta_rad");
        const bool coords = obj.contains("bs") || obj.contains("ue") || obj.contains("ris");
        if (raw && coords)
            fail("geometry", "give either coordinates (bs/ue/ris) or raw psi/theta/d_sr_m/d_rd_m");
        if (raw) {
            const auto psi = angle_at(obj, "psi", "geometry");
            const auto theta = angle_at(obj, "theta", "geometry");
            if (!psi) fail("geometry.psi_deg", "missing");
            if (!theta) fail("geometry.theta_deg", "missing");
            if (!obj.contains("d_sr_m")) fail("geometry.d_sr_m", "missing");
            if (!obj.contains("d_rd_m")) fail("geometry.d_rd_m", "missing");
            return raw_geometry(*psi, *theta, number_at(obj, "d_sr_m", "geometry"),
                                number_at(obj, "d_rd_m", "geometry"));
        }
        const double d = params.area_side_m;
        const Point2 bs = obj.contains("bs") ? point_at(obj, "bs", "geometry") : Point2{0.0, 0.0};
        const Point2 ue = obj.contains("ue") ? point_at(obj, "ue", "geometry") : Point2{d, d};
        const Point2 ris = obj.contains("ris") ? point_at(obj, "ris", "geometry") : Point2{d / 2.0, 0.0};
        const double normal = angle_at(obj, "normal", "geometry").value_or(std::numbers::pi / 4.0);
        return geometry_from_positions(bs, ue, ris, normal);
    } catch (const GeometryError& e) {
        fail("geometry", e.what());
    } catch (const std::invalid_argument& e) {
        fail("geometry", e.what());
    }
}

std::vector<std::string> string_list(const json& doc, const std::string& key)
{
    std::vector<std::string> out;
    const json& v = doc.at(key);
    if (v.is_string()) {
        out.push_back(v.get<std::string>());
        return out;
    }
    if (!v.is_array())
        fail(key, "expected a string or an array of strings");
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_string())
            fail(key + "[" + std::to_string(i) + "]", "expected a string");
        out.push_back(v[i].get<std::string>());
    }
    return out;
}

std::vector<double> logspace(double lo, double hi, int points)
{
    std::vector<double> out;
    const double a = std::log10(lo);
    const double b = std::log10(hi);
    for (int k = 0; k < points; ++k)
        out.push_back(std::pow(10.0, a + (b - a) * k / (points - 1)));
    return out;
}

ValidationPlan parse_validation(const json& obj)
{
    require_object(obj, "mc");
    reject_unknown_keys(obj, "mc", {"num_samples", "seed", "num_streams", "m_values", "outage_levels", "ks"});
    ValidationPlan plan;
    auto unsigned_at = [&](const std::string& key) -> std::uint64_t {
        const json& v = obj.at(key);
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
            fail("mc." + key, "expected a non-negative integer");
        return v.get<std::uint64_t>();
    };
    if (obj.contains("num_samples")) plan.mc.num_samples = unsigned_at("num_samples");
    if (obj.contains("seed")) plan.mc.seed = unsigned_at("seed");
    if (obj.contains("num_streams")) plan.mc.num_streams = static_cast<unsigned>(unsigned_at("num_streams"));
    if (obj.contains("m_values")) {
        plan.m_values.clear();
        for (double m : number_list(obj, "m_values", "mc")) {
            if (!(m >= 1.0) || m != std::floor(m))
                fail("mc.m_values", "expected positive integers");
            plan.m_values.push_back(static_cast<std::int64_t>(m));
        }
    }
    if (obj.contains("outage_levels"))
        plan.outage_levels = number_list(obj, "outage_levels", "mc");
    if (obj.contains("ks")) {
        if (!obj.at("ks").is_boolean())
            fail("mc.ks", "expected a boolean");
        plan.with_ks = obj.at("ks").get<bool>();
    }
    if (plan.mc.num_samples < 1)
        fail("mc.num_samples", "must be >= 1");
    if (plan.mc.num_streams < 1)
        fail("mc.num_streams", "must be >= 1");
    if (plan.m_values.empty())
        fail("mc.m_values", "must not be empty");
    if (plan.outage_levels.empty())
        fail("mc.outage_levels", "must not be empty");
    for (double level : plan.outage_levels) {
        if (!(level > 0.0 && level < 1.0))
            fail("mc.outage_levels", "levels must lie in (0, 1)");
    }
    return plan;
}

void require_strictly_increasing(const std::vector<double>& values, const std::string& path)
{
    if (values.empty())
        fail(path, "sweep axis list must not be empty");
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (!(values[i] > values[i - 1]))
            fail(path, "sweep axis list must be strictly increasing");
    }
}

} // namespace

const char* to_string(SweepAxis axis)
{
    switch (axis) {
    case SweepAxis::Power: return "power";
    case SweepAxis::Rate: return "rate";
    case SweepAxis::OutageMargin: return "outage_margin";
    }
    return "?";
}

std::vector<std::string> preset_names()
{
    return {"default", "fig2a", "fig2b", "fig3a", "fig3b"};
}

json preset_document(std::string_view name)
{
    const json params = {
        {"carrier_freq_hz", 15e9}, {"bandwidth_hz", 50e6},       {"num_bs_antennas", 128},
        {"harvest_efficiency", 0.65}, {"element_power_w", 2e-6}, {"tx_power_w", 0.1},
        {"area_side_m", 50.0},     {"noise_figure_db", 0.0},
    };
    json doc = {
        {"params", params},
        {"schemes", {"ES", "TS"}},
        {"conditions", {"LOS"}},
        {"targets", {{"rate_bps", {10e6}}, {"epsilon", {0.01}}}},
    };
    if (name == "default")
        return doc;
    if (name == "fig2a") {
        doc["conditions"] = {"LOS", "NLOS"};
        doc["targets"]["tx_power_w"] = logspace(0.01, 1.0, 25);
        doc["sweep_axis"] = "power";
        return doc;
    }
    if (name == "fig2b") {
        doc["conditions"] = {"LOS", "NLOS"};
        std::vector<double> rates;
        for (int k = 1; k <= 10; ++k)
            rates.push_back(5e6 * k);
        doc["targets"]["rate_bps"] = rates;
        doc["sweep_axis"] = "rate";
        return doc;
    }
    if (name == "fig3a" || name == "fig3b") {
        doc["conditions"] = {"NLOS"};
        doc["targets"]["rate_bps"] = {name == "fig3a" ? 20e6 : 15e6};
        doc["targets"]["epsilon"] = logspace(1e-4, 1e-1, 13);
        doc["sweep_axis"] = "outage_margin";
        return doc;
    }
    throw ConfigError("preset: unknown preset '" + std::string(name) + "'");
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config: cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config: " + std::string(e.what()));
    }
}

RunConfig parse_run_config(const json& doc)
{
    if (!doc.is_object())
        throw ConfigError("<root>: expected a JSON object");
    reject_unknown_keys(doc, "",
                        {"params", "geometry", "schemes", "conditions", "condition", "targets", "sweep_axis",
                         "output_path", "mc", "max_elements"});

    RunConfig cfg;
    cfg.params = parse_params(doc);
    cfg.geometry = parse_geometry(doc, cfg.params);

    if (doc.contains("schemes")) {
        cfg.schemes.clear();
        for (const auto& s : string_list(doc, "schemes")) {
            if (s == "ES") cfg.schemes.push_back(Scheme::Es);
            else if (s == "TS") cfg.schemes.push_back(Scheme::Ts);
            else fail("schemes", "unknown scheme '" + s + "' (expected ES or TS)");
        }
        if (cfg.schemes.empty())
            fail("schemes", "must not be empty");
    }

    if (doc.contains("conditions") && doc.contains("condition"))
        fail("condition", "give either condition or conditions");
    const char* cond_key = doc.contains("condition") ? "condition" : "conditions";
    if (doc.contains(cond_key)) {
        cfg.conditions.clear();
        for (const auto& c : string_list(doc, cond_key)) {
            if (c == "LOS") cfg.conditions.push_back(ChannelCondition::Los);
            else if (c == "NLOS") cfg.conditions.push_back(ChannelCondition::Nlos);
            else fail(cond_key, "unknown condition '" + c + "' (expected LOS or NLOS)");
        }
        if (cfg.conditions.empty())
            fail(cond_key, "must not be empty");
    }

    if (doc.contains("targets")) {
        const json& t = require_object(doc.at("targets"), "targets");
        reject_unknown_keys(t, "targets", {"rate_bps", "epsilon", "tx_power_w"});
        cfg.rates_bps = number_list(t, "rate_bps", "targets");
        cfg.epsilons = number_list(t, "epsilon", "targets");
        cfg.tx_powers_w = number_list(t, "tx_power_w", "targets");
    }
    for (double r : cfg.rates_bps) {
        if (!(r > 0.0))
            fail("targets.rate_bps", "rates must be positive");
    }
    for (double e : cfg.epsilons) {
        if (!(e >= kMinEpsilon && e <= kMaxEpsilon))
            fail("targets.epsilon", "outage margins must lie in [1e-9, 0.5]");
    }
    for (double p : cfg.tx_powers_w) {
        if (!(p > 0.0))
            fail("targets.tx_power_w", "powers must be positive");
    }

    if (doc.contains("sweep_axis")) {
        const json& v = doc.at("sweep_axis");
        const std::string axis = v.is_string() ? v.get<std::string>() : "";
        if (axis == "power") cfg.sweep_axis = SweepAxis::Power;
        else if (axis == "rate") cfg.sweep_axis = SweepAxis::Rate;
        else if (axis == "outage_margin") cfg.sweep_axis = SweepAxis::OutageMargin;
        else fail("sweep_axis", "expected power, rate or outage_margin");
    }

    if (doc.contains("output_path")) {
        if (!doc.at("output_path").is_string())
            fail("output_path", "expected a string");
        cfg.output_path = doc.at("output_path").get<std::string>();
    }
    if (doc.contains("max_elements")) {
        cfg.max_elements = number_at(doc, "max_elements", "");
        if (!(cfg.max_elements >= 1.0))
            fail("max_elements", "must be >= 1");
    }
    if (doc.contains("mc"))
        cfg.validation = parse_validation(doc.at("mc"));
    return cfg;
}

void require_solvable(const RunConfig& cfg)
{
    if (cfg.schemes.empty())
        fail("schemes", "must not be empty");
    if (cfg.conditions.empty())
        fail("conditions", "must not be empty");
    if (cfg.rates_bps.empty())
        fail("targets.rate_bps", "at least one rate target is required");
    const bool nlos = std::find(cfg.conditions.begin(), cfg.conditions.end(), ChannelCondition::Nlos)
                      != cfg.conditions.end();
    if (nlos && cfg.epsilons.empty())
        fail("targets.epsilon", "required when solving NLOS");
}

void require_sweepable(const RunConfig& cfg)
{
    require_solvable(cfg);
    if (!cfg.sweep_axis)
        fail("sweep_axis", "required for sweep");
    switch (*cfg.sweep_axis) {
    case SweepAxis::Power:
        require_strictly_increasing(cfg.tx_powers_w, "targets.tx_power_w");
        break;
    case SweepAxis::Rate:
        require_strictly_increasing(cfg.rates_bps, "targets.rate_bps");
        break;
    case SweepAxis::OutageMargin:
        require_strictly_increasing(cfg.epsilons, "targets.epsilon");
        for (auto c : cfg.conditions) {
            if (c != ChannelCondition::Nlos)
                fail("conditions", "outage_margin sweeps apply to NLOS only");
        }
        break;
    }
}

void require_validatable(const RunConfig& cfg)
{
    if (!cfg.validation)
        fail("mc", "validate needs an mc section (or --samples/--seed)");
}

} // namespace ssris::app
