// SPDX-License-Identifier: Apache-2.0
//
// mmwrx - mmWave receiver architecture trade-off simulator
// Copyright (C) 2026 The mmwrx authors
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

#include "mmwrx/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "mmwrx/chart.hpp"

namespace mmwrx {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view to_string(OutputFormat format)
{
    switch (format)
    {
    case OutputFormat::json:
        return "json";
    case OutputFormat::csv:
        return "csv";
    case OutputFormat::svg:
        return "svg";
    }
    return "?";
}

OutputFormat output_format_from_string(std::string_view name)
{
    if (name == "json")
        return OutputFormat::json;
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "svg")
        return OutputFormat::svg;
    throw std::invalid_argument("unsupported output format '" + std::string(name) + "'");
}

namespace {

double get_number(const json &v, const std::string &field)
{
    if (!v.is_number())
        throw ConfigError(field, "expected a number");
    return v.get<double>();
}

int get_int(const json &v, const std::string &field)
{
    if (!v.is_number_integer())
        throw ConfigError(field, "expected an integer");
    const auto x = v.get<std::int64_t>();
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
        throw ConfigError(field, "integer out of range");
    return static_cast<int>(x);
}

std::uint64_t get_seed(const json &v, const std::string &field)
{
    if (v.is_number_unsigned())
        return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0)
        return static_cast<std::uint64_t>(v.get<std::int64_t>());
    throw ConfigError(field, "expected a non-negative integer");
}

bool get_bool(const json &v, const std::string &field)
{
    if (!v.is_boolean())
        throw ConfigError(field, "expected true or false");
    return v.get<bool>();
}

std::string get_string(const json &v, const std::string &field)
{
    if (!v.is_string())
        throw ConfigError(field, "expected a string");
    return v.get<std::string>();
}

std::vector<int> get_int_list(const json &v, const std::string &field)
{
    if (!v.is_array())
        throw ConfigError(field, "expected an array of integers");
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(get_int(v[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

std::string csv_number(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

// -- JSON <-> domain ------------------------------------------------------

ordered_json to_json(const ChannelParams &p)
{
    ordered_json j;
    j["n_tx"] = p.n_tx;
    j["n_rx"] = p.n_rx;
    j["mode"] = p.mode == ChannelMode::normalized ? "normalized" : "physical";
    j["distance_m"] = p.distance_m;
    j["los"] = p.los;
    j["cluster_rate"] = p.cluster_rate;
    j["paths_per_cluster"] = p.paths_per_cluster;
    j["angle_spread_deg"] = p.angle_spread_deg;
    j["array_phase"] = p.array_phase == ArrayPhase::verbatim ? "verbatim" : "half_wavelength";
    return j;
}

ordered_json to_json(const Scenario &s)
{
    ordered_json j;
    j["name"] = s.name;
    j["channel"] = to_json(s.channel);
    j["bandwidth_hz"] = s.bandwidth_hz;
    j["snr_db"] = s.snr_db;
    j["n_trials"] = s.n_trials;
    j["base_seed"] = s.base_seed;
    j["bit_range"] = s.bit_range;
    j["nrf_set"] = s.nrf_set;
    ordered_json archs = ordered_json::array();
    for (const auto a : s.architectures)
        archs.push_back(std::string(to_string(a)));
    j["architectures"] = std::move(archs);
    j["hc_tol"] = s.hc_options.tol;
    j["hc_max_iter"] = s.hc_options.max_iter;
    return j;
}

ordered_json to_json(const ComponentPowerSet &c)
{
    ordered_json j;
    j["p_lna"] = c.p_lna;
    j["p_sp"] = c.p_sp;
    j["p_c"] = c.p_c;
    j["p_ps"] = c.p_ps;
    j["p_m"] = c.p_m;
    j["p_lo"] = c.p_lo;
    j["p_lpf"] = c.p_lpf;
    j["p_bb_amp"] = c.p_bb_amp;
    j["adc_fom"] = c.adc_fom;
    return j;
}

ChannelParams channel_from_json(const json &j, ChannelParams p, const std::string &path)
{
    if (!j.is_object())
        throw ConfigError(path, "expected an object");
    for (const auto &[key, v] : j.items())
    {
        const std::string field = path + "." + key;
        if (key == "n_tx")
            p.n_tx = get_int(v, field);
        else if (key == "n_rx")
            p.n_rx = get_int(v, field);
        else if (key == "mode")
        {
            const auto m = get_string(v, field);
            if (m == "normalized")
                p.mode = ChannelMode::normalized;
            else if (m == "physical")
                p.mode = ChannelMode::physical;
            else
                throw ConfigError(field, "expected \"normalized\" or \"physical\"");
        }
        else if (key == "distance_m")
            p.distance_m = get_number(v, field);
        else if (key == "los")
            p.los = get_bool(v, field);
        else if (key == "cluster_rate")
            p.cluster_rate = get_number(v, field);
        else if (key == "paths_per_cluster")
            p.paths_per_cluster = get_int(v, field);
        else if (key == "angle_spread_deg")
            p.angle_spread_deg = get_number(v, field);
        else if (key == "array_phase")
        {
            const auto m = get_string(v, field);
            if (m == "verbatim")
                p.array_phase = ArrayPhase::verbatim;
            else if (m == "half_wavelength")
                p.array_phase = ArrayPhase::half_wavelength;
            else
                throw ConfigError(field, "expected \"verbatim\" or \"half_wavelength\"");
        }
        else
            throw ConfigError(field, "unknown field");
    }
    return p;
}

Scenario scenario_from_json(const json &j, Scenario s, const std::string &path)
{
    if (!j.is_object())
        throw ConfigError(path, "expected an object");
    for (const auto &[key, v] : j.items())
    {
        const std::string field = path + "." + key;
        if (key == "name")
            s.name = get_string(v, field);
        else if (key == "channel")
            s.channel = channel_from_json(v, s.channel, field);
        else if (key == "bandwidth_hz")
            s.bandwidth_hz = get_number(v, field);
        else if (key == "snr_db")
            s.snr_db = get_number(v, field);
        else if (key == "n_trials")
            s.n_trials = get_int(v, field);
        else if (key == "base_seed")
            s.base_seed = get_seed(v, field);
        else if (key == "bit_range")
            s.bit_range = get_int_list(v, field);
        else if (key == "nrf_set")
            s.nrf_set = get_int_list(v, field);
        else if (key == "architectures")
        {
            if (!v.is_array())
                throw ConfigError(field, "expected an array of \"AC\", \"HC\", \"DC\"");
            s.architectures.clear();
            for (std::size_t i = 0; i < v.size(); ++i)
            {
                const std::string item = field + "[" + std::to_string(i) + "]";
                try
                {
                    s.architectures.push_back(architecture_from_string(get_string(v[i], item)));
                }
                catch (const std::invalid_argument &e)
                {
                    throw ConfigError(item, e.what());
                }
            }
        }
        else if (key == "hc_tol")
            s.hc_options.tol = get_number(v, field);
        else if (key == "hc_max_iter")
            s.hc_options.max_iter = get_int(v, field);
        else
            throw ConfigError(field, "unknown field");
    }
    return s;
}

ComponentPowerSet components_from_json(const json &j, ComponentPowerSet c, const std::string &path)
{
    if (!j.is_object())
        throw ConfigError(path, "expected an object");
    for (const auto &[key, v] : j.items())
    {
        const std::string field = path + "." + key;
        double *slot = key == "p_lna"      ? &c.p_lna
                       : key == "p_sp"     ? &c.p_sp
                       : key == "p_c"      ? &c.p_c
                       : key == "p_ps"     ? &c.p_ps
                       : key == "p_m"      ? &c.p_m
                       : key == "p_lo"     ? &c.p_lo
                       : key == "p_lpf"    ? &c.p_lpf
                       : key == "p_bb_amp" ? &c.p_bb_amp
                       : key == "adc_fom"  ? &c.adc_fom
                                           : nullptr;
        if (!slot)
            throw ConfigError(field, "unknown field");
        *slot = get_number(v, field);
    }
    return c;
}

RunConfig run_config_from_json(const json &doc, const PresetCatalog &catalog)
{
    if (!doc.is_object())
        throw ConfigError("", "expected a JSON object");

    RunConfig cfg;
    bool have_scenario = false;
    bool have_components = false;
    for (const auto &[key, v] : doc.items())
    {
        if (key == "scenario")
        {
            have_scenario = true;
            if (v.is_string())
            {
                cfg.scenario = catalog.scenario(v.get<std::string>(), "scenario");
            }
            else if (v.is_object())
            {
                json fields = v;
                Scenario base;
                if (auto it = fields.find("preset"); it != fields.end())
                {
                    base = catalog.scenario(get_string(*it, "scenario.preset"), "scenario.preset");
                    fields.erase("preset");
                }
                cfg.scenario = scenario_from_json(fields, base, "scenario");
            }
            else
                throw ConfigError("scenario", "expected a preset name or an object");
        }
        else if (key == "components")
        {
            have_components = true;
            if (v.is_string())
            {
                cfg.components_name = v.get<std::string>();
                cfg.components = catalog.components(cfg.components_name, "components");
            }
            else if (v.is_object())
            {
                json fields = v;
                ComponentPowerSet base;
                cfg.components_name = "custom";
                if (auto it = fields.find("preset"); it != fields.end())
                {
                    cfg.components_name = get_string(*it, "components.preset");
                    base = catalog.components(cfg.components_name, "components.preset");
                    fields.erase("preset");
                    if (!fields.empty())
                        cfg.components_name += "*";
                }
                cfg.components = components_from_json(fields, base, "components");
            }
            else
                throw ConfigError("components", "expected a preset name or an object");
        }
        else if (key == "output")
        {
            try
            {
                cfg.output = output_format_from_string(get_string(v, "output"));
            }
            catch (const std::invalid_argument &e)
            {
                throw ConfigError("output", e.what());
            }
        }
        else if (key == "output_path")
            cfg.output_path = get_string(v, "output_path");
        else if (key == "chart")
        {
            if (!v.is_object())
                throw ConfigError("chart", "expected an object");
            for (const auto &[ck, cv] : v.items())
            {
                if (ck != "iso_power_w")
                    throw ConfigError("chart." + ck, "unknown field");
                if (!cv.is_array())
                    throw ConfigError("chart.iso_power_w", "expected an array of numbers");
                cfg.chart.iso_power_w.clear();
                for (std::size_t i = 0; i < cv.size(); ++i)
                {
                    const std::string f = "chart.iso_power_w[" + std::to_string(i) + "]";
                    const double w = get_number(cv[i], f);
                    if (!(w > 0.0) || !std::isfinite(w))
                        throw ValidationError(f, "must be > 0");
                    cfg.chart.iso_power_w.push_back(w);
                }
            }
        }
        else
            throw ConfigError(key, "unknown field");
    }
    if (!have_scenario)
        throw ConfigError("scenario", "required");
    if (!have_components)
        throw ConfigError("components", "required");

    cfg.scenario.validate("scenario");
    cfg.components.validate("components");
    return cfg;
}

// -- output documents -----------------------------------------------------

ordered_json sweep_document(const SweepResult &result, const RunConfig &config)
{
    ordered_json doc;
    doc["schema"] = kSchemaVersion;
    doc["scenario"] = to_json(result.scenario);
    ordered_json comps;
    comps["name"] = config.components_name;
    comps.update(to_json(config.components));
    doc["components"] = std::move(comps);

    ordered_json units;
    units["se"] = "bits/s/Hz";
    units["ee"] = "Gbits/J";
    units["power"] = "W";
    units["rate"] = "bits/s";
    doc["units"] = std::move(units);

    ordered_json axes;
    axes["x"] = {{"quantity", "ee"}, {"label", "Energy efficiency"}, {"unit", "Gbits/J"}, {"scale", "linear"}};
    axes["y"] = {{"quantity", "se"}, {"label", "Spectral efficiency"}, {"unit", "bits/s/Hz"}, {"scale", "linear"}};
    doc["axes"] = std::move(axes);

    std::vector<bool> optimal(result.points.size(), false);
    for (const auto &e : result.optimal_set)
        optimal[e.point_index] = true;

    ordered_json points = ordered_json::array();
    for (std::size_t i = 0; i < result.points.size(); ++i)
    {
        const auto &p = result.points[i];
        ordered_json j;
        j["index"] = i;
        j["arch"] = std::string(to_string(p.arch));
        j["bits"] = p.bits;
        j["n_rf"] = p.n_rf ? ordered_json(*p.n_rf) : ordered_json(nullptr);
        j["rf_chains"] = p.rf_chains;
        j["mean_rate_bps"] = p.mean_rate_bps;
        j["se"] = p.se_bpshz;
        j["ee"] = p.ee_bpj / 1e9;
        j["total_power_w"] = p.total_power_w;
        j["trial_count"] = p.trial_count;
        j["rate_std_err_bps"] = p.rate_std_err_bps;
        j["failed_trials"] = p.failed_trials;
        j["optimal"] = static_cast<bool>(optimal[i]);
        points.push_back(std::move(j));
    }
    doc["points"] = std::move(points);

    ordered_json opt = ordered_json::array();
    for (const auto &e : result.optimal_set)
        opt.push_back({{"alpha_interval", {e.alpha_lo, e.alpha_hi}}, {"point_index", e.point_index}});
    doc["optimal_set"] = std::move(opt);

    ordered_json iso = ordered_json::array();
    for (const double w : config.chart.iso_power_w)
        iso.push_back({{"power_w", w}, {"se_per_ee", iso_power_slope(w, result.scenario.bandwidth_hz)}});
    doc["iso_power_lines"] = std::move(iso);
    doc["warnings"] = result.warnings;
    return doc;
}

std::string dump_document(const ordered_json &doc)
{
    return doc.dump(2) + "\n";
}

std::string export_csv(const SweepResult &result)
{
    std::vector<bool> optimal(result.points.size(), false);
    for (const auto &e : result.optimal_set)
        optimal[e.point_index] = true;

    std::string out = "index,arch,bits,n_rf,rf_chains,mean_rate_bps,se_bpshz,ee_gbpj,total_power_w,"
                      "trial_count,rate_std_err_bps,failed_trials,optimal\r\n";
    for (std::size_t i = 0; i < result.points.size(); ++i)
    {
        const auto &p = result.points[i];
        out += std::to_string(i) + "," + std::string(to_string(p.arch)) + "," + std::to_string(p.bits) + "," +
               (p.n_rf ? std::to_string(*p.n_rf) : std::string()) + "," + std::to_string(p.rf_chains) + "," +
               csv_number(p.mean_rate_bps) + "," + csv_number(p.se_bpshz) + "," + csv_number(p.ee_bpj / 1e9) +
               "," + csv_number(p.total_power_w) + "," + std::to_string(p.trial_count) + "," +
               csv_number(p.rate_std_err_bps) + "," + std::to_string(p.failed_trials) + "," +
               (optimal[i] ? "1" : "0") + "\r\n";
    }
    return out;
}

std::vector<DesignPoint> parse_points_csv(std::string_view csv)
{
    std::vector<DesignPoint> out;
    std::istringstream in{std::string(csv)};
    std::string line;
    bool header = true;
    std::size_t line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (header)
        {
            header = false;
            continue;
        }
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ','))
            cells.push_back(cell);
        if (line.back() == ',')
            cells.emplace_back();
        if (cells.size() != 13)
            throw std::invalid_argument("csv line " + std::to_string(line_no) + ": expected 13 fields");

        DesignPoint p;
        p.arch = architecture_from_string(cells[1]);
        p.bits = std::stoi(cells[2]);
        if (!cells[3].empty())
            p.n_rf = std::stoi(cells[3]);
        p.rf_chains = std::stoi(cells[4]);
        p.mean_rate_bps = std::stod(cells[5]);
        p.se_bpshz = std::stod(cells[6]);
        p.ee_bpj = std::stod(cells[7]) * 1e9;
        p.total_power_w = std::stod(cells[8]);
        p.trial_count = std::stoi(cells[9]);
        p.rate_std_err_bps = std::stod(cells[10]);
        p.failed_trials = std::stoi(cells[11]);
        out.push_back(p);
    }
    return out;
}

std::string export_document(const SweepResult &result, const RunConfig &config)
{
    if (result.points.empty())
        throw std::invalid_argument("export: empty sweep result");
    switch (config.output)
    {
    case OutputFormat::json:
        return dump_document(sweep_document(result, config));
    case OutputFormat::csv:
        return export_csv(result);
    case OutputFormat::svg:
        return export_svg(result, config.chart, result.scenario.name + " / " + config.components_name);
    }
    throw std::invalid_argument("unsupported output format");
}

} // namespace mmwrx
