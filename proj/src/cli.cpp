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

#include "mmwrx/cli.hpp"

#include <atomic>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mmwrx/serialization.hpp"
#include "mmwrx/service.hpp"

namespace mmwrx {

namespace {

using json = nlohmann::json;

struct IoError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &data)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !out.write(data.data(), static_cast<std::streamsize>(data.size())))
        throw IoError("cannot write '" + path + "'");
}

json parse_json(const std::string &text, const std::string &what)
{
    try
    {
        return json::parse(text);
    }
    catch (const json::parse_error &e)
    {
        throw ConfigError(what, e.what());
    }
}

PresetCatalog load_catalog(const std::string &path)
{
    PresetCatalog catalog = PresetCatalog::builtin();
    if (!path.empty())
        catalog.merge(PresetCatalog::from_json(parse_json(read_file(path), "catalog")));
    return catalog;
}

// Turns a string-valued section into {"preset": name} so flags can overlay it
json &section(json &doc, const char *key)
{
    json &s = doc[key];
    if (s.is_string())
        s = json{{"preset", s.get<std::string>()}};
    else if (s.is_null())
        s = json::object();
    return s;
}

std::string format_row(const char *fmt, auto... args)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, fmt, args...);
    return buf;
}

void print_summary(std::ostream &out, const SweepResult &r, const RunConfig &cfg)
{
    out << "scenario " << r.scenario.name << ", components " << cfg.components_name << ", "
        << r.points.size() << " points, " << r.scenario.n_trials << " trials\n";
    out << format_row("%-17s %-4s %4s %4s %10s %10s %10s\n", "alpha", "arch", "bits", "n_rf", "SE", "EE",
                      "power");
    out << format_row("%-17s %-4s %4s %4s %10s %10s %10s\n", "", "", "", "", "[b/s/Hz]", "[Gb/J]", "[W]");
    for (const auto &e : r.optimal_set)
    {
        const DesignPoint &p = r.points[e.point_index];
        const std::string nrf = p.n_rf ? std::to_string(*p.n_rf) : "-";
        const std::string range = format_row("[%.4f, %.4f]", e.alpha_lo, e.alpha_hi);
        out << format_row("%-17s %-4s %4d %4s %10.4f %10.4f %10.4f\n", range.c_str(),
                          std::string(to_string(p.arch)).c_str(), p.bits, nrf.c_str(), p.se_bpshz,
                          p.ee_bpj * 1e-9, p.total_power_w);
    }
    for (const auto &w : r.warnings)
        out << "warning: " << w << "\n";
}

std::atomic<Service *> g_service{nullptr};

extern "C" void on_signal(int)
{
    if (Service *s = g_service.load())
        s->stop();
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"mmWave receiver architecture trade-off simulator", "mmwrx"};
    app.require_subcommand(1);

    std::string catalog_path;
    app.add_option("--catalog", catalog_path, "Extra preset catalog (JSON), merged over the built-in one");

    auto *presets_cmd = app.add_subcommand("presets", "Print the preset catalog");

    auto *sweep_cmd = app.add_subcommand("sweep", "Run a sweep and export the chart");
    std::string config_path, scenario_name, components_name, out_path, format_name, arch_list;
    std::optional<int> trials, threads_opt;
    std::optional<std::uint64_t> seed;
    std::optional<double> bandwidth, snr_db;
    std::vector<int> bits, nrf;
    std::vector<double> iso_power;
    sweep_cmd->add_option("--config", config_path, "Run configuration (JSON)");
    sweep_cmd->add_option("--preset", scenario_name, "Scenario preset");
    sweep_cmd->add_option("--components", components_name, "Component power preset");
    sweep_cmd->add_option("--out", out_path, "Output file, '-' for standard output");
    sweep_cmd->add_option("--format", format_name, "json, csv or svg (default: from --out extension)");
    sweep_cmd->add_option("--trials", trials, "Channel realizations per design");
    sweep_cmd->add_option("--seed", seed, "Base seed");
    sweep_cmd->add_option("--bandwidth", bandwidth, "Bandwidth in Hz");
    sweep_cmd->add_option("--snr-db", snr_db, "SNR before combining in dB");
    sweep_cmd->add_option("--bits", bits, "Bit range as two values: lo hi")->expected(2);
    sweep_cmd->add_option("--nrf", nrf, "RF chain counts for HC")->delimiter(',');
    sweep_cmd->add_option("--arch", arch_list, "Comma separated subset of AC,HC,DC");
    sweep_cmd->add_option("--iso-power", iso_power, "Iso-power guide lines in W")->delimiter(',');
    sweep_cmd->add_option("--threads", threads_opt, "Worker threads (0: all cores)");

    auto *serve_cmd = app.add_subcommand("serve", "Serve the HTTP API");
    int port = 8080;
    std::string bind_addr = "127.0.0.1";
    std::size_t max_evaluations = ServiceOptions{}.max_trial_evaluations;
    unsigned serve_threads = 0;
    serve_cmd->add_option("--port", port, "TCP port (0: any free port)");
    serve_cmd->add_option("--bind", bind_addr, "Bind address");
    serve_cmd->add_option("--max-evaluations", max_evaluations, "Cap on n_trials x grid size per request");
    serve_cmd->add_option("--threads", serve_threads, "Worker threads per sweep (0: all cores)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        out << app.help();
        return kExitOk;
    }
    catch (const CLI::CallForAllHelp &e)
    {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    }
    catch (const CLI::ParseError &e)
    {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }

    try
    {
        const PresetCatalog catalog = load_catalog(catalog_path);

        if (presets_cmd->parsed())
        {
            out << dump_document(catalog.to_json());
            return kExitOk;
        }

        if (serve_cmd->parsed())
        {
            ServiceOptions opts;
            opts.max_trial_evaluations = max_evaluations;
            opts.threads = serve_threads;
            Service service(catalog, opts);
            const int bound = service.bind(bind_addr, port);
            if (bound < 0)
            {
                err << "error: cannot bind " << bind_addr << ":" << port << "\n";
                return kExitIo;
            }
            out << "listening on http://" << bind_addr << ":" << bound << "\n" << std::flush;
            g_service = &service;
            auto prev_int = std::signal(SIGINT, on_signal);
            auto prev_term = std::signal(SIGTERM, on_signal);
            service.run();
            std::signal(SIGINT, prev_int);
            std::signal(SIGTERM, prev_term);
            g_service = nullptr;
            return kExitOk;
        }

        // sweep: config file, then flags on top, then one resolution path
        // shared with the HTTP service
        json doc = config_path.empty() ? json::object() : parse_json(read_file(config_path), "config");
        if (!doc.is_object())
            throw ConfigError("config", "expected a JSON object");
        if (!scenario_name.empty())
            section(doc, "scenario")["preset"] = scenario_name;
        if (!components_name.empty())
            doc["components"] = components_name;
        auto set_scenario = [&](const char *key, const json &v) { section(doc, "scenario")[key] = v; };
        if (trials)
            set_scenario("n_trials", *trials);
        if (seed)
            set_scenario("base_seed", *seed);
        if (bandwidth)
            set_scenario("bandwidth_hz", *bandwidth);
        if (snr_db)
            set_scenario("snr_db", *snr_db);
        if (!bits.empty())
            set_scenario("bit_range", bits);
        if (!nrf.empty())
            set_scenario("nrf_set", nrf);
        if (!arch_list.empty())
        {
            json archs = json::array();
            std::stringstream ss(arch_list);
            for (std::string a; std::getline(ss, a, ',');)
                archs.push_back(a);
            set_scenario("architectures", archs);
        }
        if (!iso_power.empty())
            doc["chart"]["iso_power_w"] = iso_power;
        if (!out_path.empty())
            doc["output_path"] = out_path;
        if (!format_name.empty())
            doc["output"] = format_name;
        else if (!doc.contains("output") && doc.contains("output_path"))
        {
            const std::string p = doc["output_path"].is_string() ? doc["output_path"].get<std::string>() : "";
            const auto dot = p.rfind('.');
            if (dot != std::string::npos)
            {
                const std::string ext = p.substr(dot + 1);
                if (ext == "csv" || ext == "svg" || ext == "json")
                    doc["output"] = ext;
            }
        }

        const RunConfig cfg = run_config_from_json(doc, catalog);
        SweepOptions opts;
        opts.threads = threads_opt ? static_cast<unsigned>(std::max(*threads_opt, 0)) : 0u;
        const SweepResult result = sweep(cfg.scenario, cfg.components, opts);

        if (cfg.output_path == "-")
        {
            out << export_document(result, cfg);
            return kExitOk;
        }
        if (!cfg.output_path.empty())
            write_file(cfg.output_path, export_document(result, cfg));
        print_summary(out, result, cfg);
        return kExitOk;
    }
    catch (const ConfigError &e)
    {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    catch (const ValidationError &e)
    {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    catch (const IoError &e)
    {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    }
    catch (const std::exception &e)
    {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}

} // namespace mmwrx
