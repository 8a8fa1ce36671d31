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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mmwrx/channel.hpp"
#include "mmwrx/combining.hpp"
#include "mmwrx/power.hpp"
#include "mmwrx/quantization.hpp"
#include "mmwrx/serialization.hpp"
#include "mmwrx/tradeoff.hpp"

namespace py = pybind11;
using namespace mmwrx;

namespace {

// Structured inputs cross the boundary as JSON text so Python callers get
// the same strict field checking as config files and the HTTP API.
nlohmann::json parse(const std::string &text, const std::string &what)
{
    try
    {
        return text.empty() ? nlohmann::json::object() : nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error &e)
    {
        throw ConfigError(what, e.what());
    }
}

ComponentPowerSet components_arg(const std::string &text)
{
    const auto j = parse(text, "components");
    ComponentPowerSet c = j.is_string() ? PresetCatalog::builtin().components(j.get<std::string>())
                                        : components_from_json(j, {}, "components");
    c.validate();
    return c;
}

LinkParams link_arg(double tx_power, double noise_power, double eta, double bandwidth_hz)
{
    LinkParams l;
    l.tx_power = tx_power;
    l.noise_power = noise_power;
    l.eta = eta;
    l.bandwidth_hz = bandwidth_hz;
    return l;
}

py::dict rate_dict(const RateResult &r)
{
    py::dict d;
    d["rate_bps"] = r.rate_bps;
    d["se_bpshz"] = r.se_bpshz;
    d["power_alloc"] = r.power_alloc;
    d["n_streams"] = r.n_streams;
    d["single_beam_fallback"] = r.single_beam_fallback;
    return d;
}

std::vector<ObjectivePoint> cloud_arg(const std::vector<double> &ee, const std::vector<double> &se)
{
    if (ee.size() != se.size() || ee.empty())
        throw std::invalid_argument("ee and se must be nonempty and of equal length");
    std::vector<ObjectivePoint> cloud(ee.size());
    for (std::size_t i = 0; i < ee.size(); ++i)
    {
        cloud[i].ee = ee[i];
        cloud[i].se = se[i];
    }
    return cloud;
}

} // namespace

PYBIND11_MODULE(_mmwrx, m)
{
    m.doc() = "mmWave receiver architecture trade-off simulator";

    py::register_exception<RankZeroError>(m, "RankZeroError", PyExc_ArithmeticError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    m.attr("SCHEMA_VERSION") = std::string(kSchemaVersion);

    // quantization
    m.def("eta_for_bits", &eta_for_bits, py::arg("bits"));
    m.def("eta_closed_form", &eta_closed_form, py::arg("bits"));

    // power
    m.def("p_adc", &p_adc, py::arg("fom"), py::arg("bandwidth_hz"), py::arg("bits"));
    m.def(
        "receiver_power",
        [](const std::string &arch, int n_rx, int n_rf, const std::string &components, int bits,
           double bandwidth_hz) {
            const PowerBreakdown b =
                receiver_power(architecture_from_string(arch), n_rx, n_rf, components_arg(components), bits,
                               bandwidth_hz);
            return py::make_tuple(b.total, b.per_component);
        },
        py::arg("arch"), py::arg("n_rx"), py::arg("n_rf"), py::arg("components"), py::arg("bits"),
        py::arg("bandwidth_hz"),
        "Total power in W and its per-component split. `components` is a preset name in JSON "
        "quotes or a JSON object.");

    // channel
    m.def(
        "sample_channel",
        [](const std::string &params, std::uint64_t seed) {
            ChannelParams p = channel_from_json(parse(params, "channel"), {}, "channel");
            return sample_channel(p, seed).h;
        },
        py::arg("params") = "", py::arg("seed") = 42);

    // combining
    m.def(
        "waterfill",
        [](const std::vector<double> &gains, double total_power, double noise_power) {
            const RVector p = waterfill(gains, total_power, noise_power);
            return std::vector<double>(p.data(), p.data() + p.size());
        },
        py::arg("gains"), py::arg("total_power"), py::arg("noise_power"));
    m.def(
        "rate_dc",
        [](const CMatrix &h, double tx_power, double noise_power, double eta, double bandwidth_hz) {
            return rate_dict(rate_dc(h, link_arg(tx_power, noise_power, eta, bandwidth_hz)));
        },
        py::arg("h"), py::arg("tx_power"), py::arg("noise_power") = 1.0, py::arg("eta") = 0.0,
        py::arg("bandwidth_hz") = 1e9);
    m.def(
        "rate_ac",
        [](const CMatrix &h, double tx_power, double noise_power, double eta, double bandwidth_hz) {
            const CombinerDesign ac = design_ac(h);
            return rate_dict(
                rate_ac(h, ac.w_rf->col(0), ac.w_t.col(0), link_arg(tx_power, noise_power, eta, bandwidth_hz)));
        },
        py::arg("h"), py::arg("tx_power"), py::arg("noise_power") = 1.0, py::arg("eta") = 0.0,
        py::arg("bandwidth_hz") = 1e9);
    m.def(
        "rate_hc",
        [](const CMatrix &h, int n_rf, double tx_power, double noise_power, double eta, double bandwidth_hz) {
            const HybridRfDesign rf = design_hc_rf(h, n_rf);
            return rate_dict(rate_hc_achievable(h, rf.w_rf, design_ac(h),
                                                link_arg(tx_power, noise_power, eta, bandwidth_hz)));
        },
        py::arg("h"), py::arg("n_rf"), py::arg("tx_power"), py::arg("noise_power") = 1.0, py::arg("eta") = 0.0,
        py::arg("bandwidth_hz") = 1e9);
    m.def(
        "design_hc_rf",
        [](const CMatrix &h, int n_rf, double tol, int max_iter) {
            const HybridRfDesign d = design_hc_rf(h, n_rf, {tol, max_iter});
            return py::make_tuple(d.w_rf, d.iterations, d.converged);
        },
        py::arg("h"), py::arg("n_rf"), py::arg("tol") = 1e-6, py::arg("max_iter") = 200);

    // trade-off
    m.def(
        "utility_select",
        [](const std::vector<double> &ee, const std::vector<double> &se, double alpha) {
            return utility_select(cloud_arg(ee, se), alpha);
        },
        py::arg("ee"), py::arg("se"), py::arg("alpha"));
    m.def(
        "optimal_set",
        [](const std::vector<double> &ee, const std::vector<double> &se) {
            std::vector<std::tuple<double, double, std::size_t>> out;
            for (const auto &e : optimal_set(cloud_arg(ee, se)))
                out.emplace_back(e.alpha_lo, e.alpha_hi, e.point_index);
            return out;
        },
        py::arg("ee"), py::arg("se"), "List of (alpha_lo, alpha_hi, point_index).");

    // documents
    m.def("presets", [] { return dump_document(PresetCatalog::builtin().to_json()); });
    m.def(
        "sweep",
        [](const std::string &config, unsigned threads) {
            const RunConfig cfg = run_config_from_json(parse(config, "config"), PresetCatalog::builtin());
            SweepOptions opts;
            opts.threads = threads;
            SweepResult r;
            {
                py::gil_scoped_release release;
                r = sweep(cfg.scenario, cfg.components, opts);
            }
            return export_document(r, cfg);
        },
        py::arg("config"), py::arg("threads") = 0,
        "Runs a sweep from a run-config JSON text and returns the rendered document.");
}
