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

#include "mmwrx/power.hpp"

#include <cmath>
#include <stdexcept>

namespace mmwrx {

namespace {

void check_common(int n_rx, int bits, double bandwidth_hz)
{
    if (n_rx < 1)
        throw std::invalid_argument("receiver power: n_rx must be >= 1");
    if (bits < 1)
        throw std::invalid_argument("receiver power: bits must be >= 1");
    if (!(bandwidth_hz > 0.0) || !std::isfinite(bandwidth_hz))
        throw std::invalid_argument("receiver power: bandwidth must be > 0");
}

} // namespace

void ComponentPowerSet::validate(const std::string &path) const
{
    const std::pair<const char *, double> fields[] = {
        {"p_lna", p_lna}, {"p_sp", p_sp}, {"p_c", p_c},     {"p_ps", p_ps},
        {"p_m", p_m},     {"p_lo", p_lo}, {"p_lpf", p_lpf}, {"p_bb_amp", p_bb_amp},
    };
    for (const auto &[name, value] : fields)
    {
        if (!(value >= 0.0) || !std::isfinite(value))
            throw ValidationError(path + "." + name, "must be a finite value >= 0");
    }
    if (!(adc_fom > 0.0) || !std::isfinite(adc_fom))
        throw ValidationError(path + ".adc_fom", "must be > 0");
}

double p_adc(double fom, double bandwidth_hz, int bits)
{
    if (!(fom > 0.0) || !(bandwidth_hz > 0.0) || bits < 1)
        throw std::invalid_argument("p_adc: fom, bandwidth and bits must be positive");
    return fom * bandwidth_hz * std::exp2(bits);
}

PowerBreakdown p_total_dc(int n_rx, const ComponentPowerSet &comps, int bits, double bandwidth_hz)
{
    check_common(n_rx, bits, bandwidth_hz);
    const double adc = p_adc(comps.adc_fom, bandwidth_hz, bits);
    const double n = n_rx;

    PowerBreakdown out;
    out.total = n * (comps.p_lna + comps.p_rf() + 2.0 * adc);
    out.per_component = {
        {"lna", n * comps.p_lna},
        {"rf_chain", n * comps.p_rf()},
        {"adc", n * 2.0 * adc},
    };
    return out;
}

PowerBreakdown p_total_ac(int n_rx, const ComponentPowerSet &comps, int bits, double bandwidth_hz)
{
    check_common(n_rx, bits, bandwidth_hz);
    const double adc = p_adc(comps.adc_fom, bandwidth_hz, bits);
    const double n = n_rx;

    PowerBreakdown out;
    out.total = n * (comps.p_lna + comps.p_ps) + comps.p_rf() + comps.p_c + 2.0 * adc;
    out.per_component = {
        {"lna", n * comps.p_lna},
        {"phase_shifter", n * comps.p_ps},
        {"rf_chain", comps.p_rf()},
        {"combiner", comps.p_c},
        {"adc", 2.0 * adc},
    };
    return out;
}

PowerBreakdown p_total_hc(int n_rx, int n_rf, const ComponentPowerSet &comps, int bits,
                          double bandwidth_hz)
{
    check_common(n_rx, bits, bandwidth_hz);
    if (n_rf < 1 || n_rf > n_rx)
        throw std::invalid_argument("p_total_hc: n_rf must lie in [1, n_rx]");
    const double adc = p_adc(comps.adc_fom, bandwidth_hz, bits);
    const double n = n_rx;
    const double k = n_rf;

    PowerBreakdown out;
    out.total = n * (comps.p_lna + comps.p_sp + k * comps.p_ps) +
                k * (comps.p_rf() + comps.p_c + 2.0 * adc);
    out.per_component = {
        {"lna", n * comps.p_lna},
        {"splitter", n * comps.p_sp},
        {"phase_shifter", n * k * comps.p_ps},
        {"rf_chain", k * comps.p_rf()},
        {"combiner", k * comps.p_c},
        {"adc", k * 2.0 * adc},
    };
    return out;
}

PowerBreakdown receiver_power(Architecture arch, int n_rx, int n_rf, const ComponentPowerSet &comps,
                              int bits, double bandwidth_hz)
{
    switch (arch)
    {
    case Architecture::AC:
        return p_total_ac(n_rx, comps, bits, bandwidth_hz);
    case Architecture::HC:
        return p_total_hc(n_rx, n_rf, comps, bits, bandwidth_hz);
    case Architecture::DC:
        return p_total_dc(n_rx, comps, bits, bandwidth_hz);
    }
    throw std::invalid_argument("receiver_power: unknown architecture");
}

} // namespace mmwrx
