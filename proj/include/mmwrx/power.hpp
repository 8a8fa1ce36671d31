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

#pragma once

#include <map>
#include <string>

#include "mmwrx/types.hpp"

namespace mmwrx {

/// Per-device receiver power figures in Watts and the ADC Walden figure of
/// merit in J per conversion step per Hz.
struct ComponentPowerSet
{
    double p_lna = 0.0;
    double p_sp = 0.0;
    double p_c = 0.0;
    double p_ps = 0.0;
    double p_m = 0.0;
    double p_lo = 0.0;
    double p_lpf = 0.0;
    double p_bb_amp = 0.0;
    double adc_fom = 0.0;

    /// Mixer + local oscillator + low pass filter + baseband amplifier.
    double p_rf() const { return p_m + p_lo + p_lpf + p_bb_amp; }

    void validate(const std::string &path = "components") const;
};

struct PowerBreakdown
{
    double total = 0.0;
    std::map<std::string, double> per_component;
};

/// c B 2^b.
double p_adc(double fom, double bandwidth_hz, int bits);

/// N_r (P_LNA + P_RF + 2 P_ADC)
PowerBreakdown p_total_dc(int n_rx, const ComponentPowerSet &comps, int bits, double bandwidth_hz);

/// N_r (P_LNA + P_PS) + P_RF + P_C + 2 P_ADC
PowerBreakdown p_total_ac(int n_rx, const ComponentPowerSet &comps, int bits, double bandwidth_hz);

/// N_r (P_LNA + P_SP + N_RF P_PS) + N_RF (P_RF + P_C + 2 P_ADC)
PowerBreakdown p_total_hc(int n_rx, int n_rf, const ComponentPowerSet &comps, int bits,
                          double bandwidth_hz);

/// Dispatches on the architecture; n_rf is ignored for AC and DC.
PowerBreakdown receiver_power(Architecture arch, int n_rx, int n_rf, const ComponentPowerSet &comps,
                              int bits, double bandwidth_hz);

} // namespace mmwrx
