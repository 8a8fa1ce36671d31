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

#include <string>

#include "mmwrx/serialization.hpp"
#include "mmwrx/tradeoff.hpp"

namespace mmwrx {

/// Slope of a constant receiver-power line in the (EE [Gbits/J], SE) plane:
/// SE = (P / B) EE, i.e. P * 1e9 / B per Gbit/J.
double iso_power_slope(double power_w, double bandwidth_hz);

/// Static SVG 1.1 scatter chart: EE on x, SE on y, one polyline per
/// (architecture, n_rf) ordered by bits, one <circle> marker per point with
/// optimal-set points outlined, and dotted constant-power diagonals.
std::string export_svg(const SweepResult &result, const ChartOptions &options, const std::string &title);

} // namespace mmwrx
