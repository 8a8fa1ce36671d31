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

#include <array>
#include <optional>

namespace mmwrx {

/// AQNM distortion factor for b = 1..5 bits (Gaussian input, optimal
/// non-uniform quantizer).
inline constexpr std::array<double, 5> kEtaTable{0.3634, 0.1175, 0.03454, 0.009497, 0.002499};

/// eta(b): table lookup for b <= 5, (pi sqrt(3) / 2) 2^(-2b) above.
/// Throws std::invalid_argument for b <= 0.
double eta_for_bits(int bits);

/// Closed-form high-resolution approximation, valid for any b >= 1.
double eta_closed_form(int bits);

struct QuantizerModel
{
    std::optional<int> bits; // empty means an ideal (unquantized) receiver
    double eta = 0.0;

    static QuantizerModel from_bits(int bits) { return {bits, eta_for_bits(bits)}; }
    static QuantizerModel ideal() { return {std::nullopt, 0.0}; }
    bool is_ideal() const { return !bits.has_value(); }
};

} // namespace mmwrx
