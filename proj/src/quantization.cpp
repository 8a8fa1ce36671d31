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

#include "mmwrx/quantization.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mmwrx {

double eta_closed_form(int bits)
{
    if (bits < 1)
        throw std::invalid_argument("eta: bits must be >= 1");
    return std::numbers::pi * std::sqrt(3.0) / 2.0 * std::exp2(-2.0 * bits);
}

double eta_for_bits(int bits)
{
    if (bits < 1)
        throw std::invalid_argument("eta: bits must be >= 1");
    if (bits <= static_cast<int>(kEtaTable.size()))
        return kEtaTable[bits - 1];
    return eta_closed_form(bits);
}

} // namespace mmwrx
