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

#include <optional>
#include <span>
#include <vector>

#include "mmwrx/types.hpp"

namespace mmwrx {

/// Transmit power, thermal noise power, AQNM distortion and bandwidth shared
/// by every rate evaluation.
struct LinkParams
{
    double tx_power = 1.0;
    double noise_power = 1.0;
    double eta = 0.0;
    double bandwidth_hz = 1.0;

    void validate() const;
};

/// Full singular value decomposition M = U diag(s) V^H. U and V are square
/// unitary; s has min(rows, cols) entries in nonincreasing order.
struct Svd
{
    CMatrix u;
    RVector s;
    CMatrix v;
};

Svd full_svd(const CMatrix &m);

/// Exact water-filling: p_i = max(0, mu - noise / g_i) with sum p_i = total.
/// Zero gains get zero power. Throws RankZeroError when every gain is zero.
RVector waterfill(std::span<const double> gains, double total_power, double noise_power);

struct CombinerDesign
{
    Architecture arch = Architecture::DC;
    CMatrix w_t;                 // transmit precoder, unit-norm columns
    std::optional<CMatrix> w_rf; // analog combiner; absent for DC
    CMatrix w_bb;                // digital combiner (1x1 identity for AC)
    int n_rf = 1;
    RVector singular_values;     // of the channel the design was computed from
};

struct RateResult
{
    double rate_bps = 0.0;
    double se_bpshz = 0.0;
    RVector power_alloc;
    int n_streams = 0;
    bool single_beam_fallback = false; // HC only; see rate_hc_achievable
};

/// Quantized MIMO rate of a diagonalized channel:
///   B log2 det(I + (1 - eta) S R S^H (N0 I + eta U^H diag(U S R S^H U^H) U)^-1)
/// with R from water-filling s^2 against thermal noise only. The determinant
/// is taken in the full U dimension (the receive-side signal space).
RateResult quantized_mimo_rate(const Svd &svd, const LinkParams &link);

CombinerDesign design_dc(const CMatrix &h);
RateResult rate_dc(const CMatrix &h, const LinkParams &link);

/// Entrywise (1 / sqrt(n_rx)) exp(j angle(w_ij)).
CMatrix constant_modulus_projection(const CMatrix &w, int n_rx);

/// Phase-projected maximum left singular vector as w_r; w_t is the unit-norm
/// matched filter H^H w_r / ||H^H w_r||.
CombinerDesign design_ac(const CMatrix &h);
CombinerDesign design_ac(const CMatrix &h, const Svd &svd);

/// B log2(1 + (1 - eta) g P / (N0 + eta g P)) with g = |w_r^H H w_t|^2.
RateResult rate_ac(const CMatrix &h, const CVector &w_r, const CVector &w_t, const LinkParams &link);
RateResult rate_single_beam(double gain, const LinkParams &link);

struct AlternatingProjectionOptions
{
    double tol = 1e-6;
    int max_iter = 200;
};

struct HybridRfDesign
{
    CMatrix w_rf;               // n_rx x n_rf, every entry of modulus 1/sqrt(n_rx)
    int iterations = 0;
    bool converged = false;
    std::vector<double> changes; // relative Frobenius change per iteration
};

/// Alternating projection between the constant-modulus set and the
/// semi-unitary set, started from the n_rf leading left singular vectors.
/// The semi-unitary step is the polar factor W (W^H W)^(-1/2).
HybridRfDesign design_hc_rf(const CMatrix &h, int n_rf, const AlternatingProjectionOptions &opts = {});
HybridRfDesign design_hc_rf(const Svd &svd_of_h, int n_rf, const AlternatingProjectionOptions &opts = {});

/// SVD of the equivalent channel W_RF^H H (n_rf x n_tx).
Svd equivalent_channel_svd(const CMatrix &h, const CMatrix &w_rf);

/// Hybrid rate with white post-combining noise and quantization in the
/// RF-chain space.
RateResult rate_hc(const CMatrix &h, const CMatrix &w_rf, const LinkParams &link);

/// Best of rate_hc and the single-beam operating point in which one RF chain
/// carries the AC beam and the digital stage ignores the others. Both are
/// realizable by an n_rf-chain hybrid receiver, so the result never falls
/// below rate_ac for the same channel.
RateResult rate_hc_achievable(const Svd &equivalent, double ac_gain, const LinkParams &link);
RateResult rate_hc_achievable(const CMatrix &h, const CMatrix &w_rf, const CombinerDesign &ac,
                              const LinkParams &link);

double beam_gain(const CMatrix &h, const CVector &w_r, const CVector &w_t);

} // namespace mmwrx
