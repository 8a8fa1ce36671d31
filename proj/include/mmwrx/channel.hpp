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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mmwrx/rng.hpp"
#include "mmwrx/types.hpp"

namespace mmwrx {

enum class ChannelMode { normalized, physical };

/// Element phase law of the uniform linear array.
///   verbatim:        entry k = exp(j * sin(angle) * k / N)
///   half_wavelength: entry k = exp(j * pi * k * sin(angle))
enum class ArrayPhase { verbatim, half_wavelength };

struct ArrayResponse
{
    double angle = 0.0; // radians
    int n_elements = 0;
    CVector vector;     // unit-modulus entries, entry 0 is exactly 1
};

ArrayResponse array_response(double angle, int n, ArrayPhase phase = ArrayPhase::verbatim);

struct ChannelParams
{
    int n_tx = 16;
    int n_rx = 64;
    ChannelMode mode = ChannelMode::normalized;
    double distance_m = 100.0; // physical mode only
    bool los = true;           // physical mode only
    double cluster_rate = 1.9;
    int paths_per_cluster = 20;
    double angle_spread_deg = 10.0;
    ArrayPhase array_phase = ArrayPhase::half_wavelength;

    /// Throws ValidationError naming the offending field under `path`.
    void validate(const std::string &path = "channel") const;
};

struct Cluster
{
    double aoa_central = 0.0; // radians
    double aod_central = 0.0; // radians
    std::vector<cplx> path_gains;
    std::vector<double> aoa_offsets; // radians, one per path
    std::vector<double> aod_offsets; // radians, one per path
};

struct ChannelRealization
{
    CMatrix h; // n_rx x n_tx
    std::vector<Cluster> clusters;
    double pathloss_db = 0.0; // 0 in normalized mode
};

/// Macroscopic pathloss in dB. LOS: 61.5 + 20 log10(d) + xi, NLOS:
/// 72 + 29.2 log10(d) + xi. The shadowing term xi is taken from
/// `shadowing_db` when given; otherwise it is zero.
double pathloss_db(double distance_m, bool los, std::optional<double> shadowing_db);

/// Same, with xi ~ N(0, 5.8 dB) for LOS or N(0, 8.7 dB) for NLOS drawn from `rng`.
double pathloss_db(double distance_m, bool los, Rng &rng);

inline constexpr double kLosShadowingStdDb = 5.8;
inline constexpr double kNlosShadowingStdDb = 8.7;

/// Clustered sum
///   H = sqrt(1 / (rho N_c N_p)) sum_k sum_l g_kl a_r(phi_k + dphi_kl) a_t(theta_k + dtheta_kl)^H
/// with unit-modulus array responses, i.e. unit-norm steering vectors scaled
/// by sqrt(N_t N_r). rho is 10^(pathloss_db / 10).
CMatrix assemble_channel(const ChannelParams &params, std::span<const Cluster> clusters,
                         double pathloss_db = 0.0);

/// Draws one realization. Deterministic in (params, seed). The cluster count is
/// max(1, Poisson(cluster_rate)).
ChannelRealization sample_channel(const ChannelParams &params, std::uint64_t seed);

} // namespace mmwrx
