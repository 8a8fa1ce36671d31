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

#include "mmwrx/channel.hpp"

#include <cmath>
#include <numbers>

namespace mmwrx {

ArrayResponse array_response(double angle, int n, ArrayPhase phase)
{
    if (n < 1)
        throw std::invalid_argument("array_response: n must be >= 1");

    ArrayResponse out;
    out.angle = angle;
    out.n_elements = n;
    out.vector.resize(n);
    const double s = std::sin(angle);
    const double step = phase == ArrayPhase::verbatim ? s / n : std::numbers::pi * s;
    out.vector(0) = cplx(1.0, 0.0);
    for (int k = 1; k < n; ++k)
        out.vector(k) = std::polar(1.0, step * k);
    return out;
}

void ChannelParams::validate(const std::string &path) const
{
    if (n_tx < 1)
        throw ValidationError(path + ".n_tx", "must be >= 1");
    if (n_rx < 1)
        throw ValidationError(path + ".n_rx", "must be >= 1");
    if (!(cluster_rate > 0.0) || !std::isfinite(cluster_rate))
        throw ValidationError(path + ".cluster_rate", "must be > 0");
    if (paths_per_cluster < 1)
        throw ValidationError(path + ".paths_per_cluster", "must be >= 1");
    if (!(angle_spread_deg >= 0.0) || !std::isfinite(angle_spread_deg))
        throw ValidationError(path + ".angle_spread_deg", "must be >= 0");
    if (mode == ChannelMode::physical && !(distance_m > 0.0))
        throw ValidationError(path + ".distance_m", "must be > 0");
}

double pathloss_db(double distance_m, bool los, std::optional<double> shadowing_db)
{
    if (!(distance_m > 0.0) || !std::isfinite(distance_m))
        throw std::invalid_argument("pathloss_db: distance must be positive");
    const double xi = shadowing_db.value_or(0.0);
    if (los)
        return 61.5 + 20.0 * std::log10(distance_m) + xi;
    return 72.0 + 29.2 * std::log10(distance_m) + xi;
}

double pathloss_db(double distance_m, bool los, Rng &rng)
{
    const double sigma = los ? kLosShadowingStdDb : kNlosShadowingStdDb;
    return pathloss_db(distance_m, los, rng.normal(0.0, sigma));
}

CMatrix assemble_channel(const ChannelParams &params, std::span<const Cluster> clusters,
                         double pathloss_db)
{
    CMatrix h = CMatrix::Zero(params.n_rx, params.n_tx);
    std::size_t n_paths = 0;
    for (const auto &c : clusters)
    {
        for (std::size_t l = 0; l < c.path_gains.size(); ++l)
        {
            const CVector ar = array_response(c.aoa_central + c.aoa_offsets[l], params.n_rx,
                                              params.array_phase).vector;
            const CVector at = array_response(c.aod_central + c.aod_offsets[l], params.n_tx,
                                              params.array_phase).vector;
            h.noalias() += c.path_gains[l] * (ar * at.adjoint());
        }
        n_paths += c.path_gains.size();
    }
    if (n_paths == 0)
        return h;
    const double rho = std::pow(10.0, pathloss_db / 10.0);
    h *= std::sqrt(1.0 / (rho * static_cast<double>(n_paths)));
    return h;
}

ChannelRealization sample_channel(const ChannelParams &params, std::uint64_t seed)
{
    params.validate();
    Rng rng(seed);

    ChannelRealization out;
    if (params.mode == ChannelMode::physical)
        out.pathloss_db = pathloss_db(params.distance_m, params.los, rng);

    const int n_clusters = std::max(1, rng.poisson(params.cluster_rate));
    const double spread = params.angle_spread_deg * std::numbers::pi / 180.0;
    out.clusters.resize(n_clusters);
    for (auto &c : out.clusters)
    {
        c.aoa_central = rng.uniform(0.0, 2.0 * std::numbers::pi);
        c.aod_central = rng.uniform(0.0, 2.0 * std::numbers::pi);
        c.path_gains.resize(params.paths_per_cluster);
        c.aoa_offsets.resize(params.paths_per_cluster);
        c.aod_offsets.resize(params.paths_per_cluster);
        for (int l = 0; l < params.paths_per_cluster; ++l)
        {
            c.path_gains[l] = rng.complex_normal();
            c.aoa_offsets[l] = rng.normal(0.0, spread);
            c.aod_offsets[l] = rng.normal(0.0, spread);
        }
    }
    out.h = assemble_channel(params, out.clusters, out.pathloss_db);
    return out;
}

} // namespace mmwrx
