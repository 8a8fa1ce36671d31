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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mmwrx/channel.hpp"
#include "mmwrx/combining.hpp"
#include "mmwrx/power.hpp"

namespace mmwrx {

struct Scenario
{
    std::string name = "custom";
    ChannelParams channel;
    double bandwidth_hz = 1e9;
    double snr_db = 0.0; // P / N0 before combining
    int n_trials = 100;
    std::uint64_t base_seed = 42;
    std::vector<int> bit_range{1, 2, 3, 4, 5, 6, 7, 8};
    std::vector<int> nrf_set{2, 4, 8, 10, 12};
    std::vector<Architecture> architectures{Architecture::AC, Architecture::HC, Architecture::DC};
    AlternatingProjectionOptions hc_options;

    void validate(const std::string &path = "scenario") const;

    /// Noise is the unit reference, so P = 10^(snr_db / 10).
    double tx_power() const;
    double noise_power() const { return 1.0; }

    /// Number of design candidates the sweep evaluates.
    std::size_t grid_size() const;
};

struct Candidate
{
    Architecture arch = Architecture::DC;
    int bits = 1;
    std::optional<int> n_rf; // HC only
};

struct DesignPoint
{
    Architecture arch = Architecture::DC;
    int bits = 1;
    std::optional<int> n_rf;
    int rf_chains = 1;
    double mean_rate_bps = 0.0;
    double se_bpshz = 0.0;
    double total_power_w = 0.0;
    double ee_bpj = 0.0;
    int trial_count = 0;
    double rate_std_err_bps = 0.0;
    int failed_trials = 0; // rank-zero realizations counted as zero rate
};

struct OptimalEntry
{
    double alpha_lo = 0.0;
    double alpha_hi = 1.0;
    std::size_t point_index = 0;
};

struct SweepResult
{
    Scenario scenario;
    std::vector<DesignPoint> points;
    std::vector<OptimalEntry> optimal_set;
    std::vector<std::string> warnings;
};

/// Maps a per-trial seed to a channel matrix. The default draws
/// sample_channel(scenario.channel, seed).h.
using ChannelSource = std::function<CMatrix(std::uint64_t seed)>;

struct SweepOptions
{
    ChannelSource source;  // empty: default channel model
    unsigned threads = 0;  // 0: hardware concurrency
};

/// AC x bits, DC x bits, then HC x n_rf x bits, restricted to the scenario's
/// architectures and kept in that order.
std::vector<Candidate> candidate_grid(const Scenario &scenario);

/// Averages the per-realization rate over seeds base_seed .. base_seed + n_trials - 1.
/// Every candidate sees the same seed sequence.
DesignPoint evaluate_design(const Candidate &candidate, const Scenario &scenario,
                            const ComponentPowerSet &comps, const SweepOptions &opts = {});

SweepResult sweep(const Scenario &scenario, const ComponentPowerSet &comps, const SweepOptions &opts = {});

/// Per-trial rates in bits/s, one row per candidate and one column per trial,
/// in candidate_grid order unless `candidates` is given.
Eigen::MatrixXd trial_rates(const Scenario &scenario, std::span<const Candidate> candidates,
                            const SweepOptions &opts = {});

// -- utility scalarization ------------------------------------------------

/// One point of an (EE, SE) cloud. rf_chains and bits only break ties.
struct ObjectivePoint
{
    double ee = 0.0;
    double se = 0.0;
    int rf_chains = 0;
    int bits = 0;
};

std::vector<ObjectivePoint> objectives(std::span<const DesignPoint> points);

/// All maximizers of alpha * EE/max(EE) + (1 - alpha) * SE/max(SE).
std::vector<std::size_t> utility_select(std::span<const ObjectivePoint> cloud, double alpha);
std::vector<std::size_t> utility_select(std::span<const DesignPoint> points, double alpha);

/// Single representative of a tie set: higher SE, then fewer RF chains, then
/// fewer bits, then lower index.
std::size_t representative(std::span<const ObjectivePoint> cloud, std::span<const std::size_t> ties);

/// Exact maximizer of the normalized utility for every alpha in [0, 1],
/// as a tiling of [0, 1] into intervals. Each interval's point is the
/// maximizer on its interior; the entries are the extreme points of the
/// upper-right convex hull of the normalized cloud.
std::vector<OptimalEntry> optimal_set(std::span<const ObjectivePoint> cloud);
std::vector<OptimalEntry> optimal_set(std::span<const DesignPoint> points);

/// Index of the optimal-set entry whose interval holds alpha.
std::size_t winner_at(std::span<const OptimalEntry> optimal, double alpha);

} // namespace mmwrx
