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

#include "mmwrx/tradeoff.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <set>
#include <thread>

#include "mmwrx/quantization.hpp"

namespace mmwrx {

void Scenario::validate(const std::string &path) const
{
    channel.validate(path + ".channel");
    if (!(bandwidth_hz > 0.0) || !std::isfinite(bandwidth_hz))
        throw ValidationError(path + ".bandwidth_hz", "must be > 0");
    if (!std::isfinite(snr_db))
        throw ValidationError(path + ".snr_db", "must be finite");
    if (n_trials < 1)
        throw ValidationError(path + ".n_trials", "must be >= 1");
    if (architectures.empty())
        throw ValidationError(path + ".architectures", "must not be empty");
    std::set<Architecture> seen_arch;
    for (std::size_t i = 0; i < architectures.size(); ++i)
    {
        if (!seen_arch.insert(architectures[i]).second)
            throw ValidationError(path + ".architectures[" + std::to_string(i) + "]", "duplicate entry");
    }
    if (bit_range.empty())
        throw ValidationError(path + ".bit_range", "must not be empty");
    std::set<int> seen_bits;
    for (std::size_t i = 0; i < bit_range.size(); ++i)
    {
        const std::string field = path + ".bit_range[" + std::to_string(i) + "]";
        if (bit_range[i] < 1 || bit_range[i] > 24)
            throw ValidationError(field, "must lie in [1, 24]");
        if (!seen_bits.insert(bit_range[i]).second)
            throw ValidationError(field, "duplicate entry");
    }
    const bool hybrid = seen_arch.contains(Architecture::HC);
    if (hybrid && nrf_set.empty())
        throw ValidationError(path + ".nrf_set", "must not be empty when HC is evaluated");
    std::set<int> seen_rf;
    for (std::size_t i = 0; i < nrf_set.size(); ++i)
    {
        const std::string field = path + ".nrf_set[" + std::to_string(i) + "]";
        if (nrf_set[i] < 1)
            throw ValidationError(field, "must be >= 1");
        if (nrf_set[i] > channel.n_rx)
            throw ValidationError(field, "n_rf " + std::to_string(nrf_set[i]) + " exceeds n_rx " +
                                             std::to_string(channel.n_rx));
        if (!seen_rf.insert(nrf_set[i]).second)
            throw ValidationError(field, "duplicate entry");
    }
    if (!(hc_options.tol > 0.0))
        throw ValidationError(path + ".hc_tol", "must be > 0");
    if (hc_options.max_iter < 1)
        throw ValidationError(path + ".hc_max_iter", "must be >= 1");
}

double Scenario::tx_power() const
{
    return std::pow(10.0, snr_db / 10.0);
}

std::size_t Scenario::grid_size() const
{
    std::size_t n = 0;
    for (const auto arch : architectures)
        n += bit_range.size() * (arch == Architecture::HC ? nrf_set.size() : 1);
    return n;
}

std::vector<Candidate> candidate_grid(const Scenario &scenario)
{
    const auto has = [&](Architecture a) {
        return std::find(scenario.architectures.begin(), scenario.architectures.end(), a) !=
               scenario.architectures.end();
    };
    std::vector<Candidate> out;
    for (const auto arch : {Architecture::AC, Architecture::DC})
    {
        if (!has(arch))
            continue;
        for (const int b : scenario.bit_range)
            out.push_back({arch, b, std::nullopt});
    }
    if (has(Architecture::HC))
    {
        for (const int n_rf : scenario.nrf_set)
            for (const int b : scenario.bit_range)
                out.push_back({Architecture::HC, b, n_rf});
    }
    return out;
}

namespace {

struct TrialBatch
{
    Eigen::MatrixXd rates;     // candidates x trials
    std::vector<char> failed;  // per trial
};

// Rates of every candidate on one channel. Designs that do not depend on the
// resolution are computed once and shared across bits.
void evaluate_trial(const CMatrix &h, const Scenario &scenario, std::span<const Candidate> candidates,
                    double *out)
{
    const Svd svd = full_svd(h);
    if (svd.s.size() == 0 || svd.s(0) == 0.0 || !std::isfinite(svd.s(0)))
        throw RankZeroError();

    bool need_beam = false;
    std::set<int> hybrid_sizes;
    for (const auto &c : candidates)
    {
        if (c.arch != Architecture::DC)
            need_beam = true;
        if (c.arch == Architecture::HC)
            hybrid_sizes.insert(*c.n_rf);
    }

    double beam = 0.0;
    if (need_beam)
    {
        const CombinerDesign ac = design_ac(h, svd);
        beam = beam_gain(h, ac.w_rf->col(0), ac.w_t.col(0));
    }
    std::map<int, Svd> equivalent;
    for (const int n_rf : hybrid_sizes)
    {
        const HybridRfDesign rf = design_hc_rf(svd, n_rf, scenario.hc_options);
        equivalent.emplace(n_rf, equivalent_channel_svd(h, rf.w_rf));
    }

    LinkParams link;
    link.tx_power = scenario.tx_power();
    link.noise_power = scenario.noise_power();
    link.bandwidth_hz = scenario.bandwidth_hz;
    for (std::size_t i = 0; i < candidates.size(); ++i)
    {
        const auto &c = candidates[i];
        link.eta = eta_for_bits(c.bits);
        switch (c.arch)
        {
        case Architecture::AC:
            out[i] = rate_single_beam(beam, link).rate_bps;
            break;
        case Architecture::DC:
            out[i] = quantized_mimo_rate(svd, link).rate_bps;
            break;
        case Architecture::HC:
            out[i] = rate_hc_achievable(equivalent.at(*c.n_rf), beam, link).rate_bps;
            break;
        }
    }
}

TrialBatch run_trials(const Scenario &scenario, std::span<const Candidate> candidates,
                      const SweepOptions &opts)
{
    const ChannelSource source =
        opts.source ? opts.source : ChannelSource([params = scenario.channel](std::uint64_t seed) {
            return sample_channel(params, seed).h;
        });

    const int n_trials = scenario.n_trials;
    TrialBatch batch;
    batch.rates = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(candidates.size()), n_trials);
    batch.failed.assign(n_trials, 0);

    unsigned n_threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(n_trials));

    std::vector<std::exception_ptr> errors(n_threads);
    auto work = [&](unsigned worker) {
        try
        {
            for (int t = static_cast<int>(worker); t < n_trials; t += static_cast<int>(n_threads))
            {
                const std::uint64_t seed = scenario.base_seed + static_cast<std::uint64_t>(t);
                try
                {
                    const CMatrix h = source(seed);
                    evaluate_trial(h, scenario, candidates, batch.rates.col(t).data());
                }
                catch (const RankZeroError &)
                {
                    batch.rates.col(t).setZero();
                    batch.failed[t] = 1;
                }
            }
        }
        catch (...)
        {
            errors[worker] = std::current_exception();
        }
    };

    if (n_threads <= 1)
    {
        work(0);
    }
    else
    {
        std::vector<std::jthread> pool;
        pool.reserve(n_threads);
        for (unsigned w = 0; w < n_threads; ++w)
            pool.emplace_back(work, w);
    }
    for (const auto &e : errors)
    {
        if (e)
            std::rethrow_exception(e);
    }
    return batch;
}

void check_candidate(const Candidate &c, const Scenario &scenario)
{
    if (c.bits < 1)
        throw ValidationError("candidate.bits", "must be >= 1");
    if (c.arch == Architecture::HC)
    {
        if (!c.n_rf || *c.n_rf < 1 || *c.n_rf > scenario.channel.n_rx)
            throw ValidationError("candidate.n_rf", "HC needs n_rf in [1, n_rx]");
    }
    else if (c.n_rf)
    {
        throw ValidationError("candidate.n_rf", "only HC takes n_rf");
    }
}

DesignPoint summarize(const Candidate &c, const Scenario &scenario, const ComponentPowerSet &comps,
                      const TrialBatch &batch, Eigen::Index row)
{
    const int n = scenario.n_trials;
    double sum = 0.0;
    for (int t = 0; t < n; ++t)
        sum += batch.rates(row, t);
    const double mean = sum / n;
    double ss = 0.0;
    for (int t = 0; t < n; ++t)
    {
        const double d = batch.rates(row, t) - mean;
        ss += d * d;
    }

    DesignPoint p;
    p.arch = c.arch;
    p.bits = c.bits;
    p.n_rf = c.n_rf;
    p.rf_chains = c.arch == Architecture::AC   ? 1
                  : c.arch == Architecture::DC ? scenario.channel.n_rx
                                               : *c.n_rf;
    p.mean_rate_bps = mean;
    p.se_bpshz = mean / scenario.bandwidth_hz;
    p.total_power_w = receiver_power(c.arch, scenario.channel.n_rx, c.n_rf.value_or(1), comps, c.bits,
                                     scenario.bandwidth_hz)
                          .total;
    p.ee_bpj = mean / p.total_power_w;
    p.trial_count = n;
    p.rate_std_err_bps = n > 1 ? std::sqrt(ss / (n - 1)) / std::sqrt(static_cast<double>(n)) : 0.0;
    p.failed_trials = static_cast<int>(std::count(batch.failed.begin(), batch.failed.end(), 1));
    return p;
}

} // namespace

Eigen::MatrixXd trial_rates(const Scenario &scenario, std::span<const Candidate> candidates,
                            const SweepOptions &opts)
{
    scenario.validate();
    for (const auto &c : candidates)
        check_candidate(c, scenario);
    return run_trials(scenario, candidates, opts).rates;
}

DesignPoint evaluate_design(const Candidate &candidate, const Scenario &scenario,
                            const ComponentPowerSet &comps, const SweepOptions &opts)
{
    scenario.validate();
    comps.validate();
    check_candidate(candidate, scenario);
    const Candidate one[] = {candidate};
    const TrialBatch batch = run_trials(scenario, one, opts);
    return summarize(candidate, scenario, comps, batch, 0);
}

SweepResult sweep(const Scenario &scenario, const ComponentPowerSet &comps, const SweepOptions &opts)
{
    scenario.validate();
    comps.validate();
    const std::vector<Candidate> grid = candidate_grid(scenario);
    const TrialBatch batch = run_trials(scenario, grid, opts);

    SweepResult out;
    out.scenario = scenario;
    out.points.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        out.points.push_back(summarize(grid[i], scenario, comps, batch, static_cast<Eigen::Index>(i)));
    out.optimal_set = optimal_set(std::span<const DesignPoint>(out.points));

    const auto failed = std::count(batch.failed.begin(), batch.failed.end(), 1);
    if (failed > 0)
        out.warnings.push_back(std::to_string(failed) + " of " + std::to_string(scenario.n_trials) +
                               " trials had a rank-zero channel and were counted as zero rate");
    return out;
}

// -- utility scalarization ------------------------------------------------

namespace {

struct Normalized
{
    std::vector<double> ee;
    std::vector<double> se;
};

Normalized normalize(std::span<const ObjectivePoint> cloud)
{
    if (cloud.empty())
        throw std::invalid_argument("empty candidate set");
    double max_ee = 0.0;
    double max_se = 0.0;
    for (const auto &p : cloud)
    {
        if (!std::isfinite(p.ee) || !std::isfinite(p.se) || p.ee < 0.0 || p.se < 0.0)
            throw std::invalid_argument("objective values must be finite and >= 0");
        max_ee = std::max(max_ee, p.ee);
        max_se = std::max(max_se, p.se);
    }
    const double ke = max_ee > 0.0 ? 1.0 / max_ee : 1.0;
    const double ks = max_se > 0.0 ? 1.0 / max_se : 1.0;
    Normalized n;
    n.ee.reserve(cloud.size());
    n.se.reserve(cloud.size());
    for (const auto &p : cloud)
    {
        n.ee.push_back(p.ee * ke);
        n.se.push_back(p.se * ks);
    }
    return n;
}

// Strict preference used when two candidates tie on utility.
bool preferred(const ObjectivePoint &a, std::size_t ia, const ObjectivePoint &b, std::size_t ib)
{
    if (a.se != b.se)
        return a.se > b.se;
    if (a.rf_chains != b.rf_chains)
        return a.rf_chains < b.rf_chains;
    if (a.bits != b.bits)
        return a.bits < b.bits;
    return ia < ib;
}

} // namespace

std::vector<ObjectivePoint> objectives(std::span<const DesignPoint> points)
{
    std::vector<ObjectivePoint> out;
    out.reserve(points.size());
    for (const auto &p : points)
        out.push_back({p.ee_bpj, p.se_bpshz, p.rf_chains, p.bits});
    return out;
}

std::vector<std::size_t> utility_select(std::span<const ObjectivePoint> cloud, double alpha)
{
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("alpha must lie in [0, 1]");
    const Normalized n = normalize(cloud);
    std::vector<double> u(cloud.size());
    double best = -1.0;
    for (std::size_t i = 0; i < cloud.size(); ++i)
    {
        u[i] = alpha * n.ee[i] + (1.0 - alpha) * n.se[i];
        best = std::max(best, u[i]);
    }
    const double slack = 1e-12 * std::max(1.0, std::abs(best));
    std::vector<std::size_t> ties;
    for (std::size_t i = 0; i < cloud.size(); ++i)
    {
        if (u[i] >= best - slack)
            ties.push_back(i);
    }
    return ties;
}

std::vector<std::size_t> utility_select(std::span<const DesignPoint> points, double alpha)
{
    const auto cloud = objectives(points);
    return utility_select(std::span<const ObjectivePoint>(cloud), alpha);
}

std::size_t representative(std::span<const ObjectivePoint> cloud, std::span<const std::size_t> ties)
{
    if (ties.empty())
        throw std::invalid_argument("empty tie set");
    std::size_t best = ties.front();
    for (const auto i : ties)
    {
        if (preferred(cloud[i], i, cloud[best], best))
            best = i;
    }
    return best;
}

std::vector<OptimalEntry> optimal_set(std::span<const ObjectivePoint> cloud)
{
    const Normalized n = normalize(cloud);
    const std::size_t count = cloud.size();

    // At alpha = 0 the winner has the largest SE; among equal SE the larger EE
    // keeps winning as alpha grows.
    std::size_t cur = 0;
    for (std::size_t i = 1; i < count; ++i)
    {
        if (n.se[i] > n.se[cur] || (n.se[i] == n.se[cur] && n.ee[i] > n.ee[cur]) ||
            (n.se[i] == n.se[cur] && n.ee[i] == n.ee[cur] && preferred(cloud[i], i, cloud[cur], cur)))
            cur = i;
    }

    std::vector<OptimalEntry> out;
    double alpha = 0.0;
    while (true)
    {
        // Walk the upper envelope of the lines u_i(alpha) = alpha e_i + (1 - alpha) s_i.
        std::optional<std::size_t> next;
        double cross = 2.0;
        for (std::size_t j = 0; j < count; ++j)
        {
            if (!(n.ee[j] > n.ee[cur]))
                continue;
            const double ds = n.se[cur] - n.se[j];
            const double a = std::max(alpha, ds / (ds + (n.ee[j] - n.ee[cur])));
            const bool better =
                !next || a < cross ||
                (a == cross && (n.ee[j] > n.ee[*next] ||
                                (n.ee[j] == n.ee[*next] &&
                                 (n.se[j] > n.se[*next] ||
                                  (n.se[j] == n.se[*next] && preferred(cloud[j], j, cloud[*next], *next))))));
            if (better)
            {
                next = j;
                cross = a;
            }
        }
        if (!next || cross >= 1.0)
        {
            out.push_back({alpha, 1.0, cur});
            break;
        }
        if (cross > alpha)
            out.push_back({alpha, cross, cur});
        alpha = cross;
        cur = *next;
    }
    return out;
}

std::vector<OptimalEntry> optimal_set(std::span<const DesignPoint> points)
{
    const auto cloud = objectives(points);
    return optimal_set(std::span<const ObjectivePoint>(cloud));
}

std::size_t winner_at(std::span<const OptimalEntry> optimal, double alpha)
{
    if (optimal.empty())
        throw std::invalid_argument("empty optimal set");
    for (const auto &e : optimal)
    {
        if (alpha >= e.alpha_lo && alpha <= e.alpha_hi)
            return e.point_index;
    }
    throw std::invalid_argument("alpha must lie in [0, 1]");
}

} // namespace mmwrx
