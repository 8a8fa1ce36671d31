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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "mmwrx/presets.hpp"
#include "mmwrx/quantization.hpp"
#include "mmwrx/tradeoff.hpp"

using namespace mmwrx;

namespace {

std::vector<ObjectivePoint> cloud(std::initializer_list<std::pair<double, double>> ee_se)
{
    std::vector<ObjectivePoint> c;
    for (auto [ee, se] : ee_se)
        c.push_back({ee, se, 1, 1});
    return c;
}

// Reference maximizers on an alpha grid, written independently of the
// library's scalarization.
std::set<std::size_t> grid_union(const std::vector<ObjectivePoint> &c, int steps)
{
    double max_ee = 0.0, max_se = 0.0;
    for (const auto &p : c)
    {
        max_ee = std::max(max_ee, p.ee);
        max_se = std::max(max_se, p.se);
    }
    std::set<std::size_t> out;
    for (int k = 0; k <= steps; ++k)
    {
        const double a = static_cast<double>(k) / steps;
        std::vector<double> u(c.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            u[i] = a * c[i].ee / max_ee + (1.0 - a) * c[i].se / max_se;
        const double best = *std::max_element(u.begin(), u.end());
        for (std::size_t i = 0; i < c.size(); ++i)
            if (u[i] >= best - 1e-12 * std::abs(best))
                out.insert(i);
    }
    return out;
}

std::set<std::size_t> indices(const std::vector<OptimalEntry> &entries)
{
    std::set<std::size_t> s;
    for (const auto &e : entries)
        s.insert(e.point_index);
    return s;
}

Scenario small_scenario()
{
    Scenario s = PresetCatalog::builtin().scenario("UL-high");
    s.n_trials = 6;
    s.bit_range = {1, 4, 8};
    s.nrf_set = {2, 4};
    return s;
}

} // namespace

TEST_CASE("candidate grid cardinality")
{
    Scenario s;
    CHECK(candidate_grid(s).size() == 56);
    CHECK(s.grid_size() == 56);

    s.architectures = {Architecture::AC};
    CHECK(candidate_grid(s).size() == 8);

    const Scenario dl = PresetCatalog::builtin().scenario("DL-high");
    CHECK(*std::max_element(dl.nrf_set.begin(), dl.nrf_set.end()) == 10);
    CHECK(candidate_grid(dl).size() == 8 + 8 + 32);

    const auto g = candidate_grid(Scenario{});
    CHECK(g.front().arch == Architecture::AC);
    CHECK(g[8].arch == Architecture::DC);
    CHECK(g[16].arch == Architecture::HC);
    CHECK(*g[16].n_rf == 2);
}

TEST_CASE("scenario validation")
{
    Scenario s;
    s.nrf_set = {2, 80};
    try
    {
        s.validate();
        FAIL("expected ValidationError");
    }
    catch (const ValidationError &e)
    {
        CHECK(e.field().rfind("scenario.nrf_set", 0) == 0);
    }
    s = {};
    s.n_trials = 0;
    CHECK_THROWS_AS(s.validate(), ValidationError);
    s = {};
    s.bit_range = {3, 3};
    CHECK_THROWS_AS(s.validate(), ValidationError);
    s = {};
    s.architectures = {};
    CHECK_THROWS_AS(s.validate(), ValidationError);

    Scenario dl = PresetCatalog::builtin().scenario("DL-high");
    dl.nrf_set = {12};
    CHECK_NOTHROW(dl.validate());
}

TEST_CASE("degenerate scalar design")
{
    Scenario s;
    s.channel.n_tx = 1;
    s.channel.n_rx = 1;
    s.nrf_set = {1};
    s.n_trials = 1;
    s.bandwidth_hz = 1.0;
    s.snr_db = 0.0;
    SweepOptions o;
    o.source = [](std::uint64_t) { return CMatrix::Constant(1, 1, cplx(1.0, 0.0)); };
    const auto p = evaluate_design({Architecture::DC, 24, std::nullopt}, s, PresetCatalog::builtin().components("HPADC"), o);
    CHECK(p.mean_rate_bps == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.se_bpshz == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.trial_count == 1);
}

TEST_CASE("design point bookkeeping and determinism")
{
    const Scenario s = small_scenario();
    const auto comps = PresetCatalog::builtin().components("IPADC");
    const Candidate c{Architecture::HC, 4, 4};
    const DesignPoint a = evaluate_design(c, s, comps);
    const DesignPoint b = evaluate_design(c, s, comps);
    CHECK(a.mean_rate_bps == b.mean_rate_bps);
    CHECK(a.rate_std_err_bps == b.rate_std_err_bps);
    CHECK(a.ee_bpj == doctest::Approx(a.mean_rate_bps / a.total_power_w).epsilon(1e-12));
    CHECK(a.se_bpshz == doctest::Approx(a.mean_rate_bps / s.bandwidth_hz).epsilon(1e-12));
    CHECK(a.rf_chains == 4);
    CHECK(a.total_power_w == doctest::Approx(p_total_hc(64, 4, comps, 4, 1e9).total).epsilon(1e-12));

    CHECK_THROWS_AS(evaluate_design({Architecture::HC, 4, 65}, s, comps), ValidationError);
    CHECK_THROWS_AS(evaluate_design({Architecture::DC, 4, 2}, s, comps), ValidationError);
}

TEST_CASE("sweep agrees with single evaluations and is thread-count invariant")
{
    const Scenario s = small_scenario();
    const auto comps = PresetCatalog::builtin().components("HPADC");
    SweepOptions one, four;
    one.threads = 1;
    four.threads = 4;
    const SweepResult r1 = sweep(s, comps, one);
    const SweepResult r4 = sweep(s, comps, four);
    REQUIRE(r1.points.size() == s.grid_size());
    for (std::size_t i = 0; i < r1.points.size(); ++i)
    {
        CHECK(r1.points[i].mean_rate_bps == r4.points[i].mean_rate_bps);
        CHECK(r1.points[i].rate_std_err_bps == r4.points[i].rate_std_err_bps);
    }
    const auto grid = candidate_grid(s);
    const DesignPoint single = evaluate_design(grid[5], s, comps);
    CHECK(single.mean_rate_bps == r1.points[5].mean_rate_bps);

    // optimal set tiles [0, 1] and points into the cloud
    REQUIRE(!r1.optimal_set.empty());
    CHECK(r1.optimal_set.front().alpha_lo == 0.0);
    CHECK(r1.optimal_set.back().alpha_hi == 1.0);
    for (std::size_t k = 0; k < r1.optimal_set.size(); ++k)
    {
        CHECK(r1.optimal_set[k].point_index < r1.points.size());
        if (k > 0)
            CHECK(r1.optimal_set[k].alpha_lo == r1.optimal_set[k - 1].alpha_hi);
    }
}

TEST_CASE("rates grow with resolution under common seeds")
{
    const Scenario s = small_scenario();
    std::vector<Candidate> dc;
    for (int b = 1; b <= 8; ++b)
        dc.push_back({Architecture::DC, b, std::nullopt});
    const Eigen::MatrixXd r = trial_rates(s, dc);
    for (Eigen::Index b = 1; b < r.rows(); ++b)
        CHECK((r.row(b).array() >= r.row(b - 1).array()).all());
}

TEST_CASE("standard error shrinks like 1/sqrt(n)")
{
    Scenario s = PresetCatalog::builtin().scenario("DL-low");
    const auto comps = PresetCatalog::builtin().components("HPADC");
    const Candidate c{Architecture::AC, 4, std::nullopt};
    std::vector<double> se;
    for (int n : {25, 100, 400})
    {
        s.n_trials = n;
        se.push_back(evaluate_design(c, s, comps).rate_std_err_bps);
    }
    CHECK(se[0] / se[1] == doctest::Approx(2.0).epsilon(0.25));
    CHECK(se[1] / se[2] == doctest::Approx(2.0).epsilon(0.25));
}

TEST_CASE("utility_select")
{
    const auto c = cloud({{1, 1}, {2, 3}, {3, 2}});
    CHECK(utility_select(c, 0.0) == std::vector<std::size_t>{1});
    CHECK(utility_select(c, 1.0) == std::vector<std::size_t>{2});
    CHECK(grid_union(c, 1000) == std::set<std::size_t>{1, 2});

    // ties are all reported; the representative prefers SE, then fewer chains, then fewer bits
    std::vector<ObjectivePoint> tie{{2.0, 1.0, 4, 3}, {2.0, 1.0, 2, 5}, {2.0, 1.0, 2, 4}};
    const auto t = utility_select(tie, 0.5);
    CHECK(t.size() == 3);
    CHECK(representative(tie, t) == 2);
}

TEST_CASE("optimal_set examples")
{
    const auto two = optimal_set(cloud({{1, 3}, {3, 1}}));
    REQUIRE(two.size() == 2);
    CHECK(two[0].point_index == 0);
    CHECK(two[1].point_index == 1);
    // 3a/3 ... utilities cross where a/3 + (1-a) = a + (1-a)/3
    CHECK(two[0].alpha_hi == doctest::Approx(0.5).epsilon(1e-12));

    const auto dom = optimal_set(cloud({{1, 1}, {2, 2}}));
    REQUIRE(dom.size() == 1);
    CHECK(dom[0].point_index == 1);
    CHECK(dom[0].alpha_lo == 0.0);
    CHECK(dom[0].alpha_hi == 1.0);

    const auto one = optimal_set(cloud({{5, 5}}));
    REQUIRE(one.size() == 1);
    CHECK(winner_at(one, 0.3) == 0);
}

TEST_CASE("optimal_set matches the alpha grid on random clouds")
{
    std::mt19937_64 gen(21);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    for (int trial = 0; trial < 20; ++trial)
    {
        std::vector<ObjectivePoint> c(50);
        for (auto &p : c)
            p = {u(gen), u(gen), 1, 1};
        const auto set = optimal_set(c);
        const auto grid = grid_union(c, 10000);
        // every grid maximizer is in the set
        for (auto i : grid)
            CHECK(indices(set).count(i) == 1);
        // every interval wide enough to hold a grid point is seen by the grid
        for (const auto &e : set)
            if (std::floor(e.alpha_hi * 1e4) >= std::ceil(e.alpha_lo * 1e4))
                CHECK(grid.count(e.point_index) == 1);
        // no selected point is dominated
        for (const auto &e : set)
            for (const auto &q : c)
            {
                const auto &p = c[e.point_index];
                CHECK_FALSE((q.ee >= p.ee && q.se >= p.se && (q.ee > p.ee || q.se > p.se)));
            }
    }
}

TEST_CASE("optimal_set is invariant to per-axis scaling")
{
    std::mt19937_64 gen(22);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    std::vector<ObjectivePoint> c(40);
    for (auto &p : c)
        p = {u(gen), u(gen), 1, 1};
    const auto base = indices(optimal_set(c));
    for (double k : {1e-3, 0.5, 7.0, 1e6})
    {
        auto ce = c, cs = c;
        for (auto &p : ce)
            p.ee *= k;
        for (auto &p : cs)
            p.se *= k;
        CHECK(indices(optimal_set(ce)) == base);
        CHECK(indices(optimal_set(cs)) == base);
    }
}

TEST_CASE("alpha extremes on a real sweep")
{
    const SweepResult r = sweep(small_scenario(), PresetCatalog::builtin().components("HPADC"));
    double max_se = 0.0, max_ee = 0.0;
    for (const auto &p : r.points)
    {
        max_se = std::max(max_se, p.se_bpshz);
        max_ee = std::max(max_ee, p.ee_bpj);
    }
    CHECK(r.points[winner_at(r.optimal_set, 0.0)].se_bpshz == max_se);
    CHECK(r.points[winner_at(r.optimal_set, 1.0)].ee_bpj == max_ee);
}
