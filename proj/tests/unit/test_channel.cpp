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

#include <cmath>
#include <numbers>

#include "mmwrx/channel.hpp"
#include "mmwrx/rng.hpp"

using namespace mmwrx;

TEST_CASE("array_response entries")
{
    CHECK(array_response(1.234, 1).vector(0) == cplx(1.0, 0.0));

    const auto flat = array_response(0.0, 4);
    for (int k = 0; k < 4; ++k)
        CHECK(flat.vector(k) == cplx(1.0, 0.0));

    const auto v = array_response(std::numbers::pi / 2, 2).vector;
    CHECK(std::abs(v(1) - std::polar(1.0, 0.5)) < 1e-15);

    const auto hw = array_response(0.3, 5, ArrayPhase::half_wavelength).vector;
    for (int k = 0; k < 5; ++k)
    {
        CHECK(std::abs(std::abs(hw(k)) - 1.0) < 1e-12);
        CHECK(std::abs(hw(k) - std::polar(1.0, std::numbers::pi * k * std::sin(0.3))) < 1e-12);
    }
    CHECK_THROWS_AS(array_response(0.0, 0), std::invalid_argument);
}

TEST_CASE("pathloss")
{
    CHECK(pathloss_db(100.0, true, 0.0) == doctest::Approx(101.5).epsilon(1e-12));
    CHECK(pathloss_db(1.0, false, 0.0) == doctest::Approx(72.0).epsilon(1e-12));
    CHECK(pathloss_db(100.0, false, 0.0) == doctest::Approx(130.4).epsilon(1e-12));
    CHECK(pathloss_db(100.0, true, 3.0) == doctest::Approx(104.5).epsilon(1e-12));

    // shadowing spread of the random overload
    Rng rng(5);
    double s = 0.0, s2 = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i)
    {
        const double x = pathloss_db(1.0, false, rng) - 72.0;
        s += x;
        s2 += x * x;
    }
    const double sd = std::sqrt(s2 / n - (s / n) * (s / n));
    CHECK(sd == doctest::Approx(kNlosShadowingStdDb).epsilon(0.03));
}

TEST_CASE("channel params validation names the field")
{
    ChannelParams p;
    p.n_tx = 0;
    try
    {
        p.validate();
        FAIL("expected ValidationError");
    }
    catch (const ValidationError &e)
    {
        CHECK(e.field() == "channel.n_tx");
    }
    p = {};
    p.cluster_rate = 0.0;
    CHECK_THROWS_AS(p.validate(), ValidationError);
    p = {};
    p.paths_per_cluster = 0;
    CHECK_THROWS_AS(p.validate(), ValidationError);
}

TEST_CASE("degenerate single-path channel")
{
    ChannelParams p;
    p.n_tx = 1;
    p.n_rx = 1;
    Cluster c;
    c.path_gains = {cplx(1.0, 0.0)};
    c.aoa_offsets = {0.0};
    c.aod_offsets = {0.0};
    const std::vector<Cluster> cl{c};
    const CMatrix h = assemble_channel(p, cl, 0.0);
    REQUIRE(h.size() == 1);
    CHECK(std::abs(h(0, 0) - cplx(1.0, 0.0)) < 1e-15);
}

TEST_CASE("sample_channel shape, determinism and reconstruction")
{
    ChannelParams p;
    p.n_tx = 8;
    p.n_rx = 12;
    const auto a = sample_channel(p, 99);
    const auto b = sample_channel(p, 99);
    REQUIRE(a.h.rows() == 12);
    REQUIRE(a.h.cols() == 8);
    CHECK(a.h.allFinite());
    CHECK((a.h.array() == b.h.array()).all());
    CHECK_FALSE((a.h.array() == sample_channel(p, 100).h.array()).all());
    CHECK(!a.clusters.empty());

    // independent reconstruction of the clustered sum from the stored draws
    CMatrix ref = CMatrix::Zero(12, 8);
    std::size_t paths = 0;
    for (const auto &c : a.clusters)
    {
        for (std::size_t l = 0; l < c.path_gains.size(); ++l, ++paths)
        {
            const double phi = c.aoa_central + c.aoa_offsets[l];
            const double theta = c.aod_central + c.aod_offsets[l];
            for (int r = 0; r < 12; ++r)
                for (int t = 0; t < 8; ++t)
                    ref(r, t) += c.path_gains[l] *
                                 std::polar(1.0, std::numbers::pi * (r * std::sin(phi) - t * std::sin(theta)));
        }
    }
    ref /= std::sqrt(static_cast<double>(paths));
    CHECK((a.h - ref).norm() / ref.norm() < 1e-9);
}

TEST_CASE("cluster geometry")
{
    ChannelParams p;
    p.paths_per_cluster = 7;
    double offset_sq = 0.0;
    std::size_t n = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed)
    {
        for (const auto &c : sample_channel(p, seed).clusters)
        {
            CHECK(c.path_gains.size() == 7);
            CHECK(c.aoa_central >= 0.0);
            CHECK(c.aoa_central <= 2 * std::numbers::pi);
            for (double d : c.aoa_offsets)
            {
                offset_sq += d * d;
                ++n;
            }
        }
    }
    const double spread = std::sqrt(offset_sq / n);
    CHECK(spread == doctest::Approx(10.0 * std::numbers::pi / 180.0).epsilon(0.05));
}

TEST_CASE("normalized channel has unit average gain")
{
    ChannelParams p; // 16 x 64
    double sum = 0.0;
    const int seeds = 10000;
    for (int s = 0; s < seeds; ++s)
        sum += sample_channel(p, static_cast<std::uint64_t>(s)).h.squaredNorm() / (p.n_tx * p.n_rx);
    const double mean = sum / seeds;
    CHECK(mean >= 0.9);
    CHECK(mean <= 1.1);
}

TEST_CASE("physical mode applies the pathloss")
{
    ChannelParams p;
    p.n_tx = 4;
    p.n_rx = 4;
    p.mode = ChannelMode::physical;
    const auto r = sample_channel(p, 3);
    CHECK(r.pathloss_db > 40.0);
    ChannelParams q = p;
    q.mode = ChannelMode::normalized;
    const auto s = assemble_channel(q, r.clusters, r.pathloss_db);
    CHECK((s - r.h).norm() <= 1e-12 * r.h.norm());
}

TEST_CASE("rng poisson mean")
{
    Rng rng(11);
    double s = 0.0;
    for (int i = 0; i < 50000; ++i)
        s += rng.poisson(1.9);
    CHECK(s / 50000 == doctest::Approx(1.9).epsilon(0.02));
    CHECK_THROWS(rng.poisson(0.0));
}
