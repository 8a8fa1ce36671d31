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

#include "mmwrx/power.hpp"
#include "mmwrx/presets.hpp"

using namespace mmwrx;

namespace {

ComponentPowerSet hpadc()
{
    return PresetCatalog::builtin().components("HPADC");
}

ComponentPowerSet fom_only(double fom)
{
    ComponentPowerSet c;
    c.adc_fom = fom;
    return c;
}

} // namespace

TEST_CASE("adc power")
{
    CHECK(p_adc(494e-15, 1e9, 1) == doctest::Approx(0.988e-3).epsilon(1e-12));
    CHECK(p_adc(494e-15, 1e9, 8) == doctest::Approx(126.464e-3).epsilon(1e-12));
    CHECK(p_adc(5e-15, 1e9, 8) == doctest::Approx(1.28e-3).epsilon(1e-12));
}

TEST_CASE("rf chain sum")
{
    CHECK(hpadc().p_rf() == doctest::Approx(40.8e-3).epsilon(1e-12));
}

TEST_CASE("digital receiver")
{
    CHECK(p_total_dc(16, hpadc(), 5, 1e9).total == doctest::Approx(1.782656).epsilon(1e-12));
    CHECK(p_total_dc(1, fom_only(3e-15), 1, 1.0).total == doctest::Approx(2 * 3e-15 * 2).epsilon(1e-12));
}

TEST_CASE("analog receiver")
{
    CHECK(p_total_ac(64, hpadc(), 4, 1e9).total == doctest::Approx(2.700108).epsilon(1e-12));
    CHECK(p_total_ac(1, fom_only(3e-15), 3, 1.0).total == doctest::Approx(2 * 3e-15 * 8).epsilon(1e-12));

    ComponentPowerSet c = hpadc();
    c.p_ps = 0.0;
    const double expect = 64 * 0.039 + 0.0408 + 0.0195 + 2 * p_adc(c.adc_fom, 1e9, 4);
    CHECK(p_total_ac(64, c, 4, 1e9).total == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("hybrid receiver")
{
    CHECK(p_total_hc(64, 8, hpadc(), 6, 1e9).total == doctest::Approx(5.756256).epsilon(1e-12));

    ComponentPowerSet c = hpadc();
    c.p_sp = 0.0;
    CHECK(p_total_hc(64, 1, c, 4, 1e9).total == doctest::Approx(p_total_ac(64, c, 4, 1e9).total).epsilon(1e-12));

    const auto h = hpadc();
    for (int n = 1; n < 12; ++n)
    {
        const double step = p_total_hc(64, n + 1, h, 5, 1e9).total - p_total_hc(64, n, h, 5, 1e9).total;
        const double expect = 64 * h.p_ps + h.p_rf() + h.p_c + 2 * p_adc(h.adc_fom, 1e9, 5);
        CHECK(step == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("breakdown adds up and dispatch matches")
{
    for (auto arch : {Architecture::AC, Architecture::HC, Architecture::DC})
    {
        const auto b = receiver_power(arch, 64, 4, hpadc(), 3, 1e9);
        double sum = 0.0;
        for (const auto &[k, v] : b.per_component)
            sum += v;
        CHECK(sum == doctest::Approx(b.total).epsilon(1e-12));
    }
    CHECK(receiver_power(Architecture::HC, 64, 4, hpadc(), 3, 1e9).total == p_total_hc(64, 4, hpadc(), 3, 1e9).total);
}

TEST_CASE("component validation")
{
    ComponentPowerSet c = hpadc();
    c.p_lna = -1.0;
    try
    {
        c.validate();
        FAIL("expected ValidationError");
    }
    catch (const ValidationError &e)
    {
        CHECK(e.field() == "components.p_lna");
    }
    c = hpadc();
    c.adc_fom = 0.0;
    CHECK_THROWS_AS(c.validate(), ValidationError);
}
