# SPDX-License-Identifier: Apache-2.0
#
# mmwrx - mmWave receiver architecture trade-off simulator
# Copyright (C) 2026 The mmwrx authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ------------------------------------------------------------------------

import json
import math

import numpy as np
import pytest

import mmwrx


def test_eta_table():
    assert mmwrx.eta_for_bits(1) == pytest.approx(0.3634)
    assert mmwrx.eta_for_bits(5) == pytest.approx(0.002499)
    assert mmwrx.eta_for_bits(8) == pytest.approx(math.pi * math.sqrt(3) / 2 * 2.0 ** -16)
    with pytest.raises(ValueError):
        mmwrx.eta_for_bits(0)


def test_receiver_power_presets():
    total, parts = mmwrx.receiver_power("DC", 16, 0, "HPADC", 5, 1e9)
    assert total == pytest.approx(1.782656, abs=1e-12)
    assert set(parts) >= {"lna", "rf_chain", "adc"}
    total, _ = mmwrx.receiver_power("AC", 64, 0, "HPADC", 4, 1e9)
    assert total == pytest.approx(2.700108, abs=1e-12)
    total, _ = mmwrx.receiver_power("HC", 64, 8, "HPADC", 6, 1e9)
    assert total == pytest.approx(5.756256, abs=1e-12)


def test_waterfill_budget():
    p = mmwrx.waterfill([4.0, 1.0, 0.01], 2.0, 1.0)
    assert sum(p) == pytest.approx(2.0)
    assert p[2] == 0.0
    with pytest.raises(ArithmeticError):
        mmwrx.waterfill([0.0, 0.0], 1.0, 1.0)


def test_channel_and_rate_ordering():
    h = mmwrx.sample_channel({"n_tx": 16, "n_rx": 64}, seed=7)
    assert h.shape == (64, 16)
    assert h.dtype == np.complex128
    eta = mmwrx.eta_for_bits(4)
    ac = mmwrx.rate_ac(h, 1.0, eta=eta)["rate_bps"]
    hc = mmwrx.rate_hc(h, 8, 1.0, eta=eta)["rate_bps"]
    dc = mmwrx.rate_dc(h, 1.0, eta=eta)["rate_bps"]
    assert ac <= hc * (1 + 1e-9)
    assert hc <= dc * (1 + 1e-9)


def test_optimal_set_two_points():
    entries = mmwrx.optimal_set([1.0, 3.0], [3.0, 1.0])
    assert [e[2] for e in entries] == [0, 1]
    assert entries[0][0] == 0.0 and entries[-1][1] == 1.0
    assert mmwrx.utility_select([1.0, 2.0], [1.0, 2.0], 0.5) == [1]


def test_unknown_channel_key_is_rejected():
    with pytest.raises(ValueError):
        mmwrx.sample_channel({"n_txx": 4})


def test_presets_and_small_sweep():
    catalog = mmwrx.presets()
    assert {"HPADC", "IPADC", "LPADC"} <= set(catalog["components"])
    doc = mmwrx.sweep({"scenario": {"preset": "UL-high", "n_trials": 4}, "components": "HPADC"})
    assert doc["schema"] == mmwrx.SCHEMA_VERSION
    assert len(doc["points"]) == 56
    assert any(p["optimal"] for p in doc["points"])
    again = mmwrx.sweep(json.dumps({"scenario": {"preset": "UL-high", "n_trials": 4}, "components": "HPADC"}))
    assert again == doc


def test_sweep_rejects_oversized_hybrid():
    with pytest.raises(ValueError):
        mmwrx.sweep({"scenario": {"preset": "DL-high", "nrf_set": [32]}, "components": "HPADC"})
