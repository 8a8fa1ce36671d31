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

"""mmWave receiver architecture trade-off simulator."""

import json as _json

from ._mmwrx import (
    SCHEMA_VERSION,
    ConfigError,
    RankZeroError,
    design_hc_rf,
    eta_closed_form,
    eta_for_bits,
    optimal_set,
    p_adc,
    rate_ac,
    rate_dc,
    rate_hc,
    utility_select,
    waterfill,
)
from . import _mmwrx

__version__ = "0.1.0"


def _text(value):
    return value if isinstance(value, str) else _json.dumps(value)


def presets():
    """Built-in preset catalog as a dict."""
    return _json.loads(_mmwrx.presets())


def receiver_power(arch, n_rx, n_rf, components, bits, bandwidth_hz):
    """(total_w, per_component) for a preset name or a dict of component powers."""
    return _mmwrx.receiver_power(arch, n_rx, n_rf, _json.dumps(components), bits, bandwidth_hz)


def sample_channel(params=None, seed=42):
    """One channel realization as an n_rx x n_tx complex array."""
    return _mmwrx.sample_channel(_json.dumps(params or {}), seed)


def sweep(config, threads=0):
    """Runs a sweep. Returns the chart document (dict) for JSON output, text otherwise."""
    text = _mmwrx.sweep(_text(config), threads)
    cfg = config if isinstance(config, dict) else _json.loads(config)
    if cfg.get("output", "json") == "json":
        return _json.loads(text)
    return text
