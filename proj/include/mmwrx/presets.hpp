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

#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mmwrx/power.hpp"
#include "mmwrx/tradeoff.hpp"

namespace mmwrx {

struct ComponentPreset
{
    std::string description;
    ComponentPowerSet components;
};

struct ScenarioPreset
{
    std::string description;
    Scenario scenario;
};

/// Named scenario and component bundles. Immutable once built; lookups of
/// unknown names throw ValidationError("unknown preset ...").
class PresetCatalog
{
public:
    /// Catalog compiled in from data/presets.json.
    static const PresetCatalog &builtin();

    /// Parses a catalog document ({"components": {...}, "scenarios": {...}}).
    static PresetCatalog from_json(const nlohmann::json &doc);

    /// Entries of `other` replace same-named entries here.
    void merge(const PresetCatalog &other);

    const Scenario &scenario(std::string_view name, const std::string &field = "scenario") const;
    const ComponentPowerSet &components(std::string_view name, const std::string &field = "components") const;

    const std::map<std::string, ScenarioPreset, std::less<>> &scenarios() const { return scenarios_; }
    const std::map<std::string, ComponentPreset, std::less<>> &component_sets() const { return components_; }

    nlohmann::ordered_json to_json() const;

private:
    std::map<std::string, ScenarioPreset, std::less<>> scenarios_;
    std::map<std::string, ComponentPreset, std::less<>> components_;
};

} // namespace mmwrx
