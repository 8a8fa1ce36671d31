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

#include "mmwrx/presets.hpp"

#include "mmwrx/serialization.hpp"
#include "presets_data.hpp"

namespace mmwrx {

const PresetCatalog &PresetCatalog::builtin()
{
    static const PresetCatalog catalog = from_json(nlohmann::json::parse(detail::kBuiltinPresetsJson));
    return catalog;
}

PresetCatalog PresetCatalog::from_json(const nlohmann::json &doc)
{
    if (!doc.is_object())
        throw ConfigError("catalog", "expected an object");

    PresetCatalog out;
    if (auto it = doc.find("components"); it != doc.end())
    {
        if (!it->is_object())
            throw ConfigError("catalog.components", "expected an object");
        for (const auto &[name, entry] : it->items())
        {
            const std::string path = "catalog.components." + name;
            if (!entry.is_object())
                throw ConfigError(path, "expected an object");
            nlohmann::json fields = entry;
            ComponentPreset preset;
            preset.description = fields.value("description", "");
            fields.erase("description");
            preset.components = components_from_json(fields, {}, path);
            preset.components.validate(path);
            out.components_[name] = std::move(preset);
        }
    }
    if (auto it = doc.find("scenarios"); it != doc.end())
    {
        if (!it->is_object())
            throw ConfigError("catalog.scenarios", "expected an object");
        for (const auto &[name, entry] : it->items())
        {
            const std::string path = "catalog.scenarios." + name;
            if (!entry.is_object())
                throw ConfigError(path, "expected an object");
            nlohmann::json fields = entry;
            ScenarioPreset preset;
            preset.description = fields.value("description", "");
            fields.erase("description");
            Scenario base;
            base.name = name;
            preset.scenario = scenario_from_json(fields, base, path);
            preset.scenario.validate(path);
            out.scenarios_[name] = std::move(preset);
        }
    }
    return out;
}

void PresetCatalog::merge(const PresetCatalog &other)
{
    for (const auto &[name, p] : other.scenarios_)
        scenarios_[name] = p;
    for (const auto &[name, p] : other.components_)
        components_[name] = p;
}

const Scenario &PresetCatalog::scenario(std::string_view name, const std::string &field) const
{
    auto it = scenarios_.find(name);
    if (it == scenarios_.end())
        throw ValidationError(field, "unknown preset '" + std::string(name) + "'");
    return it->second.scenario;
}

const ComponentPowerSet &PresetCatalog::components(std::string_view name, const std::string &field) const
{
    auto it = components_.find(name);
    if (it == components_.end())
        throw ValidationError(field, "unknown preset '" + std::string(name) + "'");
    return it->second.components;
}

nlohmann::ordered_json PresetCatalog::to_json() const
{
    nlohmann::ordered_json doc;
    doc["schema"] = kSchemaVersion;
    nlohmann::ordered_json comps = nlohmann::ordered_json::object();
    for (const auto &[name, p] : components_)
    {
        nlohmann::ordered_json entry;
        entry["description"] = p.description;
        entry.update(mmwrx::to_json(p.components));
        comps[name] = std::move(entry);
    }
    nlohmann::ordered_json scen = nlohmann::ordered_json::object();
    for (const auto &[name, p] : scenarios_)
    {
        nlohmann::ordered_json entry;
        entry["description"] = p.description;
        entry.update(mmwrx::to_json(p.scenario));
        scen[name] = std::move(entry);
    }
    doc["components"] = std::move(comps);
    doc["scenarios"] = std::move(scen);
    return doc;
}

} // namespace mmwrx
