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

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mmwrx/presets.hpp"
#include "mmwrx/tradeoff.hpp"

namespace mmwrx {

inline constexpr std::string_view kSchemaVersion = "v1";

/// Malformed input: bad JSON, wrong value types, unknown keys. Values that
/// parse but break an invariant raise ValidationError instead.
class ConfigError : public std::runtime_error
{
public:
    ConfigError(std::string field, const std::string &message)
        : std::runtime_error(field.empty() ? message : field + ": " + message), field_(std::move(field)),
          message_(message)
    {
    }

    const std::string &field() const noexcept { return field_; }
    const std::string &message() const noexcept { return message_; }

private:
    std::string field_;
    std::string message_;
};

enum class OutputFormat { json, csv, svg };

std::string_view to_string(OutputFormat format);
OutputFormat output_format_from_string(std::string_view name); // throws std::invalid_argument

struct ChartOptions
{
    std::vector<double> iso_power_w; // constant-power guide lines
};

/// A fully resolved request: what to simulate and how to report it.
struct RunConfig
{
    Scenario scenario;
    ComponentPowerSet components;
    std::string components_name = "custom";
    OutputFormat output = OutputFormat::json;
    std::string output_path;
    ChartOptions chart;
};

// -- JSON <-> domain ------------------------------------------------------

nlohmann::ordered_json to_json(const ChannelParams &params);
nlohmann::ordered_json to_json(const Scenario &scenario);
nlohmann::ordered_json to_json(const ComponentPowerSet &comps);

/// Applies the keys present in `j` on top of `base`. Unknown keys and
/// mistyped values raise ConfigError naming the field under `path`.
ChannelParams channel_from_json(const nlohmann::json &j, ChannelParams base, const std::string &path);
Scenario scenario_from_json(const nlohmann::json &j, Scenario base, const std::string &path);
ComponentPowerSet components_from_json(const nlohmann::json &j, ComponentPowerSet base, const std::string &path);

/// Resolves a request/config document:
///   {"scenario": "UL-high" | {"preset": "UL-high", ...overrides} | {...},
///    "components": "HPADC" | {"preset": "HPADC", ...overrides} | {...},
///    "output": "json" | "csv" | "svg", "output_path": "...",
///    "chart": {"iso_power_w": [...]}}
/// and validates the result.
RunConfig run_config_from_json(const nlohmann::json &doc, const PresetCatalog &catalog);

// -- output documents -----------------------------------------------------

/// Versioned chart document (schema v1) with stable key order.
nlohmann::ordered_json sweep_document(const SweepResult &result, const RunConfig &config);

/// Canonical serialization shared by the CLI and the HTTP service.
std::string dump_document(const nlohmann::ordered_json &doc);

/// One row per point with a header row. Numbers use 17 significant digits.
std::string export_csv(const SweepResult &result);

/// Reads the points back from export_csv output.
std::vector<DesignPoint> parse_points_csv(std::string_view csv);

/// Renders the requested format. SVG output comes from export_svg.
std::string export_document(const SweepResult &result, const RunConfig &config);

} // namespace mmwrx
