/*
* Copyright (C) 2026 evsim contributors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#pragma once

#include "evsim/adoption.hpp"
#include "evsim/mobility.hpp"
#include "evsim/population.hpp"
#include "evsim/tariff.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace evsim
{

/// Everything needed to reproduce one batch of runs.
struct ScenarioConfig
{
    PopulationSpec population = default_population_spec();
    CommuteCalendar calendar;
    std::size_t lot_capacity = 600;
    TariffPolicy tariff;
    EnergyModel energy;
    AdoptionParams adoption;
    int horizon_days = 3653;
    std::size_t replications = 100;
    std::uint64_t base_seed = 1;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Runs every owning module's validation plus cross-field checks.
void validate(const ScenarioConfig& config);

/// Parses the line-oriented `section.key = value` format. `#` starts a
/// comment; blank lines are ignored; each key may appear once. Any key not
/// given keeps its default. If any `population.stereotype.<id>` key is
/// present, those entries replace the default stereotype list.
/// Throws ConfigError with line number and key.
ScenarioConfig parse_scenario(std::string_view text);

ScenarioConfig load_scenario_file(const std::string& path);

/// Canonical text: every key, sorted, one per line.
std::string serialize_scenario(const ScenarioConfig& config);

/// 16 hex digits of FNV-1a 64 over the canonical text.
std::string scenario_digest(const ScenarioConfig& config);

/// Sets one key as if it appeared in a scenario file. Validation of the
/// whole config is left to the caller.
void apply_setting(ScenarioConfig& config, std::string_view key, std::string_view value);

/// True for keys whose value is a single token (sweepable).
bool is_scalar_key(std::string_view key);

/// All recognised keys except the per-id stereotype family.
const std::vector<std::string>& scenario_keys();

} // namespace evsim
