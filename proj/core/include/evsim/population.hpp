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

#include "evsim/agent.hpp"
#include "evsim/rng.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace evsim
{

/// One agent archetype: population share, energy-awareness sampling range and
/// per-trigger purchase probability.
struct StereotypeSpec
{
    int id = 0;
    double share = 0.0;
    double ea_low = 0.0;
    double ea_high = 0.0;
    double buy_probability = 0.0;

    friend bool operator==(const StereotypeSpec&, const StereotypeSpec&) = default;
};

struct PopulationSpec
{
    std::vector<StereotypeSpec> stereotypes;
    std::size_t n_agents = 0;
    std::array<double, kStaffLevels> staff_level_weights{};
    std::array<double, kEmissionsCategories> fleet_category_weights{};
    /// Per-agent cogency drawn uniform on [lo, hi]; unset means every agent
    /// takes the scenario's adoption fraction.
    std::optional<std::pair<double, double>> cogency_range;

    friend bool operator==(const PopulationSpec&, const PopulationSpec&) = default;
};

/// The four survey stereotypes: 1%/9%/30%/60% with awareness ranges
/// [95,100], [70,94], [30,69], [0,29] and buy probabilities 0.9/0.7/0.4/0.2.
std::vector<StereotypeSpec> survey_stereotypes();

/// Survey stereotypes, 500 agents, uniform staff levels and fleet categories.
PopulationSpec default_population_spec();

/// Throws ConfigError naming the offending field.
void validate(const PopulationSpec& spec);

/// Deterministic largest-remainder apportionment of n over the shares.
/// Ties in the fractional part go to the earlier entry.
std::vector<std::size_t> largest_remainder_quota(std::span<const double> shares, std::size_t n);

/// Builds the agent population. Stereotype counts follow the quota exactly;
/// labels are shuffled over ids, then each agent draws awareness, staff
/// level, fleet category and (if ranged) cogency, in id order.
std::vector<CarOwner> sample_population(const PopulationSpec& spec, double default_cogency, Rng& rng);

/// Expected fraction of agents whose awareness strictly exceeds threshold.
double eligible_fraction(const PopulationSpec& spec, double threshold);

const StereotypeSpec& find_stereotype(const PopulationSpec& spec, int id);

} // namespace evsim
