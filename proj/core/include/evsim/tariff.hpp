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

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <variant>

namespace evsim
{

/// Annual permit charges, rows = emissions category A..E, columns = staff level 1..7.
using ChargeTable = std::array<std::array<double, kStaffLevels>, kEmissionsCategories>;

/// The campus permit table, verbatim.
ChargeTable campus_charge_table();

namespace ev_strategy
{
/// EVs pay the category-A rate (0 g/km falls in the lowest band).
struct SameAsCategoryA
{
    friend bool operator==(const SameAsCategoryA&, const SameAsCategoryA&) = default;
};
/// EVs pay m times the category-A rate, m in [0, 1].
struct Multiplier
{
    double m = 1.0;
    friend bool operator==(const Multiplier&, const Multiplier&) = default;
};
/// EVs pay a per-level flat charge.
struct FlatTable
{
    std::array<double, kStaffLevels> charges{};
    friend bool operator==(const FlatTable&, const FlatTable&) = default;
};
} // namespace ev_strategy

using EvStrategy = std::variant<ev_strategy::SameAsCategoryA, ev_strategy::Multiplier, ev_strategy::FlatTable>;

/// Parses `same_as_a`, `multiplier:<m>` or `flat:<7 comma-separated values>`.
/// Throws ConfigError keyed on tariff.ev_strategy.
EvStrategy parse_ev_strategy(std::string_view text);
std::string format_ev_strategy(const EvStrategy& strategy);

struct TariffPolicy
{
    ChargeTable table = campus_charge_table();
    EvStrategy ev_strategy = ev_strategy::SameAsCategoryA{};
    int accrual_workdays_per_year = 220;

    friend bool operator==(const TariffPolicy&, const TariffPolicy&) = default;
};

/// Table must be strictly increasing along both axes.
void validate(const TariffPolicy& policy);

/// Representative g CO2/km per band and the daily round trip.
struct EnergyModel
{
    std::array<double, kEmissionsCategories> intensity_by_category{110.0, 135.0, 158.0, 183.0, 220.0};
    double round_trip_km = 20.0;
    double ev_intensity = 0.0;

    friend bool operator==(const EnergyModel&, const EnergyModel&) = default;
};

void validate(const EnergyModel& energy);

/// Exact table entry. Throws DomainError on an out-of-range category or level.
double lookup_charge(EmissionsCategory category, int level, const TariffPolicy& policy);

/// Annual EV permit charge at `level` under the active strategy.
double ev_charge(int level, const TariffPolicy& policy);

double annual_charge(const Vehicle& vehicle, int level, const TariffPolicy& policy);

double intensity(const Vehicle& vehicle, const EnergyModel& energy);

/// One commuter's contribution to a day.
struct Commuter
{
    Vehicle vehicle = Vehicle::conventional(EmissionsCategory::A);
    int staff_level = 1;
    bool parked = false;
};

struct DailyAccrual
{
    double revenue = 0.0;      ///< currency
    double energy_proxy = 0.0; ///< g CO2

    friend bool operator==(const DailyAccrual&, const DailyAccrual&) = default;
};

/// Revenue from parked commuters at annual/accrual_workdays_per_year each;
/// energy from every commuter, parked or rejected.
DailyAccrual accrue_day(std::span<const Commuter> commuters, const TariffPolicy& policy, const EnergyModel& energy);

} // namespace evsim
