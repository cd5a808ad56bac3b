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
#include "evsim/tariff.hpp"
#include "evsim/errors.hpp"
#include "evsim/format.hpp"

#include <cmath>
#include <string>

namespace evsim
{

ChargeTable campus_charge_table()
{
    return {{
        {44, 57, 75, 105, 132, 165, 210},
        {58, 76, 100, 140, 176, 220, 280},
        {73, 95, 125, 175, 220, 275, 350},
        {87, 114, 150, 210, 264, 330, 420},
        {102, 133, 175, 245, 308, 385, 490},
    }};
}

EvStrategy parse_ev_strategy(std::string_view text)
{
    const std::string key = "tariff.ev_strategy";
    const std::string_view trimmed = trim(text);
    if (trimmed == "same_as_a") {
        return ev_strategy::SameAsCategoryA{};
    }
    constexpr std::string_view multiplier_prefix = "multiplier:";
    constexpr std::string_view flat_prefix = "flat:";
    if (trimmed.starts_with(multiplier_prefix)) {
        const auto m = parse_double(trimmed.substr(multiplier_prefix.size()));
        if (!m) {
            throw ConfigError(key, "multiplier is not a number");
        }
        if (!(*m >= 0.0 && *m <= 1.0)) {
            throw ConfigError(key, "multiplier must lie in [0, 1]");
        }
        return ev_strategy::Multiplier{*m};
    }
    if (trimmed.starts_with(flat_prefix)) {
        const auto values = parse_double_list(trimmed.substr(flat_prefix.size()));
        if (!values || values->size() != kStaffLevels) {
            throw ConfigError(key, "flat table needs 7 comma-separated numbers");
        }
        ev_strategy::FlatTable flat;
        for (std::size_t i = 0; i < flat.charges.size(); ++i) {
            if (!((*values)[i] >= 0.0) || !std::isfinite((*values)[i])) {
                throw ConfigError(key, "flat table entries must be non-negative");
            }
            flat.charges[i] = (*values)[i];
        }
        return flat;
    }
    throw ConfigError(key, "expected same_as_a, multiplier:<m> or flat:<7 values>");
}

std::string format_ev_strategy(const EvStrategy& strategy)
{
    struct Visitor
    {
        std::string operator()(const ev_strategy::SameAsCategoryA&) const { return "same_as_a"; }
        std::string operator()(const ev_strategy::Multiplier& s) const { return "multiplier:" + format_double(s.m); }
        std::string operator()(const ev_strategy::FlatTable& s) const
        {
            return "flat:" + format_double_list(s.charges);
        }
    };
    return std::visit(Visitor{}, strategy);
}

void validate(const TariffPolicy& policy)
{
    for (int c = 0; c < kEmissionsCategories; ++c) {
        const std::string key = std::string("tariff.table.") + to_char(static_cast<EmissionsCategory>(c));
        for (int l = 0; l < kStaffLevels; ++l) {
            const double v = policy.table[c][l];
            if (!std::isfinite(v) || v < 0.0) {
                throw ConfigError(key, "charges must be finite and non-negative");
            }
            if (l > 0 && !(v > policy.table[c][l - 1])) {
                throw ConfigError(key, "charges must strictly increase with staff level (level " +
                                           std::to_string(l + 1) + ")");
            }
            if (c > 0 && !(v > policy.table[c - 1][l])) {
                throw ConfigError(key, "charges must strictly increase from category A to E (level " +
                                           std::to_string(l + 1) + ")");
            }
        }
    }
    if (const auto* m = std::get_if<ev_strategy::Multiplier>(&policy.ev_strategy)) {
        if (!(m->m >= 0.0 && m->m <= 1.0)) {
            throw ConfigError("tariff.ev_strategy", "multiplier must lie in [0, 1]");
        }
    }
    if (const auto* f = std::get_if<ev_strategy::FlatTable>(&policy.ev_strategy)) {
        for (double v : f->charges) {
            if (!(v >= 0.0) || !std::isfinite(v)) {
                throw ConfigError("tariff.ev_strategy", "flat table entries must be non-negative");
            }
        }
    }
    if (policy.accrual_workdays_per_year <= 0) {
        throw ConfigError("tariff.accrual_workdays_per_year", "must be positive");
    }
}

void validate(const EnergyModel& energy)
{
    for (double v : energy.intensity_by_category) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw ConfigError("energy.intensity_by_category", "intensities must be non-negative");
        }
    }
    if (!(energy.ev_intensity >= 0.0) || !std::isfinite(energy.ev_intensity)) {
        throw ConfigError("energy.ev_intensity", "must be non-negative");
    }
    if (!(energy.round_trip_km > 0.0) || !std::isfinite(energy.round_trip_km)) {
        throw ConfigError("energy.round_trip_km", "must be positive");
    }
}

namespace
{
void check_level(int level)
{
    if (level < 1 || level > kStaffLevels) {
        throw DomainError("staff level " + std::to_string(level) + " outside 1..7");
    }
}
} // namespace

double lookup_charge(EmissionsCategory category, int level, const TariffPolicy& policy)
{
    const int c = index_of(category);
    if (c < 0 || c >= kEmissionsCategories) {
        throw DomainError("emissions category index " + std::to_string(c) + " outside A..E");
    }
    check_level(level);
    return policy.table[static_cast<std::size_t>(c)][static_cast<std::size_t>(level - 1)];
}

double ev_charge(int level, const TariffPolicy& policy)
{
    check_level(level);
    const double base = policy.table[0][static_cast<std::size_t>(level - 1)];
    struct Visitor
    {
        double base;
        int level;
        double operator()(const ev_strategy::SameAsCategoryA&) const { return base; }
        double operator()(const ev_strategy::Multiplier& s) const { return s.m * base; }
        double operator()(const ev_strategy::FlatTable& s) const
        {
            return s.charges[static_cast<std::size_t>(level - 1)];
        }
    };
    return std::visit(Visitor{base, level}, policy.ev_strategy);
}

double annual_charge(const Vehicle& vehicle, int level, const TariffPolicy& policy)
{
    return vehicle.is_electric() ? ev_charge(level, policy) : lookup_charge(vehicle.category(), level, policy);
}

double intensity(const Vehicle& vehicle, const EnergyModel& energy)
{
    return vehicle.is_electric() ? energy.ev_intensity
                                 : energy.intensity_by_category[static_cast<std::size_t>(index_of(vehicle.category()))];
}

DailyAccrual accrue_day(std::span<const Commuter> commuters, const TariffPolicy& policy, const EnergyModel& energy)
{
    DailyAccrual out;
    const auto workdays = static_cast<double>(policy.accrual_workdays_per_year);
    for (const auto& c : commuters) {
        if (c.parked) {
            out.revenue += annual_charge(c.vehicle, c.staff_level, policy) / workdays;
        }
        out.energy_proxy += intensity(c.vehicle, energy) * energy.round_trip_km;
    }
    return out;
}

} // namespace evsim
