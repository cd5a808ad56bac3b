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
#include "evsim/errors.hpp"
#include "evsim/tariff.hpp"

#include <gtest/gtest.h>

using namespace evsim;

namespace
{
// Campus permit table, typed in independently of the library default.
constexpr double kCampus[5][7] = {
    {44, 57, 75, 105, 132, 165, 210},
    {58, 76, 100, 140, 176, 220, 280},
    {73, 95, 125, 175, 220, 275, 350},
    {87, 114, 150, 210, 264, 330, 420},
    {102, 133, 175, 245, 308, 385, 490},
};
} // namespace

TEST(Tariff, AllThirtyFiveEntriesVerbatim)
{
    const TariffPolicy policy;
    for (int c = 0; c < 5; ++c) {
        for (int level = 1; level <= 7; ++level) {
            EXPECT_EQ(lookup_charge(static_cast<EmissionsCategory>(c), level, policy), kCampus[c][level - 1])
                << "category " << c << " level " << level;
        }
    }
    EXPECT_EQ(lookup_charge(EmissionsCategory::A, 1, policy), 44);
    EXPECT_EQ(lookup_charge(EmissionsCategory::C, 4, policy), 175);
    EXPECT_EQ(lookup_charge(EmissionsCategory::E, 7, policy), 490);
}

TEST(Tariff, OutOfRangeLookups)
{
    const TariffPolicy policy;
    EXPECT_THROW(lookup_charge(EmissionsCategory::A, 0, policy), DomainError);
    EXPECT_THROW(lookup_charge(EmissionsCategory::A, 8, policy), DomainError);
    EXPECT_THROW(lookup_charge(static_cast<EmissionsCategory>(5), 1, policy), DomainError);
    EXPECT_THROW(ev_charge(9, policy), DomainError);
}

TEST(Tariff, DefaultTableIsMonotone)
{
    validate(TariffPolicy{});
}

TEST(Tariff, MonotonicityViolationsRejected)
{
    TariffPolicy policy;
    policy.table[2][3] = policy.table[1][3];
    EXPECT_THROW(validate(policy), ConfigError);
    policy = TariffPolicy{};
    policy.table[4][6] = policy.table[4][5] - 1;
    try {
        validate(policy);
        FAIL() << "expected ConfigError";
    }
    catch (const ConfigError& e) {
        EXPECT_EQ(e.key(), "tariff.table.E");
    }
}

TEST(Tariff, EvChargeStrategies)
{
    TariffPolicy policy;
    EXPECT_EQ(ev_charge(3, policy), 75);
    policy.ev_strategy = ev_strategy::Multiplier{0.0};
    for (int level = 1; level <= 7; ++level) {
        EXPECT_EQ(ev_charge(level, policy), 0.0);
    }
    policy.ev_strategy = ev_strategy::Multiplier{0.5};
    EXPECT_EQ(ev_charge(7, policy), 105);
    policy.ev_strategy = ev_strategy::FlatTable{{1, 2, 3, 4, 5, 6, 7}};
    EXPECT_EQ(ev_charge(6, policy), 6);
}

TEST(Tariff, StrategyTextRoundTrip)
{
    for (const char* text : {"same_as_a", "multiplier:0.5", "multiplier:0", "flat:1,2.5,3,4,5,6,70"}) {
        const auto s = parse_ev_strategy(text);
        EXPECT_EQ(parse_ev_strategy(format_ev_strategy(s)), s) << text;
    }
    EXPECT_EQ(format_ev_strategy(ev_strategy::Multiplier{0.25}), "multiplier:0.25");
    EXPECT_THROW(parse_ev_strategy("multiplier:1.5"), ConfigError);
    EXPECT_THROW(parse_ev_strategy("flat:1,2,3"), ConfigError);
    EXPECT_THROW(parse_ev_strategy("cheap"), ConfigError);
}

TEST(Tariff, AccrueEmptyDay)
{
    const auto day = accrue_day({}, TariffPolicy{}, EnergyModel{});
    EXPECT_EQ(day.revenue, 0.0);
    EXPECT_EQ(day.energy_proxy, 0.0);
}

TEST(Tariff, AccrueSingleCommuter)
{
    const Commuter c{Vehicle::conventional(EmissionsCategory::B), 2, true};
    const auto day = accrue_day(std::span(&c, 1), TariffPolicy{}, EnergyModel{});
    EXPECT_DOUBLE_EQ(day.revenue, 76.0 / 220.0);
    EXPECT_NEAR(day.revenue, 0.3455, 5e-5);
    EXPECT_DOUBLE_EQ(day.energy_proxy, 2700.0);
}

TEST(Tariff, RejectedCommuterDrivesButDoesNotPay)
{
    const Commuter c{Vehicle::conventional(EmissionsCategory::E), 7, false};
    const auto day = accrue_day(std::span(&c, 1), TariffPolicy{}, EnergyModel{});
    EXPECT_EQ(day.revenue, 0.0);
    EXPECT_DOUBLE_EQ(day.energy_proxy, 220.0 * 20.0);
}

TEST(Tariff, ConversionToEvLowersRevenueAndEnergy)
{
    for (double m : {0.0, 0.3, 0.99}) {
        TariffPolicy policy;
        policy.ev_strategy = ev_strategy::Multiplier{m};
        for (int c = 0; c < 5; ++c) {
            for (int level = 1; level <= 7; ++level) {
                const Commuter before{Vehicle::conventional(static_cast<EmissionsCategory>(c)), level, true};
                const Commuter after{Vehicle::electric(), level, true};
                const auto a = accrue_day(std::span(&before, 1), policy, EnergyModel{});
                const auto b = accrue_day(std::span(&after, 1), policy, EnergyModel{});
                EXPECT_LT(b.revenue, a.revenue);
                EXPECT_LT(b.energy_proxy, a.energy_proxy);
            }
        }
    }
}

TEST(Tariff, EnergyModelValidation)
{
    EnergyModel energy;
    validate(energy);
    energy.round_trip_km = 0;
    EXPECT_THROW(validate(energy), ConfigError);
    energy = EnergyModel{};
    energy.intensity_by_category[1] = -1;
    EXPECT_THROW(validate(energy), ConfigError);
}
