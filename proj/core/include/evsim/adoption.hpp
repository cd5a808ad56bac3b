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
#include "evsim/population.hpp"
#include "evsim/rng.hpp"
#include "evsim/tariff.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace evsim
{

inline constexpr double kDaysPerYear = 365.25;
inline constexpr double kAmortizationYears = 5.0;

struct AdoptionParams
{
    double ad_rate = 0.011;           ///< ad exposures per agent per year
    double contact_rate = 100.0;      ///< WOM contacts per adopter per year
    double adoption_fraction = 0.015; ///< default cogency
    double awareness_threshold = 50.0;
    double incentive_beta = 0.0;
    double subsidy_fraction = 0.25;
    double subsidy_cap = 5000.0;
    double ev_price = 0.0;
    double conventional_price = 0.0;
    std::array<double, kStaffLevels> salary_by_level{18000, 22000, 27000, 33000, 40000, 48000, 60000};

    friend bool operator==(const AdoptionParams&, const AdoptionParams&) = default;
};

void validate(const AdoptionParams& params);

enum class TriggerKind : std::uint8_t
{
    Ad,
    WomMessage,
};

/// An ad exposure, or a "buy an electric car" message from another owner.
struct PurchaseTrigger
{
    TriggerKind kind = TriggerKind::Ad;
    std::optional<int> source;
    double source_cogency = 0.0;
    int day = 0;

    static PurchaseTrigger ad(int day) { return {TriggerKind::Ad, std::nullopt, 0.0, day}; }
    static PurchaseTrigger wom(const CarOwner& source, int day)
    {
        return {TriggerKind::WomMessage, source.id, source.cogency, day};
    }
};

/// Days until the next ad exposure; nullopt when ad_rate is zero.
std::optional<double> next_ad_exposure(const AdoptionParams& params, Rng& rng);

/// Recipients of one adopter's messages over one day: Poisson(contact_rate/365.25)
/// draws, each uniform over the other agents.
std::vector<int> wom_contacts(int adopter_id, std::size_t population_size, const AdoptionParams& params, Rng& rng);

/// Factor applied to the stereotype's buy probability, in [0, 2].
double incentive_multiplier(const CarOwner& owner, const TariffPolicy& tariff, const AdoptionParams& params);

/// Draws exactly two uniforms regardless of outcome. On adoption the owner's
/// vehicle becomes electric and adopted_at is set to the trigger day.
/// Throws ProtocolError if the owner is already electric.
bool decide_purchase(CarOwner& owner, const PurchaseTrigger& trigger, const StereotypeSpec& stereotype,
                     const TariffPolicy& tariff, const AdoptionParams& params, Rng& rng);

} // namespace evsim
