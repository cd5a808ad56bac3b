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
#include "evsim/adoption.hpp"
#include "evsim/errors.hpp"

#include <algorithm>
#include <cmath>

namespace evsim
{

void validate(const AdoptionParams& params)
{
    auto non_negative = [](double v, const char* key) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw ConfigError(key, "must be finite and non-negative");
        }
    };
    auto probability = [](double v, const char* key) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw ConfigError(key, "must lie in [0, 1]");
        }
    };
    non_negative(params.ad_rate, "adoption.ad_rate");
    non_negative(params.contact_rate, "adoption.contact_rate");
    probability(params.adoption_fraction, "adoption.adoption_fraction");
    if (!(params.awareness_threshold >= 0.0 && params.awareness_threshold <= 100.0)) {
        throw ConfigError("adoption.awareness_threshold", "must lie in the range 0 to 100");
    }
    non_negative(params.incentive_beta, "adoption.incentive_beta");
    probability(params.subsidy_fraction, "adoption.subsidy_fraction");
    non_negative(params.subsidy_cap, "adoption.subsidy_cap");
    non_negative(params.ev_price, "adoption.ev_price");
    non_negative(params.conventional_price, "adoption.conventional_price");
    for (std::size_t i = 0; i < params.salary_by_level.size(); ++i) {
        if (!(params.salary_by_level[i] > 0.0) || !std::isfinite(params.salary_by_level[i])) {
            throw ConfigError("adoption.salary_by_level", "salaries must be positive");
        }
        if (i > 0 && !(params.salary_by_level[i] > params.salary_by_level[i - 1])) {
            throw ConfigError("adoption.salary_by_level", "salaries must strictly increase with level");
        }
    }
}

std::optional<double> next_ad_exposure(const AdoptionParams& params, Rng& rng)
{
    if (params.ad_rate <= 0.0) {
        return std::nullopt;
    }
    return rng.exponential(params.ad_rate / kDaysPerYear);
}

std::vector<int> wom_contacts(int adopter_id, std::size_t population_size, const AdoptionParams& params, Rng& rng)
{
    std::vector<int> contacts;
    if (population_size < 2 || params.contact_rate <= 0.0) {
        return contacts;
    }
    const auto count = rng.poisson(params.contact_rate / kDaysPerYear);
    contacts.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) {
        auto other = static_cast<int>(rng.below(population_size - 1));
        if (other >= adopter_id) {
            ++other;
        }
        contacts.push_back(other);
    }
    return contacts;
}

double incentive_multiplier(const CarOwner& owner, const TariffPolicy& tariff, const AdoptionParams& params)
{
    if (params.incentive_beta == 0.0) {
        return 1.0;
    }
    const double charge_saving =
        lookup_charge(owner.vehicle.category(), owner.staff_level, tariff) - ev_charge(owner.staff_level, tariff);
    const double subsidy = std::min(params.subsidy_fraction * params.ev_price, params.subsidy_cap);
    const double premium = std::max(0.0, params.ev_price - params.conventional_price);
    const double net_annual = charge_saving + (subsidy - premium) / kAmortizationYears;
    const double salary = params.salary_by_level[static_cast<std::size_t>(owner.staff_level - 1)];
    return std::clamp(1.0 + params.incentive_beta * net_annual / salary, 0.0, 2.0);
}

bool decide_purchase(CarOwner& owner, const PurchaseTrigger& trigger, const StereotypeSpec& stereotype,
                     const TariffPolicy& tariff, const AdoptionParams& params, Rng& rng)
{
    if (owner.vehicle.is_electric()) {
        throw ProtocolError("purchase trigger delivered to an electric-car owner", std::nullopt, owner.id);
    }
    const double transmission_draw = rng.uniform();
    const double decision_draw = rng.uniform();

    if (!(owner.energy_awareness > params.awareness_threshold)) {
        return false;
    }
    if (trigger.kind == TriggerKind::WomMessage && !(transmission_draw < trigger.source_cogency)) {
        return false;
    }
    const double p = std::min(1.0, stereotype.buy_probability * incentive_multiplier(owner, tariff, params));
    if (!(decision_draw < p)) {
        return false;
    }
    owner.vehicle = Vehicle::electric();
    owner.adopted_at = trigger.day;
    return true;
}

} // namespace evsim
