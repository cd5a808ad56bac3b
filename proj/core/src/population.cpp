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
#include "evsim/population.hpp"
#include "evsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace evsim
{

namespace
{

template <std::size_t N>
void validate_weights(const std::array<double, N>& weights, const std::string& key)
{
    bool any_positive = false;
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0) {
            throw ConfigError(key, "weights must be finite and non-negative");
        }
        any_positive = any_positive || w > 0.0;
    }
    if (!any_positive) {
        throw ConfigError(key, "at least one weight must be positive");
    }
}

template <std::size_t N>
std::size_t draw_weighted(const std::array<double, N>& weights, Rng& rng)
{
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    const double target = rng.uniform() * total;
    double cumulative = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < N; ++i) {
        if (weights[i] <= 0.0) {
            continue;
        }
        last_positive = i;
        cumulative += weights[i];
        if (target < cumulative) {
            return i;
        }
    }
    return last_positive;
}

} // namespace

std::vector<StereotypeSpec> survey_stereotypes()
{
    return {
        {1, 0.01, 95.0, 100.0, 0.9},
        {2, 0.09, 70.0, 94.0, 0.7},
        {3, 0.30, 30.0, 69.0, 0.4},
        {4, 0.60, 0.0, 29.0, 0.2},
    };
}

PopulationSpec default_population_spec()
{
    PopulationSpec spec;
    spec.stereotypes = survey_stereotypes();
    spec.n_agents = 500;
    spec.staff_level_weights.fill(1.0);
    spec.fleet_category_weights.fill(1.0);
    return spec;
}

void validate(const PopulationSpec& spec)
{
    if (spec.stereotypes.empty()) {
        throw ConfigError("population.stereotype", "stereotype list is empty");
    }
    double share_sum = 0.0;
    for (const auto& s : spec.stereotypes) {
        const std::string key = "population.stereotype." + std::to_string(s.id);
        if (s.id < 1) {
            throw ConfigError(key, "stereotype id must be positive");
        }
        if (!(s.share >= 0.0 && s.share <= 1.0)) {
            throw ConfigError(key, "share must lie in [0, 1]");
        }
        if (!(s.ea_low >= 0.0 && s.ea_low <= s.ea_high && s.ea_high <= 100.0)) {
            throw ConfigError(key, "energy awareness bounds must satisfy 0 <= low <= high <= 100");
        }
        if (!(s.buy_probability >= 0.0 && s.buy_probability <= 1.0)) {
            throw ConfigError(key, "buy probability must lie in [0, 1]");
        }
        share_sum += s.share;
    }
    for (std::size_t i = 0; i < spec.stereotypes.size(); ++i) {
        for (std::size_t j = i + 1; j < spec.stereotypes.size(); ++j) {
            if (spec.stereotypes[i].id == spec.stereotypes[j].id) {
                throw ConfigError("population.stereotype." + std::to_string(spec.stereotypes[i].id),
                                  "duplicate stereotype id");
            }
        }
    }
    if (std::abs(share_sum - 1.0) > 1e-9) {
        throw ConfigError("population.stereotype", "shares sum to " + std::to_string(share_sum) + ", expected 1");
    }
    validate_weights(spec.staff_level_weights, "population.staff_level_weights");
    validate_weights(spec.fleet_category_weights, "population.fleet_category_weights");
    if (spec.cogency_range) {
        const auto [lo, hi] = *spec.cogency_range;
        if (!(lo >= 0.0 && lo <= hi && hi <= 1.0)) {
            throw ConfigError("population.cogency", "cogency range must satisfy 0 <= lo <= hi <= 1");
        }
    }
}

std::vector<std::size_t> largest_remainder_quota(std::span<const double> shares, std::size_t n)
{
    std::vector<std::size_t> counts(shares.size(), 0);
    std::vector<double> remainders(shares.size(), 0.0);
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < shares.size(); ++i) {
        const double exact = shares[i] * static_cast<double>(n);
        // Guard against 0.3 * 500 = 149.99999999999997 style round-off.
        const double floor_value = std::floor(exact + 1e-9);
        counts[i] = static_cast<std::size_t>(floor_value);
        remainders[i] = exact - floor_value;
        assigned += counts[i];
    }
    if (assigned > n) {
        throw ConfigError("population.stereotype", "shares exceed 1");
    }
    std::vector<std::size_t> order(shares.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return remainders[a] > remainders[b]; });
    for (std::size_t k = 0; assigned < n; ++k) {
        ++counts[order[k % order.size()]];
        ++assigned;
    }
    return counts;
}

std::vector<CarOwner> sample_population(const PopulationSpec& spec, double default_cogency, Rng& rng)
{
    validate(spec);
    std::vector<double> shares;
    shares.reserve(spec.stereotypes.size());
    for (const auto& s : spec.stereotypes) {
        shares.push_back(s.share);
    }
    const auto counts = largest_remainder_quota(shares, spec.n_agents);

    std::vector<std::size_t> labels;
    labels.reserve(spec.n_agents);
    for (std::size_t s = 0; s < counts.size(); ++s) {
        labels.insert(labels.end(), counts[s], s);
    }
    // Fisher-Yates, descending.
    for (std::size_t i = labels.size(); i > 1; --i) {
        std::swap(labels[i - 1], labels[rng.below(i)]);
    }

    std::vector<CarOwner> owners;
    owners.reserve(spec.n_agents);
    for (std::size_t i = 0; i < spec.n_agents; ++i) {
        const StereotypeSpec& st = spec.stereotypes[labels[i]];
        CarOwner owner;
        owner.id = static_cast<int>(i);
        owner.stereotype_id = st.id;
        owner.energy_awareness = rng.uniform(st.ea_low, st.ea_high);
        owner.staff_level = static_cast<int>(draw_weighted(spec.staff_level_weights, rng)) + 1;
        owner.vehicle =
            Vehicle::conventional(static_cast<EmissionsCategory>(draw_weighted(spec.fleet_category_weights, rng)));
        if (spec.cogency_range) {
            owner.cogency = rng.uniform(spec.cogency_range->first, spec.cogency_range->second);
        }
        else {
            owner.cogency = default_cogency;
        }
        owners.push_back(owner);
    }
    return owners;
}

double eligible_fraction(const PopulationSpec& spec, double threshold)
{
    if (!(threshold >= 0.0 && threshold <= 100.0)) {
        throw DomainError("eligible_fraction: threshold must lie in [0, 100]");
    }
    double total = 0.0;
    for (const auto& s : spec.stereotypes) {
        double pass = 0.0;
        if (s.ea_high > s.ea_low) {
            pass = std::clamp((s.ea_high - threshold) / (s.ea_high - s.ea_low), 0.0, 1.0);
        }
        else {
            pass = s.ea_low > threshold ? 1.0 : 0.0;
        }
        total += s.share * pass;
    }
    return total;
}

const StereotypeSpec& find_stereotype(const PopulationSpec& spec, int id)
{
    for (const auto& s : spec.stereotypes) {
        if (s.id == id) {
            return s;
        }
    }
    throw DomainError("unknown stereotype id " + std::to_string(id));
}

} // namespace evsim
