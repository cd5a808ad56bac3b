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

#include <span>
#include <vector>

namespace evsim
{

/// Mixed-influence diffusion parameters. Coefficients are per year.
struct BassParams
{
    double p = 0.0; ///< innovation, maps to the ad rate
    double q = 0.0; ///< imitation, maps to contact rate x cogency
    double n_total = 0.0;
    double horizon_years = 0.0;
    double dt = 0.001; ///< RK4 step, years

    friend bool operator==(const BassParams&, const BassParams&) = default;
};

void validate(const BassParams& params);

/// A(t) = n (1 - e^{-(p+q)t}) / (1 + (q/p) e^{-(p+q)t}). Throws DomainError for p <= 0.
double bass_closed_form(const BassParams& params, double t_years);

/// Trajectory on the simulator's day grid: element d is the value at the end
/// of day d, i.e. t = (d + 1) / 365.25 years, for d in [0, days).
struct Trajectory
{
    std::vector<double> t_years;
    std::vector<double> adopters;
};

/// Number of day samples covering horizon_years.
std::size_t day_samples(const BassParams& params);

/// Fixed-step RK4 of dA/dt = (p + q A / n)(n - A), A(0) = 0. Each day
/// interval is split into ceil(interval / dt) equal substeps. Allows p = 0.
Trajectory bass_ode(const BassParams& params);

Trajectory bass_closed_form_trajectory(const BassParams& params);

/// max_d |abm(d) - sd(d)|. Throws DomainError when lengths differ.
double compare_abm_to_sd(std::span<const double> abm_mean, std::span<const double> sd);

} // namespace evsim
