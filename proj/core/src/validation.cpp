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
#include "evsim/validation.hpp"
#include "evsim/adoption.hpp"
#include "evsim/errors.hpp"

#include <algorithm>
#include <cmath>

namespace evsim
{

void validate(const BassParams& params)
{
    if (!(params.p >= 0.0) || !(params.q >= 0.0)) {
        throw DomainError("bass: p and q must be non-negative");
    }
    if (!(params.n_total >= 0.0)) {
        throw DomainError("bass: n_total must be non-negative");
    }
    if (!(params.horizon_years >= 0.0)) {
        throw DomainError("bass: horizon must be non-negative");
    }
    if (!(params.dt > 0.0 && params.dt <= 0.01)) {
        throw DomainError("bass: dt must lie in (0, 0.01] years");
    }
}

double bass_closed_form(const BassParams& params, double t_years)
{
    if (!(params.p > 0.0)) {
        throw DomainError("bass_closed_form: p must be positive; use bass_ode");
    }
    const double decay = std::exp(-(params.p + params.q) * t_years);
    return params.n_total * (1.0 - decay) / (1.0 + (params.q / params.p) * decay);
}

std::size_t day_samples(const BassParams& params)
{
    return static_cast<std::size_t>(std::ceil(params.horizon_years * kDaysPerYear - 1e-9));
}

Trajectory bass_ode(const BassParams& params)
{
    validate(params);
    const double n = params.n_total;
    auto rate = [&](double a) { return n > 0.0 ? (params.p + params.q * a / n) * (n - a) : 0.0; };

    const std::size_t days = day_samples(params);
    Trajectory out;
    out.t_years.reserve(days);
    out.adopters.reserve(days);
    double a = 0.0;
    double t = 0.0;
    for (std::size_t d = 0; d < days; ++d) {
        const double t_next = static_cast<double>(d + 1) / kDaysPerYear;
        const auto steps = static_cast<int>(std::ceil((t_next - t) / params.dt - 1e-12));
        const double h = (t_next - t) / steps;
        for (int s = 0; s < steps; ++s) {
            const double k1 = rate(a);
            const double k2 = rate(a + 0.5 * h * k1);
            const double k3 = rate(a + 0.5 * h * k2);
            const double k4 = rate(a + h * k3);
            a += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        t = t_next;
        out.t_years.push_back(t);
        out.adopters.push_back(a);
    }
    return out;
}

Trajectory bass_closed_form_trajectory(const BassParams& params)
{
    validate(params);
    const std::size_t days = day_samples(params);
    Trajectory out;
    out.t_years.reserve(days);
    out.adopters.reserve(days);
    for (std::size_t d = 0; d < days; ++d) {
        const double t = static_cast<double>(d + 1) / kDaysPerYear;
        out.t_years.push_back(t);
        out.adopters.push_back(bass_closed_form(params, t));
    }
    return out;
}

double compare_abm_to_sd(std::span<const double> abm_mean, std::span<const double> sd)
{
    if (abm_mean.size() != sd.size()) {
        throw DomainError("compare_abm_to_sd: trajectories are on different day grids");
    }
    double worst = 0.0;
    for (std::size_t d = 0; d < sd.size(); ++d) {
        worst = std::max(worst, std::abs(abm_mean[d] - sd[d]));
    }
    return worst;
}

} // namespace evsim
