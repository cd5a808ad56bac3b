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
#include "evsim/rng.hpp"
#include "evsim/errors.hpp"

#include <cmath>
#include <limits>

namespace evsim
{

std::uint64_t Rng::below(std::uint64_t n)
{
    if (n == 0) {
        throw DomainError("Rng::below: empty range");
    }
    // Lemire-style rejection on the low threshold keeps the draw unbiased.
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t x = m_engine();
        if (x >= threshold) {
            return x % n;
        }
    }
}

double Rng::exponential(double rate)
{
    if (!(rate > 0.0)) {
        throw DomainError("Rng::exponential: rate must be positive");
    }
    // 1 - u lies in (0, 1], so the log is finite.
    return -std::log1p(-uniform()) / rate;
}

std::uint64_t Rng::poisson(double mean)
{
    if (!(mean >= 0.0) || !std::isfinite(mean)) {
        throw DomainError("Rng::poisson: mean must be finite and non-negative");
    }
    constexpr double piece = 32.0;
    std::uint64_t total = 0;
    while (mean > 0.0) {
        const double m = mean > piece ? piece : mean;
        mean -= m;
        double p = std::exp(-m);
        double cdf = p;
        const double u = uniform();
        std::uint64_t k = 0;
        while (u >= cdf && p > 0.0) {
            ++k;
            p *= m / static_cast<double>(k);
            cdf += p;
        }
        total += k;
    }
    return total;
}

} // namespace evsim
