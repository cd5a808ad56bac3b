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

#include <cstdint>
#include <random>

namespace evsim
{

/// Seeded random stream. The engine is mt19937_64, whose output sequence is
/// fixed by the standard; all distribution transforms are implemented here
/// so results do not depend on the standard library vendor.
class Rng
{
public:
    explicit Rng(std::uint64_t seed)
        : m_engine(seed)
    {
    }

    std::uint64_t next_u64() { return m_engine(); }

    /// Uniform on [0, 1) with 53 bits of resolution.
    double uniform()
    {
        return static_cast<double>(m_engine() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n);

    bool bernoulli(double p) { return uniform() < p; }

    /// Exponential variate with the given rate (mean 1/rate). rate > 0.
    double exponential(double rate);

    /// Poisson variate by sequential inversion; large means are split into
    /// independent pieces so exp(-mean) never underflows.
    std::uint64_t poisson(double mean);

private:
    std::mt19937_64 m_engine;
};

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for replication `index` of a batch started from `base_seed`.
constexpr std::uint64_t replication_seed(std::uint64_t base_seed, std::uint64_t index)
{
    return mix64(mix64(base_seed) ^ (index * 0xd1b54a32d192ed03ULL + 0x2545f4914f6cdd1dULL));
}

} // namespace evsim
