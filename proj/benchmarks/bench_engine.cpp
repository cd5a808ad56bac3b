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
#include "evsim/engine.hpp"
#include "evsim/experiment.hpp"
#include "evsim/population.hpp"
#include "evsim/validation.hpp"

#include <benchmark/benchmark.h>

using namespace evsim;

static void BM_TenYearRun(benchmark::State& state)
{
    const auto config = find_preset("exp1")->config;
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run(config, seed++).final_ev_count);
    }
}
BENCHMARK(BM_TenYearRun)->Unit(benchmark::kMillisecond);

static void BM_ReducedModeRun(benchmark::State& state)
{
    const auto config = reduced_mode(experiment_base_config());
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run(config, seed++).final_ev_count);
    }
}
BENCHMARK(BM_ReducedModeRun)->Unit(benchmark::kMillisecond);

static void BM_BassOde(benchmark::State& state)
{
    const BassParams params{0.011, 1.5, 500, 10, 0.001};
    for (auto _ : state) {
        benchmark::DoNotOptimize(bass_ode(params).adopters.back());
    }
}
BENCHMARK(BM_BassOde);

static void BM_SamplePopulation(benchmark::State& state)
{
    auto spec = default_population_spec();
    spec.n_agents = static_cast<std::size_t>(state.range(0));
    Rng rng(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_population(spec, 0.015, rng).size());
    }
}
BENCHMARK(BM_SamplePopulation)->Arg(500)->Arg(50000);

BENCHMARK_MAIN();
