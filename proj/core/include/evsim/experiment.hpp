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

#include "evsim/engine.hpp"
#include "evsim/scenario.hpp"
#include "evsim/validation.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace evsim
{

inline constexpr std::string_view kSeriesHeader = "day,ev_count,new_adopters,revenue,energy_proxy,peak_occupancy,rejections";

void write_series_csv(std::ostream& out, const MetricsSeries& series);
void write_aggregate_csv(std::ostream& out, const AggregateSeries& aggregate);

struct Sweep
{
    std::string key;
    std::vector<std::string> values;
};

/// `key=v1,v2,...`; values may instead be separated by ';' when they contain
/// commas themselves. Throws ConfigError for unknown or non-scalar keys.
Sweep parse_sweep(std::string_view text);

/// Copy of `base` with `key = value` applied and validated.
ScenarioConfig apply_sweep_value(const ScenarioConfig& base, const std::string& key, const std::string& value);

struct Preset
{
    std::string name;
    std::string description;
    ScenarioConfig config;
    Sweep sweep;
};

/// Baseline of both presets: 600 spaces, 500 staff, awareness threshold 50,
/// ten-year horizon, 100 replications.
ScenarioConfig experiment_base_config();

/// `exp1` compares EV permit multipliers 1.0, 0.5, 0.0;
/// `exp2` sweeps the adoption fraction over 0, 0.02, 0.05.
std::optional<Preset> find_preset(std::string_view name);

struct ArmResult
{
    std::string sweep_value; ///< empty without a sweep
    ScenarioConfig config;
    std::string digest;
    ReplicationBatch batch;

    double final_mean() const;
    double final_std() const;
};

struct ExperimentResult
{
    std::optional<std::string> sweep_key;
    std::vector<ArmResult> arms;
    std::vector<std::filesystem::path> files;
};

struct OutputOptions
{
    std::optional<std::filesystem::path> dir; ///< nothing is written when unset
    bool per_run_series = true;
};

/// One replication batch per sweep value, all sharing config.base_seed.
/// Writes per-run series, per-arm aggregates, summary.csv and a manifest.
ExperimentResult run_experiment(const ScenarioConfig& config, const std::optional<Sweep>& sweep,
                                const OutputOptions& output = {}, unsigned threads = 0);

/// Relative sup-norm tolerance of the ABM-vs-Bass comparison (fraction of N).
inline constexpr double kBassTolerance = 0.05;

/// Opens every decision gate: threshold 0, buy probability 1, no incentive,
/// constant cogency equal to the adoption fraction.
ScenarioConfig reduced_mode(ScenarioConfig config);

/// p = ad_rate, q = contact_rate x adoption_fraction, N = n_agents.
BassParams bass_params_for(const ScenarioConfig& config);

struct BassValidation
{
    BassParams params;
    AggregateSeries abm;
    std::optional<Trajectory> closed_form; ///< absent when p = 0
    Trajectory ode;
    double deviation = 0.0; ///< against the closed form, or the ODE when p = 0
    double tolerance = 0.0;
    bool passed() const { return deviation <= tolerance; }
};

/// Runs config.replications reduced-mode replications and compares the mean
/// adopter trajectory with the diffusion oracle.
BassValidation validate_against_bass(const ScenarioConfig& config, unsigned threads = 0);

void write_bass_csv(std::ostream& out, const BassValidation& validation);

} // namespace evsim
