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
#include "evsim/experiment.hpp"
#include "evsim/errors.hpp"
#include "evsim/format.hpp"

#include <fstream>
#include <ostream>

namespace evsim
{

namespace
{

std::string file_token(std::string_view value)
{
    std::string out;
    for (char ch : value) {
        const bool keep = (ch >= '0' && ch <= '9') || (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
                          ch == '.' || ch == '-';
        out += keep ? ch : '_';
    }
    return out;
}

std::ofstream open_output(const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    return out;
}

} // namespace

void write_series_csv(std::ostream& out, const MetricsSeries& series)
{
    out << kSeriesHeader << '\n';
    for (const auto& r : series) {
        out << r.day << ',' << r.ev_count << ',' << r.new_adopters << ',' << format_double(r.revenue) << ','
            << format_double(r.energy_proxy) << ',' << r.peak_occupancy << ',' << r.rejections << '\n';
    }
}

void write_aggregate_csv(std::ostream& out, const AggregateSeries& aggregate)
{
    out << "day";
    for (Metric m : kAllMetrics) {
        out << ',' << metric_name(m) << "_mean," << metric_name(m) << "_std";
    }
    out << '\n';
    for (std::size_t d = 0; d < aggregate.days(); ++d) {
        out << d;
        for (Metric m : kAllMetrics) {
            out << ',' << format_double(aggregate.mean_of(m)[d]) << ',' << format_double(aggregate.std_of(m)[d]);
        }
        out << '\n';
    }
}

Sweep parse_sweep(std::string_view text)
{
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
        throw ConfigError("", "sweep must look like key=v1,v2,...");
    }
    Sweep sweep;
    sweep.key = std::string(trim(text.substr(0, eq)));
    if (!is_scalar_key(sweep.key)) {
        throw ConfigError(sweep.key, "sweep key must be a scalar scenario key");
    }
    const std::string_view list = text.substr(eq + 1);
    const char separator = list.find(';') != std::string_view::npos ? ';' : ',';
    for (auto v : split(list, separator)) {
        if (v.empty()) {
            throw ConfigError(sweep.key, "empty sweep value");
        }
        sweep.values.emplace_back(v);
    }
    return sweep;
}

ScenarioConfig apply_sweep_value(const ScenarioConfig& base, const std::string& key, const std::string& value)
{
    ScenarioConfig config = base;
    apply_setting(config, key, value);
    validate(config);
    return config;
}

ScenarioConfig experiment_base_config()
{
    ScenarioConfig config;
    config.lot_capacity = 600;
    config.population.n_agents = 500;
    config.adoption.awareness_threshold = 50.0;
    // Permit savings are a fraction of a percent of salary; this sensitivity
    // puts the multiplier spread between strategies at a few tens of percent.
    config.adoption.incentive_beta = 150.0;
    config.horizon_days = 3653;
    config.replications = 100;
    config.base_seed = 20100701;
    return config;
}

std::optional<Preset> find_preset(std::string_view name)
{
    if (name == "exp1") {
        return Preset{"exp1", "EV permit charge comparison", experiment_base_config(),
                      Sweep{"tariff.ev_strategy", {"multiplier:1.0", "multiplier:0.5", "multiplier:0.0"}}};
    }
    if (name == "exp2") {
        return Preset{"exp2", "word-of-mouth strength", experiment_base_config(),
                      Sweep{"adoption.adoption_fraction", {"0", "0.02", "0.05"}}};
    }
    return std::nullopt;
}

double ArmResult::final_mean() const
{
    const auto& mean = batch.aggregate.mean_of(Metric::EvCount);
    return mean.empty() ? 0.0 : mean.back();
}

double ArmResult::final_std() const
{
    const auto& sd = batch.aggregate.std_of(Metric::EvCount);
    return sd.empty() ? 0.0 : sd.back();
}

ExperimentResult run_experiment(const ScenarioConfig& config, const std::optional<Sweep>& sweep,
                                const OutputOptions& output, unsigned threads)
{
    ExperimentResult result;
    std::vector<std::string> values{""};
    if (sweep) {
        result.sweep_key = sweep->key;
        values = sweep->values;
    }
    for (const auto& value : values) {
        ArmResult arm;
        arm.sweep_value = value;
        arm.config = sweep ? apply_sweep_value(config, sweep->key, value) : config;
        validate(arm.config);
        arm.digest = scenario_digest(arm.config);
        arm.batch = run_replications(arm.config, arm.config.base_seed, arm.config.replications, threads);
        result.arms.push_back(std::move(arm));
    }

    if (!output.dir) {
        return result;
    }
    std::filesystem::create_directories(*output.dir);
    std::vector<std::pair<std::string, std::string>> manifest;
    auto emit = [&](const std::string& name, const std::string& digest) {
        result.files.push_back(*output.dir / name);
        manifest.emplace_back(digest, name);
        return open_output(*output.dir / name);
    };

    for (const auto& arm : result.arms) {
        const std::string stem = arm.digest + (arm.sweep_value.empty() ? "" : "_" + file_token(arm.sweep_value));
        if (output.per_run_series) {
            for (std::size_t r = 0; r < arm.batch.runs.size(); ++r) {
                auto out = emit(stem + "_run" + std::to_string(r) + ".csv", arm.digest);
                write_series_csv(out, arm.batch.runs[r].series);
            }
        }
        auto out = emit(stem + "_aggregate.csv", arm.digest);
        write_aggregate_csv(out, arm.batch.aggregate);
    }
    {
        auto out = emit("summary.csv", "-");
        out << "sweep_key,sweep_value,scenario_digest,replication,seed,final_ev_count\n";
        for (const auto& arm : result.arms) {
            for (std::size_t r = 0; r < arm.batch.runs.size(); ++r) {
                const auto& run = arm.batch.runs[r];
                out << result.sweep_key.value_or("") << ',' << arm.sweep_value << ',' << arm.digest << ',' << r << ','
                    << run.seed << ',' << run.final_ev_count << '\n';
            }
        }
    }
    for (const auto& arm : result.arms) {
        const std::string name =
            arm.digest + (arm.sweep_value.empty() ? "" : "_" + file_token(arm.sweep_value)) + "_scenario.txt";
        auto out = emit(name, arm.digest);
        out << serialize_scenario(arm.config);
    }
    auto out = open_output(*output.dir / "manifest");
    for (const auto& [digest, name] : manifest) {
        out << digest << ' ' << name << '\n';
    }
    result.files.push_back(*output.dir / "manifest");
    return result;
}

ScenarioConfig reduced_mode(ScenarioConfig config)
{
    config.adoption.awareness_threshold = 0.0;
    config.adoption.incentive_beta = 0.0;
    for (auto& s : config.population.stereotypes) {
        s.buy_probability = 1.0;
    }
    config.population.cogency_range.reset();
    return config;
}

BassParams bass_params_for(const ScenarioConfig& config)
{
    BassParams params;
    params.p = config.adoption.ad_rate;
    params.q = config.adoption.contact_rate * config.adoption.adoption_fraction;
    params.n_total = static_cast<double>(config.population.n_agents);
    params.horizon_years = static_cast<double>(config.horizon_days) / kDaysPerYear;
    params.dt = 0.001;
    return params;
}

BassValidation validate_against_bass(const ScenarioConfig& config, unsigned threads)
{
    const ScenarioConfig reduced = reduced_mode(config);
    BassValidation v;
    v.params = bass_params_for(reduced);
    v.abm = run_replications(reduced, reduced.base_seed, reduced.replications, threads).aggregate;
    v.ode = bass_ode(v.params);
    v.tolerance = kBassTolerance * v.params.n_total;
    if (v.params.p > 0.0) {
        v.closed_form = bass_closed_form_trajectory(v.params);
        v.deviation = compare_abm_to_sd(v.abm.mean_of(Metric::EvCount), v.closed_form->adopters);
    }
    else {
        v.deviation = compare_abm_to_sd(v.abm.mean_of(Metric::EvCount), v.ode.adopters);
    }
    return v;
}

void write_bass_csv(std::ostream& out, const BassValidation& v)
{
    out << "day,t_years,abm_mean,abm_std,sd_closed_form,sd_ode\n";
    const auto& mean = v.abm.mean_of(Metric::EvCount);
    const auto& sd = v.abm.std_of(Metric::EvCount);
    for (std::size_t d = 0; d < v.ode.adopters.size(); ++d) {
        out << d << ',' << format_double(v.ode.t_years[d]) << ',' << format_double(mean[d]) << ','
            << format_double(sd[d]) << ',' << (v.closed_form ? format_double(v.closed_form->adopters[d]) : "")
            << ',' << format_double(v.ode.adopters[d]) << '\n';
    }
}

} // namespace evsim
