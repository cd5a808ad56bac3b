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
#include "evsim/errors.hpp"
#include "evsim/experiment.hpp"
#include "evsim/scenario.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

namespace
{

int run_validation(const evsim::ScenarioConfig& config, const std::filesystem::path& out_dir, unsigned threads)
{
    const auto v = evsim::validate_against_bass(config, threads);
    std::filesystem::create_directories(out_dir);
    const auto csv = out_dir / "bass_validation.csv";
    {
        std::ofstream out(csv, std::ios::binary);
        evsim::write_bass_csv(out, v);
    }
    {
        std::ofstream out(out_dir / "manifest", std::ios::binary);
        out << evsim::scenario_digest(evsim::reduced_mode(config)) << ' ' << csv.filename().string() << '\n';
    }
    std::cout << "bass validation: p=" << v.params.p << "/yr q=" << v.params.q << "/yr N=" << v.params.n_total
              << " replications=" << v.abm.runs << '\n'
              << "sup-norm deviation " << std::fixed << std::setprecision(3) << v.deviation << " agents (tolerance "
              << v.tolerance << ") " << (v.passed() ? "PASS" : "FAIL") << '\n'
              << "wrote " << csv.string() << '\n';
    return v.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"evsim: electric-vehicle adoption simulator"};

    std::string scenario_path;
    std::string preset_name;
    std::string sweep_text;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> replications;
    std::optional<int> horizon_days;
    std::string out_dir = "evsim_out";
    bool validate_bass = false;
    bool no_run_series = false;
    unsigned threads = 0;

    app.add_option("--scenario", scenario_path, "Scenario file (section.key = value lines)");
    app.add_option("--preset", preset_name, "Built-in experiment")->check(CLI::IsMember({"exp1", "exp2"}));
    app.add_option("--sweep", sweep_text, "Sweep one scalar key: key=v1,v2,...");
    app.add_option("--seed", seed, "Base seed (overrides run.base_seed)");
    app.add_option("--replications", replications, "Replications per arm (overrides run.replications)")
        ->check(CLI::PositiveNumber);
    app.add_option("--horizon-days", horizon_days, "Simulated days (overrides run.horizon_days)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--out", out_dir, "Output directory");
    app.add_flag("--validate-bass", validate_bass, "Compare the reduced model against the Bass oracle");
    app.add_flag("--no-run-series", no_run_series, "Skip per-replication series files");
    app.add_option("--threads", threads, "Worker threads for replications (0 = all cores)");

    CLI11_PARSE(app, argc, argv);

    try {
        evsim::ScenarioConfig config;
        std::optional<evsim::Sweep> sweep;
        if (!preset_name.empty()) {
            const auto preset = evsim::find_preset(preset_name);
            config = preset->config;
            sweep = preset->sweep;
        }
        if (!scenario_path.empty()) {
            if (!preset_name.empty()) {
                std::cerr << "error: --scenario and --preset are mutually exclusive\n";
                return 2;
            }
            config = evsim::load_scenario_file(scenario_path);
        }
        if (seed) {
            config.base_seed = *seed;
        }
        if (replications) {
            config.replications = *replications;
        }
        if (horizon_days) {
            config.horizon_days = *horizon_days;
        }
        if (!sweep_text.empty()) {
            sweep = evsim::parse_sweep(sweep_text);
        }
        evsim::validate(config);

        if (validate_bass) {
            return run_validation(config, out_dir, threads);
        }

        evsim::OutputOptions output;
        output.dir = out_dir;
        output.per_run_series = !no_run_series;
        const auto result = evsim::run_experiment(config, sweep, output, threads);
        for (const auto& arm : result.arms) {
            std::cout << (result.sweep_key ? *result.sweep_key + "=" + arm.sweep_value : std::string("baseline"))
                      << "  digest " << arm.digest << "  final ev_count mean " << std::fixed << std::setprecision(2)
                      << arm.final_mean() << " sd " << arm.final_std() << " (n=" << arm.batch.runs.size() << ")\n";
        }
        std::cout << "wrote " << result.files.size() << " files to " << out_dir << '\n';
        return 0;
    }
    catch (const evsim::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    }
    catch (const evsim::ProtocolError& e) {
        std::cerr << "simulation aborted: " << e.what() << '\n';
        return 3;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
