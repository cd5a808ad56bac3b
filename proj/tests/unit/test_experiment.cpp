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

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace evsim;
namespace fs = std::filesystem;

namespace
{

ScenarioConfig tiny()
{
    ScenarioConfig c;
    c.population.n_agents = 60;
    c.lot_capacity = 80;
    c.adoption.awareness_threshold = 20;
    c.adoption.contact_rate = 200;
    c.horizon_days = 40;
    c.replications = 3;
    c.base_seed = 11;
    return c;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name)
{
    auto dir = fs::temp_directory_path() / ("evsim_test_" + name);
    fs::remove_all(dir);
    return dir;
}

} // namespace

TEST(Sweep, Parses)
{
    auto s = parse_sweep("adoption.adoption_fraction=0,0.02,0.05");
    EXPECT_EQ(s.key, "adoption.adoption_fraction");
    EXPECT_EQ(s.values, (std::vector<std::string>{"0", "0.02", "0.05"}));

    s = parse_sweep("tariff.ev_strategy=multiplier:1;flat:1,2,3,4,5,6,7");
    EXPECT_EQ(s.values, (std::vector<std::string>{"multiplier:1", "flat:1,2,3,4,5,6,7"}));
}

TEST(Sweep, RejectsBadInput)
{
    EXPECT_THROW(parse_sweep("adoption.adoption_fraction"), ConfigError);
    EXPECT_THROW(parse_sweep("adoption.adoption_fraction="), ConfigError);
    EXPECT_THROW(parse_sweep("no.such_key=1"), ConfigError);
    EXPECT_THROW(parse_sweep("adoption.salary_by_level=1,2"), ConfigError);
    EXPECT_THROW(parse_sweep("tariff.table.A=1"), ConfigError);
    EXPECT_THROW(apply_sweep_value(tiny(), "adoption.awareness_threshold", "150"), ConfigError);
}

TEST(Experiment, SingleArmMatchesReplicationBatch)
{
    const auto c = tiny();
    const auto result = run_experiment(c, parse_sweep("adoption.adoption_fraction=0.015"));
    ASSERT_EQ(result.arms.size(), 1u);
    const auto direct = run_replications(c, c.base_seed, c.replications);
    ASSERT_EQ(result.arms[0].batch.runs.size(), direct.runs.size());
    for (std::size_t r = 0; r < direct.runs.size(); ++r) {
        EXPECT_EQ(result.arms[0].batch.runs[r].series, direct.runs[r].series);
    }
    EXPECT_EQ(result.arms[0].digest, scenario_digest(c));
}

TEST(Experiment, WritesSeriesSummaryAndManifest)
{
    const auto dir = scratch("files");
    const auto c = tiny();
    const auto result = run_experiment(c, parse_sweep("tariff.ev_strategy=multiplier:1,multiplier:0"), {dir, true});
    ASSERT_EQ(result.arms.size(), 2u);
    EXPECT_NE(result.arms[0].digest, result.arms[1].digest);
    // 3 runs + aggregate + scenario per arm, summary, manifest
    EXPECT_EQ(result.files.size(), 2u * 5u + 2u);
    for (const auto& f : result.files) {
        EXPECT_TRUE(fs::exists(f)) << f;
    }

    std::size_t run_files = 0;
    for (const auto& f : result.files) {
        const auto name = f.filename().string();
        if (name.find("_run") != std::string::npos) {
            ++run_files;
            const auto text = slurp(f);
            EXPECT_EQ(text.substr(0, text.find('\n')), kSeriesHeader);
            EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), c.horizon_days + 1);
        }
        if (name.find("_aggregate") != std::string::npos) {
            const auto text = slurp(f);
            EXPECT_EQ(text.rfind("day,ev_count_mean,ev_count_std,", 0), 0u) << text.substr(0, 80);
        }
    }
    EXPECT_EQ(run_files, 6u);

    const auto summary = slurp(dir / "summary.csv");
    EXPECT_EQ(summary.rfind("sweep_key,sweep_value,scenario_digest,replication,seed,final_ev_count\n", 0), 0u);
    EXPECT_EQ(std::count(summary.begin(), summary.end(), '\n'), 7);
    EXPECT_NE(summary.find("tariff.ev_strategy,multiplier:0," + result.arms[1].digest + ",2,"), std::string::npos);

    const auto manifest = slurp(dir / "manifest");
    for (const auto& arm : result.arms) {
        EXPECT_NE(manifest.find(arm.digest + " "), std::string::npos);
    }

    const auto scenario = slurp(dir / (result.arms[1].digest + "_multiplier_0_scenario.txt"));
    EXPECT_TRUE(parse_scenario(scenario) == result.arms[1].config);
    fs::remove_all(dir);
}

TEST(Experiment, SameSeedGivesIdenticalFiles)
{
    const auto a = scratch("det_a");
    const auto b = scratch("det_b");
    const auto ra = run_experiment(tiny(), std::nullopt, {a, true}, 1);
    const auto rb = run_experiment(tiny(), std::nullopt, {b, true}, 3);
    ASSERT_EQ(ra.files.size(), rb.files.size());
    for (std::size_t i = 0; i < ra.files.size(); ++i) {
        EXPECT_EQ(ra.files[i].filename(), rb.files[i].filename());
        EXPECT_EQ(slurp(ra.files[i]), slurp(rb.files[i])) << ra.files[i];
    }
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST(Presets, Exist)
{
    const auto e1 = find_preset("exp1");
    ASSERT_TRUE(e1);
    EXPECT_EQ(e1->sweep.key, "tariff.ev_strategy");
    EXPECT_EQ(e1->sweep.values.size(), 3u);
    EXPECT_EQ(e1->config.lot_capacity, 600u);
    EXPECT_EQ(e1->config.population.n_agents, 500u);
    EXPECT_EQ(e1->config.adoption.awareness_threshold, 50.0);
    EXPECT_EQ(e1->config.replications, 100u);

    const auto e2 = find_preset("exp2");
    ASSERT_TRUE(e2);
    EXPECT_EQ(e2->sweep.key, "adoption.adoption_fraction");
    EXPECT_EQ(e2->sweep.values, (std::vector<std::string>{"0", "0.02", "0.05"}));
    EXPECT_FALSE(find_preset("exp3"));
}

TEST(Bass, ReducedModeOpensGates)
{
    auto c = reduced_mode(experiment_base_config());
    EXPECT_EQ(c.adoption.awareness_threshold, 0.0);
    EXPECT_EQ(c.adoption.incentive_beta, 0.0);
    for (const auto& s : c.population.stereotypes) {
        EXPECT_EQ(s.buy_probability, 1.0);
    }
    const auto p = bass_params_for(c);
    EXPECT_EQ(p.p, 0.011);
    EXPECT_DOUBLE_EQ(p.q, 1.5);
    EXPECT_EQ(p.n_total, 500.0);
}

TEST(Bass, SmallValidationRuns)
{
    auto c = tiny();
    c.adoption.ad_rate = 0.5;
    c.adoption.contact_rate = 0;
    c.horizon_days = 365;
    c.replications = 10;
    const auto v = validate_against_bass(c, 1);
    ASSERT_TRUE(v.closed_form);
    EXPECT_EQ(v.abm.days(), 365u);
    EXPECT_EQ(v.ode.adopters.size(), 365u);
    EXPECT_LT(v.deviation, 0.1 * 60);
    std::ostringstream out;
    write_bass_csv(out, v);
    EXPECT_EQ(out.str().rfind("day,t_years,abm_mean,abm_std,sd_closed_form,sd_ode\n", 0), 0u);
}
