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
#include "evsim/scenario.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

using namespace evsim;

namespace
{

std::string join_lines(const std::vector<std::string>& lines)
{
    std::string out;
    for (const auto& l : lines) {
        out += l + "\n";
    }
    return out;
}

ConfigError parse_error(const std::string& text)
{
    try {
        parse_scenario(text);
    }
    catch (const ConfigError& e) {
        return e;
    }
    ADD_FAILURE() << "expected ConfigError for:\n" << text;
    return ConfigError("", "");
}

} // namespace

TEST(Scenario, EmptyFileGivesDefaults)
{
    const auto c = parse_scenario("");
    EXPECT_TRUE(c == ScenarioConfig{});
    EXPECT_EQ(c.population.stereotypes, survey_stereotypes());
    EXPECT_EQ(c.tariff.table, campus_charge_table());
    EXPECT_EQ(c.adoption.ad_rate, 0.011);
    EXPECT_EQ(c.adoption.contact_rate, 100.0);
    EXPECT_EQ(c.adoption.adoption_fraction, 0.015);
    EXPECT_EQ(parse_scenario("# only a comment\n\n   \n"), ScenarioConfig{});
}

TEST(Scenario, CampusExperimentParameters)
{
    const auto c = parse_scenario("lot.capacity = 600\npopulation.n_agents = 500\nadoption.awareness_threshold = 50\n");
    EXPECT_EQ(c.lot_capacity, 600u);
    EXPECT_EQ(c.population.n_agents, 500u);
    EXPECT_EQ(c.adoption.awareness_threshold, 50.0);
}

TEST(Scenario, ThresholdOutOfRange)
{
    const auto e = parse_error("lot.capacity = 600\nadoption.awareness_threshold = 150\n");
    EXPECT_EQ(e.key(), "adoption.awareness_threshold");
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("0 to 100"), std::string::npos) << e.what();
}

TEST(Scenario, ErrorsCarryLineAndKey)
{
    auto e = parse_error("\nlot.capacity = 600\nlot.colour = red\n");
    EXPECT_EQ(e.key(), "lot.colour");
    EXPECT_EQ(e.line(), 3);

    e = parse_error("population.n_agents = many\n");
    EXPECT_EQ(e.key(), "population.n_agents");
    EXPECT_EQ(e.line(), 1);

    e = parse_error("adoption.ad_rate = 0.1\nadoption.ad_rate = 0.2\n");
    EXPECT_EQ(e.line(), 2);

    e = parse_error("just some words\n");
    EXPECT_EQ(e.line(), 1);

    e = parse_error("adoption.salary_by_level = 1,2,3\n");
    EXPECT_EQ(e.key(), "adoption.salary_by_level");

    e = parse_error("calendar.depart_home = 25:00\n");
    EXPECT_EQ(e.key(), "calendar.depart_home");

    e = parse_error("tariff.table.C = 1,2,3,4,5,6,7\n");
    EXPECT_EQ(e.key(), "tariff.table.C");
    EXPECT_EQ(e.line(), 1);
}

TEST(Scenario, ResolutionIsOrderIndependent)
{
    std::vector<std::string> lines{
        "population.n_agents = 321",
        "adoption.contact_rate = 42.5",
        "tariff.ev_strategy = multiplier:0.25",
        "calendar.workdays = mon,wed,fri",
        "population.stereotype.1 = 0.5,60,100,0.8",
        "population.stereotype.2 = 0.5,0,59,0.1",
        "energy.round_trip_km = 33",
        "run.base_seed = 18446744073709551615",
    };
    const auto reference = parse_scenario(join_lines(lines));
    std::mt19937 gen(4);
    for (int i = 0; i < 20; ++i) {
        std::shuffle(lines.begin(), lines.end(), gen);
        EXPECT_TRUE(parse_scenario(join_lines(lines)) == reference);
    }
    EXPECT_EQ(reference.population.stereotypes.size(), 2u);
    EXPECT_EQ(reference.base_seed, 18446744073709551615ULL);
    EXPECT_EQ(reference.calendar.workdays, (std::array<bool, 7>{true, false, true, false, true, false, false}));
}

TEST(Scenario, StereotypeKeysReplaceTheDefaultList)
{
    const auto c = parse_scenario("population.stereotype.7 = 1,10,20,0.5\n");
    ASSERT_EQ(c.population.stereotypes.size(), 1u);
    EXPECT_EQ(c.population.stereotypes[0], (StereotypeSpec{7, 1.0, 10, 20, 0.5}));
    EXPECT_EQ(parse_error("population.stereotype.1 = 0.5,10,20,0.5\n").key(), "population.stereotype");
}

TEST(Scenario, TableOverrideRoundTripsBitExactly)
{
    const std::string text = "tariff.table.A = 44.1,57.000000000000007,75,105,132,165,210\n";
    const auto c = parse_scenario(text);
    EXPECT_EQ(c.tariff.table[0][0], 44.1);
    EXPECT_EQ(c.tariff.table[0][1], 57.000000000000007);
    const auto again = parse_scenario(serialize_scenario(c));
    for (int r = 0; r < 5; ++r) {
        for (int l = 0; l < 7; ++l) {
            EXPECT_EQ(std::bit_cast<std::uint64_t>(again.tariff.table[r][l]),
                      std::bit_cast<std::uint64_t>(c.tariff.table[r][l]));
        }
    }
}

TEST(Scenario, SerializeIsCanonicalAndSorted)
{
    const auto text = serialize_scenario(ScenarioConfig{});
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> keys;
    while (std::getline(in, line)) {
        keys.push_back(line.substr(0, line.find(" = ")));
    }
    EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
    EXPECT_EQ(std::adjacent_find(keys.begin(), keys.end()), keys.end());
    EXPECT_NE(text.find("tariff.table.E = 102,133,175,245,308,385,490\n"), std::string::npos);
    EXPECT_NE(text.find("calendar.depart_home = 08:00\n"), std::string::npos);
    EXPECT_NE(text.find("tariff.ev_strategy = same_as_a\n"), std::string::npos);
}

// Random configurations survive parse(serialize(c)) unchanged.
TEST(Scenario, SerializeParseIdentity)
{
    std::mt19937_64 gen(31);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        ScenarioConfig c;
        c.adoption.ad_rate = unit(gen) * 3;
        c.adoption.contact_rate = unit(gen) * 300;
        c.adoption.adoption_fraction = unit(gen);
        c.adoption.awareness_threshold = unit(gen) * 100;
        c.adoption.incentive_beta = unit(gen) * 500;
        c.adoption.ev_price = unit(gen) * 40000;
        c.population.n_agents = static_cast<std::size_t>(unit(gen) * 2000);
        c.population.staff_level_weights[3] = unit(gen) + 0.1;
        c.energy.round_trip_km = 1 + unit(gen) * 50;
        c.lot_capacity = static_cast<std::size_t>(unit(gen) * 900);
        c.horizon_days = static_cast<int>(unit(gen) * 5000);
        c.base_seed = gen();
        if (trial % 3 == 0) {
            c.tariff.ev_strategy = ev_strategy::Multiplier{unit(gen)};
        }
        else if (trial % 3 == 1) {
            c.tariff.ev_strategy = ev_strategy::FlatTable{{unit(gen), 1, 2, 3, 4, 5, 6}};
        }
        if (trial % 2 == 0) {
            const double lo = unit(gen) * 0.5;
            c.population.cogency_range = std::make_pair(lo, lo + unit(gen) * 0.5);
        }
        c.population.stereotypes[1].ea_low = 60 + unit(gen) * 10;
        c.calendar.depart_home_minute = 300 + static_cast<int>(unit(gen) * 200);
        c.calendar.workdays[6] = trial % 5 == 0;
        const auto text = serialize_scenario(c);
        const auto parsed = parse_scenario(text);
        ASSERT_TRUE(parsed == c) << text;
        EXPECT_EQ(serialize_scenario(parsed), text);
        EXPECT_EQ(scenario_digest(parsed), scenario_digest(c));
    }
}

TEST(Scenario, DigestTracksContent)
{
    ScenarioConfig a;
    ScenarioConfig b;
    EXPECT_EQ(scenario_digest(a), scenario_digest(b));
    EXPECT_EQ(scenario_digest(a).size(), 16u);
    b.adoption.ad_rate = 0.012;
    EXPECT_NE(scenario_digest(a), scenario_digest(b));
}

TEST(Scenario, ScalarKeys)
{
    EXPECT_TRUE(is_scalar_key("adoption.adoption_fraction"));
    EXPECT_TRUE(is_scalar_key("tariff.ev_strategy"));
    EXPECT_TRUE(is_scalar_key("lot.capacity"));
    EXPECT_FALSE(is_scalar_key("adoption.salary_by_level"));
    EXPECT_FALSE(is_scalar_key("tariff.table.A"));
    EXPECT_FALSE(is_scalar_key("population.stereotype.1"));
    EXPECT_FALSE(is_scalar_key("no.such_key"));
}
