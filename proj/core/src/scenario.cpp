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
#include "evsim/scenario.hpp"
#include "evsim/errors.hpp"
#include "evsim/format.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace evsim
{

namespace
{

constexpr std::string_view kStereotypePrefix = "population.stereotype.";
constexpr std::array<std::string_view, 7> kWeekdays{"mon", "tue", "wed", "thu", "fri", "sat", "sun"};

[[noreturn]] void bad_value(std::string_view key, const std::string& what)
{
    throw ConfigError(std::string(key), what);
}

double as_double(std::string_view key, std::string_view value)
{
    const auto v = parse_double(value);
    if (!v) {
        bad_value(key, "expected a number, got '" + std::string(value) + "'");
    }
    return *v;
}

long long as_integer(std::string_view key, std::string_view value)
{
    const auto v = parse_integer(value);
    if (!v) {
        bad_value(key, "expected an integer, got '" + std::string(value) + "'");
    }
    return *v;
}

std::size_t as_count(std::string_view key, std::string_view value)
{
    const auto v = as_integer(key, value);
    if (v < 0) {
        bad_value(key, "must be non-negative");
    }
    return static_cast<std::size_t>(v);
}

template <std::size_t N>
std::array<double, N> as_array(std::string_view key, std::string_view value)
{
    const auto values = parse_double_list(value);
    if (!values || values->size() != N) {
        bad_value(key, "expected " + std::to_string(N) + " comma-separated numbers");
    }
    std::array<double, N> out{};
    std::copy(values->begin(), values->end(), out.begin());
    return out;
}

int as_time_of_day(std::string_view key, std::string_view value)
{
    const auto parts = split(value, ':');
    if (parts.size() != 2 || parts[0].empty() || parts[1].size() != 2) {
        bad_value(key, "expected HH:MM");
    }
    const auto h = parse_integer(parts[0]);
    const auto m = parse_integer(parts[1]);
    if (!h || !m || *h < 0 || *h > 23 || *m < 0 || *m > 59) {
        bad_value(key, "expected HH:MM with hours 0-23 and minutes 0-59");
    }
    return static_cast<int>(*h * 60 + *m);
}

std::string format_time_of_day(int minute)
{
    char buffer[16];
    std::snprintf(buffer, sizeof(buffer), "%02d:%02d", minute / 60, minute % 60);
    return buffer;
}

std::array<bool, 7> as_workdays(std::string_view key, std::string_view value)
{
    std::array<bool, 7> days{};
    if (trim(value).empty()) {
        return days;
    }
    for (auto token : split(value, ',')) {
        const auto it = std::find(kWeekdays.begin(), kWeekdays.end(), token);
        if (it == kWeekdays.end()) {
            bad_value(key, "unknown weekday '" + std::string(token) + "' (use mon..sun)");
        }
        days[static_cast<std::size_t>(it - kWeekdays.begin())] = true;
    }
    return days;
}

std::string format_workdays(const std::array<bool, 7>& days)
{
    std::string out;
    for (std::size_t i = 0; i < days.size(); ++i) {
        if (days[i]) {
            if (!out.empty()) {
                out += ',';
            }
            out += kWeekdays[i];
        }
    }
    return out;
}

std::string format_cogency(const PopulationSpec& spec)
{
    if (!spec.cogency_range) {
        return "default";
    }
    return "uniform:" + format_double(spec.cogency_range->first) + "," + format_double(spec.cogency_range->second);
}

void apply_cogency(PopulationSpec& spec, std::string_view key, std::string_view value)
{
    value = trim(value);
    if (value == "default") {
        spec.cogency_range.reset();
        return;
    }
    constexpr std::string_view prefix = "uniform:";
    if (value.starts_with(prefix)) {
        const auto range = as_array<2>(key, value.substr(prefix.size()));
        spec.cogency_range = std::make_pair(range[0], range[1]);
        return;
    }
    bad_value(key, "expected 'default' or 'uniform:<lo>,<hi>'");
}

void apply_stereotype(PopulationSpec& spec, std::string_view key, std::string_view value)
{
    const auto id = parse_integer(key.substr(kStereotypePrefix.size()));
    if (!id || *id < 1 || *id > 1000) {
        throw ConfigError(std::string(key), "stereotype id must be a positive integer");
    }
    const auto v = as_array<4>(key, value);
    StereotypeSpec s{static_cast<int>(*id), v[0], v[1], v[2], v[3]};
    auto it = std::find_if(spec.stereotypes.begin(), spec.stereotypes.end(),
                           [&](const StereotypeSpec& e) { return e.id == s.id; });
    if (it != spec.stereotypes.end()) {
        *it = s;
    }
    else {
        spec.stereotypes.push_back(s);
        std::sort(spec.stereotypes.begin(), spec.stereotypes.end(),
                  [](const StereotypeSpec& a, const StereotypeSpec& b) { return a.id < b.id; });
    }
}

using Emitter = std::map<std::string, std::string>;

Emitter emit(const ScenarioConfig& c)
{
    Emitter out;
    const auto& a = c.adoption;
    out["adoption.ad_rate"] = format_double(a.ad_rate);
    out["adoption.adoption_fraction"] = format_double(a.adoption_fraction);
    out["adoption.awareness_threshold"] = format_double(a.awareness_threshold);
    out["adoption.contact_rate"] = format_double(a.contact_rate);
    out["adoption.conventional_price"] = format_double(a.conventional_price);
    out["adoption.ev_price"] = format_double(a.ev_price);
    out["adoption.incentive_beta"] = format_double(a.incentive_beta);
    out["adoption.salary_by_level"] = format_double_list(a.salary_by_level);
    out["adoption.subsidy_cap"] = format_double(a.subsidy_cap);
    out["adoption.subsidy_fraction"] = format_double(a.subsidy_fraction);

    out["calendar.depart_home"] = format_time_of_day(c.calendar.depart_home_minute);
    out["calendar.depart_work"] = format_time_of_day(c.calendar.depart_work_minute);
    out["calendar.travel_minutes"] = std::to_string(c.calendar.travel_minutes);
    out["calendar.workdays"] = format_workdays(c.calendar.workdays);

    out["energy.ev_intensity"] = format_double(c.energy.ev_intensity);
    out["energy.intensity_by_category"] = format_double_list(c.energy.intensity_by_category);
    out["energy.round_trip_km"] = format_double(c.energy.round_trip_km);

    out["lot.capacity"] = std::to_string(c.lot_capacity);

    out["population.cogency"] = format_cogency(c.population);
    out["population.fleet_category_weights"] = format_double_list(c.population.fleet_category_weights);
    out["population.n_agents"] = std::to_string(c.population.n_agents);
    out["population.staff_level_weights"] = format_double_list(c.population.staff_level_weights);
    for (const auto& s : c.population.stereotypes) {
        const std::array<double, 4> v{s.share, s.ea_low, s.ea_high, s.buy_probability};
        out[std::string(kStereotypePrefix) + std::to_string(s.id)] = format_double_list(v);
    }

    out["run.base_seed"] = std::to_string(c.base_seed);
    out["run.horizon_days"] = std::to_string(c.horizon_days);
    out["run.replications"] = std::to_string(c.replications);

    out["tariff.accrual_workdays_per_year"] = std::to_string(c.tariff.accrual_workdays_per_year);
    out["tariff.ev_strategy"] = format_ev_strategy(c.tariff.ev_strategy);
    for (int row = 0; row < kEmissionsCategories; ++row) {
        out[std::string("tariff.table.") + to_char(static_cast<EmissionsCategory>(row))] =
            format_double_list(c.tariff.table[static_cast<std::size_t>(row)]);
    }
    return out;
}

bool is_stereotype_key(std::string_view key)
{
    return key.starts_with(kStereotypePrefix) && key.size() > kStereotypePrefix.size();
}

} // namespace

const std::vector<std::string>& scenario_keys()
{
    static const std::vector<std::string> keys = [] {
        ScenarioConfig c;
        c.population.stereotypes.clear();
        std::vector<std::string> out;
        for (const auto& [k, v] : emit(c)) {
            out.push_back(k);
        }
        return out;
    }();
    return keys;
}

bool is_scalar_key(std::string_view key)
{
    static const std::vector<std::string_view> vector_keys{
        "adoption.salary_by_level",     "calendar.workdays",
        "energy.intensity_by_category", "population.fleet_category_weights",
        "population.staff_level_weights", "population.cogency",
    };
    if (is_stereotype_key(key) || key.starts_with("tariff.table.")) {
        return false;
    }
    if (std::find(vector_keys.begin(), vector_keys.end(), key) != vector_keys.end()) {
        return false;
    }
    const auto& keys = scenario_keys();
    return std::find(keys.begin(), keys.end(), key) != keys.end();
}

void apply_setting(ScenarioConfig& c, std::string_view key, std::string_view value)
{
    value = trim(value);
    auto& a = c.adoption;
    if (key == "adoption.ad_rate") {
        a.ad_rate = as_double(key, value);
    }
    else if (key == "adoption.adoption_fraction") {
        a.adoption_fraction = as_double(key, value);
    }
    else if (key == "adoption.awareness_threshold") {
        a.awareness_threshold = as_double(key, value);
    }
    else if (key == "adoption.contact_rate") {
        a.contact_rate = as_double(key, value);
    }
    else if (key == "adoption.conventional_price") {
        a.conventional_price = as_double(key, value);
    }
    else if (key == "adoption.ev_price") {
        a.ev_price = as_double(key, value);
    }
    else if (key == "adoption.incentive_beta") {
        a.incentive_beta = as_double(key, value);
    }
    else if (key == "adoption.salary_by_level") {
        a.salary_by_level = as_array<kStaffLevels>(key, value);
    }
    else if (key == "adoption.subsidy_cap") {
        a.subsidy_cap = as_double(key, value);
    }
    else if (key == "adoption.subsidy_fraction") {
        a.subsidy_fraction = as_double(key, value);
    }
    else if (key == "calendar.depart_home") {
        c.calendar.depart_home_minute = as_time_of_day(key, value);
    }
    else if (key == "calendar.depart_work") {
        c.calendar.depart_work_minute = as_time_of_day(key, value);
    }
    else if (key == "calendar.travel_minutes") {
        c.calendar.travel_minutes = static_cast<int>(as_integer(key, value));
    }
    else if (key == "calendar.workdays") {
        c.calendar.workdays = as_workdays(key, value);
    }
    else if (key == "energy.ev_intensity") {
        c.energy.ev_intensity = as_double(key, value);
    }
    else if (key == "energy.intensity_by_category") {
        c.energy.intensity_by_category = as_array<kEmissionsCategories>(key, value);
    }
    else if (key == "energy.round_trip_km") {
        c.energy.round_trip_km = as_double(key, value);
    }
    else if (key == "lot.capacity") {
        c.lot_capacity = as_count(key, value);
    }
    else if (key == "population.cogency") {
        apply_cogency(c.population, key, value);
    }
    else if (key == "population.fleet_category_weights") {
        c.population.fleet_category_weights = as_array<kEmissionsCategories>(key, value);
    }
    else if (key == "population.n_agents") {
        c.population.n_agents = as_count(key, value);
    }
    else if (key == "population.staff_level_weights") {
        c.population.staff_level_weights = as_array<kStaffLevels>(key, value);
    }
    else if (is_stereotype_key(key)) {
        apply_stereotype(c.population, key, value);
    }
    else if (key == "run.base_seed") {
        const auto v = parse_unsigned(value);
        if (!v) {
            bad_value(key, "expected an unsigned 64-bit integer");
        }
        c.base_seed = *v;
    }
    else if (key == "run.horizon_days") {
        const auto v = as_integer(key, value);
        if (v < 0 || v > 1'000'000) {
            bad_value(key, "must lie in [0, 1000000]");
        }
        c.horizon_days = static_cast<int>(v);
    }
    else if (key == "run.replications") {
        c.replications = as_count(key, value);
    }
    else if (key == "tariff.accrual_workdays_per_year") {
        c.tariff.accrual_workdays_per_year = static_cast<int>(as_integer(key, value));
    }
    else if (key == "tariff.ev_strategy") {
        c.tariff.ev_strategy = parse_ev_strategy(value);
    }
    else if (key.starts_with("tariff.table.") && key.size() == std::string_view("tariff.table.A").size() &&
             category_from_char(key.back()) && std::isupper(static_cast<unsigned char>(key.back()))) {
        const auto row = index_of(*category_from_char(key.back()));
        c.tariff.table[static_cast<std::size_t>(row)] = as_array<kStaffLevels>(key, value);
    }
    else {
        throw ConfigError(std::string(key), "unknown key");
    }
}

void validate(const ScenarioConfig& config)
{
    validate(config.population);
    validate(config.calendar);
    validate(config.tariff);
    validate(config.energy);
    validate(config.adoption);
    if (config.replications < 1) {
        throw ConfigError("run.replications", "must be at least 1");
    }
    if (config.horizon_days < 0) {
        throw ConfigError("run.horizon_days", "must be non-negative");
    }
    if (config.population.n_agents > 10'000'000) {
        throw ConfigError("population.n_agents", "must not exceed 10000000");
    }
}

ScenarioConfig parse_scenario(std::string_view text)
{
    std::map<std::string, std::pair<std::string, int>, std::less<>> entries;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("", "expected 'key = value'", line_no);
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty()) {
            throw ConfigError("", "missing key", line_no);
        }
        if (entries.contains(key)) {
            throw ConfigError(key, "duplicate key (first set on line " + std::to_string(entries[key].second) + ")",
                              line_no);
        }
        entries.emplace(key, std::make_pair(value, line_no));
    }

    ScenarioConfig config;
    const bool replaces_stereotypes = std::any_of(entries.begin(), entries.end(),
                                                  [](const auto& e) { return is_stereotype_key(e.first); });
    if (replaces_stereotypes) {
        config.population.stereotypes.clear();
    }
    for (const auto& [key, entry] : entries) {
        try {
            apply_setting(config, key, entry.first);
        }
        catch (const ConfigError& e) {
            throw ConfigError(key, e.detail(), entry.second);
        }
    }
    try {
        validate(config);
    }
    catch (const ConfigError& e) {
        std::optional<int> line;
        if (auto it = entries.find(e.key()); it != entries.end()) {
            line = it->second.second;
        }
        throw ConfigError(e.key(), e.detail(), line);
    }
    return config;
}

ScenarioConfig load_scenario_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("", "cannot open scenario file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

std::string serialize_scenario(const ScenarioConfig& config)
{
    std::string out;
    for (const auto& [key, value] : emit(config)) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    }
    return out;
}

std::string scenario_digest(const ScenarioConfig& config)
{
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char ch : serialize_scenario(config)) {
        hash ^= ch;
        hash *= 0x100000001b3ULL;
    }
    char buffer[17];
    std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
    return buffer;
}

} // namespace evsim
