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

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace evsim
{

inline constexpr int kStaffLevels = 7;
inline constexpr int kEmissionsCategories = 5;

/// Parking-permit emissions band, keyed to vehicle g CO2/km.
enum class EmissionsCategory : std::uint8_t
{
    A, ///< up to 120 g/km
    B, ///< 121-150 g/km
    C, ///< 151-165 g/km
    D, ///< 166-200 g/km
    E, ///< over 200 g/km
};

constexpr int index_of(EmissionsCategory c) { return static_cast<int>(c); }
char to_char(EmissionsCategory c);
std::optional<EmissionsCategory> category_from_char(char c);

enum class CommuteState : std::uint8_t
{
    AtHome,
    WayWork,
    AtWork,
    WayHome,
};

std::string_view to_string(CommuteState s);

/// Successor in the daily commute cycle AtHome -> WayWork -> AtWork -> WayHome.
constexpr CommuteState next_state(CommuteState s)
{
    return static_cast<CommuteState>((static_cast<int>(s) + 1) % 4);
}

class Vehicle
{
public:
    static Vehicle conventional(EmissionsCategory category) { return Vehicle(false, category); }
    static Vehicle electric() { return Vehicle(true, EmissionsCategory::A); }

    bool is_electric() const noexcept { return m_electric; }
    /// Emissions band; meaningful for conventional vehicles only.
    EmissionsCategory category() const noexcept { return m_category; }

    friend bool operator==(const Vehicle&, const Vehicle&) = default;

private:
    Vehicle(bool electric, EmissionsCategory category)
        : m_electric(electric)
        , m_category(category)
    {
    }

    bool m_electric;
    EmissionsCategory m_category;
};

/// One commuter.
struct CarOwner
{
    int id = 0;
    int stereotype_id = 0;
    double energy_awareness = 0.0;
    int staff_level = 1;
    Vehicle vehicle = Vehicle::conventional(EmissionsCategory::A);
    double cogency = 0.0;
    CommuteState commute_state = CommuteState::AtHome;
    /// Simulation day of the Conventional -> Electric switch. Set once, never cleared.
    std::optional<int> adopted_at;

    friend bool operator==(const CarOwner&, const CarOwner&) = default;
};

} // namespace evsim
