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

#include "evsim/agent.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace evsim
{

inline constexpr std::int64_t kMinutesPerDay = 1440;

enum class SpaceState : std::uint8_t
{
    Free,
    Occupied,
};

struct ParkingSpace
{
    int id = 0;
    SpaceState state = SpaceState::Free;
    std::optional<int> occupant;

    friend bool operator==(const ParkingSpace&, const ParkingSpace&) = default;
};

/// Fixed set of identical spaces. Requests are served with the lowest-id
/// free space; owner ids must be non-negative.
class ParkingLot
{
public:
    explicit ParkingLot(std::size_t capacity);

    /// Assigns the lowest-id free space, or returns nullopt when the lot is
    /// full (the lot is left unchanged). Throws ProtocolError if the owner
    /// already holds a space.
    std::optional<int> request_space(int owner_id);

    /// Frees the owner's space and returns its id. Throws ProtocolError if
    /// the owner holds none.
    int release_space(int owner_id);

    std::optional<int> space_of(int owner_id) const;

    std::size_t capacity() const noexcept { return m_spaces.size(); }
    std::size_t occupied_count() const noexcept { return m_occupied; }
    std::span<const ParkingSpace> spaces() const noexcept { return m_spaces; }

    /// Full consistency check of spaces, occupants and the owner index.
    /// Throws ProtocolError on the first violation.
    void audit() const;

    friend bool operator==(const ParkingLot& a, const ParkingLot& b) { return a.m_spaces == b.m_spaces; }

private:
    std::vector<ParkingSpace> m_spaces;
    std::vector<std::uint64_t> m_free_bits;
    std::vector<int> m_space_of_owner;
    std::size_t m_occupied = 0;
};

/// Shared daily schedule. Times are minutes after midnight; workdays are
/// indexed Monday = 0 .. Sunday = 6, and simulation day 0 is a Monday.
struct CommuteCalendar
{
    int depart_home_minute = 8 * 60;
    int travel_minutes = 30;
    int depart_work_minute = 17 * 60;
    std::array<bool, 7> workdays{true, true, true, true, true, false, false};

    int arrive_work_minute() const { return depart_home_minute + travel_minutes; }
    int arrive_home_minute() const { return depart_work_minute + travel_minutes; }
    bool is_workday(int day) const { return workdays[static_cast<std::size_t>(day % 7)]; }

    friend bool operator==(const CommuteCalendar&, const CommuteCalendar&) = default;
};

/// Throws ConfigError. Beyond arrival-before-departure, the return trip must
/// finish before the 23:59 end-of-day tick.
void validate(const CommuteCalendar& calendar);

enum class LotAction : std::uint8_t
{
    None,
    RequestSpace,
    ReleaseSpace,
};

struct CommuteEvent
{
    std::int64_t minute = 0; ///< since run start
    int owner_id = 0;
    CommuteState from = CommuteState::AtHome;
    CommuteState to = CommuteState::WayWork;
    LotAction action = LotAction::None;

    friend bool operator==(const CommuteEvent&, const CommuteEvent&) = default;
};

/// The four state-chart transitions of one owner on one day, in time order;
/// empty on non-workdays.
std::vector<CommuteEvent> commute_events(int owner_id, const CommuteCalendar& calendar, int day);

} // namespace evsim
