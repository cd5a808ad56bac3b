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
#include "evsim/mobility.hpp"
#include "evsim/errors.hpp"

#include <bit>
#include <string>

namespace evsim
{

ParkingLot::ParkingLot(std::size_t capacity)
    : m_spaces(capacity)
    , m_free_bits((capacity + 63) / 64, ~std::uint64_t{0})
{
    for (std::size_t i = 0; i < capacity; ++i) {
        m_spaces[i].id = static_cast<int>(i);
    }
    if (capacity % 64 != 0) {
        m_free_bits.back() = (std::uint64_t{1} << (capacity % 64)) - 1;
    }
}

std::optional<int> ParkingLot::request_space(int owner_id)
{
    if (owner_id < 0) {
        throw ProtocolError("request_space: negative owner id", std::nullopt, owner_id);
    }
    if (space_of(owner_id)) {
        throw ProtocolError("request_space: owner already holds space " + std::to_string(*space_of(owner_id)),
                            std::nullopt, owner_id);
    }
    for (std::size_t w = 0; w < m_free_bits.size(); ++w) {
        if (m_free_bits[w] == 0) {
            continue;
        }
        const auto bit = static_cast<std::size_t>(std::countr_zero(m_free_bits[w]));
        const std::size_t id = w * 64 + bit;
        m_free_bits[w] &= ~(std::uint64_t{1} << bit);
        m_spaces[id].state = SpaceState::Occupied;
        m_spaces[id].occupant = owner_id;
        if (static_cast<std::size_t>(owner_id) >= m_space_of_owner.size()) {
            m_space_of_owner.resize(static_cast<std::size_t>(owner_id) + 1, -1);
        }
        m_space_of_owner[static_cast<std::size_t>(owner_id)] = static_cast<int>(id);
        ++m_occupied;
        return static_cast<int>(id);
    }
    return std::nullopt;
}

int ParkingLot::release_space(int owner_id)
{
    const auto held = space_of(owner_id);
    if (!held) {
        throw ProtocolError("release_space: owner holds no space", std::nullopt, owner_id);
    }
    const auto id = static_cast<std::size_t>(*held);
    m_spaces[id].state = SpaceState::Free;
    m_spaces[id].occupant.reset();
    m_free_bits[id / 64] |= std::uint64_t{1} << (id % 64);
    m_space_of_owner[static_cast<std::size_t>(owner_id)] = -1;
    --m_occupied;
    return *held;
}

std::optional<int> ParkingLot::space_of(int owner_id) const
{
    if (owner_id < 0 || static_cast<std::size_t>(owner_id) >= m_space_of_owner.size()) {
        return std::nullopt;
    }
    const int id = m_space_of_owner[static_cast<std::size_t>(owner_id)];
    if (id < 0) {
        return std::nullopt;
    }
    return id;
}

void ParkingLot::audit() const
{
    std::size_t occupied = 0;
    std::vector<bool> seen(m_space_of_owner.size(), false);
    for (const auto& space : m_spaces) {
        const auto id = static_cast<std::size_t>(space.id);
        const bool free_bit = (m_free_bits[id / 64] >> (id % 64)) & 1U;
        if ((space.state == SpaceState::Occupied) != space.occupant.has_value()) {
            throw ProtocolError("audit: space " + std::to_string(space.id) + " state/occupant mismatch");
        }
        if (free_bit != (space.state == SpaceState::Free)) {
            throw ProtocolError("audit: space " + std::to_string(space.id) + " free index out of sync");
        }
        if (!space.occupant) {
            continue;
        }
        ++occupied;
        const int owner = *space.occupant;
        if (owner < 0 || static_cast<std::size_t>(owner) >= seen.size() || space_of(owner) != space.id) {
            throw ProtocolError("audit: space " + std::to_string(space.id) + " occupant not indexed", std::nullopt,
                                owner);
        }
        if (seen[static_cast<std::size_t>(owner)]) {
            throw ProtocolError("audit: owner holds two spaces", std::nullopt, owner);
        }
        seen[static_cast<std::size_t>(owner)] = true;
    }
    if (occupied != m_occupied) {
        throw ProtocolError("audit: occupied counter out of sync");
    }
    for (std::size_t owner = 0; owner < m_space_of_owner.size(); ++owner) {
        if (m_space_of_owner[owner] >= 0 && !seen[owner]) {
            throw ProtocolError("audit: owner index points at a space it does not occupy", std::nullopt,
                                static_cast<int>(owner));
        }
    }
}

void validate(const CommuteCalendar& calendar)
{
    if (calendar.depart_home_minute < 0 || calendar.depart_home_minute >= kMinutesPerDay) {
        throw ConfigError("calendar.depart_home", "must be a time of day in [00:00, 23:59]");
    }
    if (calendar.depart_work_minute < 0 || calendar.depart_work_minute >= kMinutesPerDay) {
        throw ConfigError("calendar.depart_work", "must be a time of day in [00:00, 23:59]");
    }
    if (calendar.travel_minutes <= 0) {
        throw ConfigError("calendar.travel_minutes", "must be positive");
    }
    if (calendar.arrive_work_minute() >= calendar.depart_work_minute) {
        throw ConfigError("calendar.depart_work", "must be later than depart_home + travel_minutes");
    }
    if (calendar.arrive_home_minute() >= kMinutesPerDay - 1) {
        throw ConfigError("calendar.travel_minutes", "return trip must end before 23:59");
    }
}

std::vector<CommuteEvent> commute_events(int owner_id, const CommuteCalendar& calendar, int day)
{
    if (!calendar.is_workday(day)) {
        return {};
    }
    const std::int64_t base = static_cast<std::int64_t>(day) * kMinutesPerDay;
    return {
        {base + calendar.depart_home_minute, owner_id, CommuteState::AtHome, CommuteState::WayWork, LotAction::None},
        {base + calendar.arrive_work_minute(), owner_id, CommuteState::WayWork, CommuteState::AtWork,
         LotAction::RequestSpace},
        {base + calendar.depart_work_minute, owner_id, CommuteState::AtWork, CommuteState::WayHome,
         LotAction::ReleaseSpace},
        {base + calendar.arrive_home_minute(), owner_id, CommuteState::WayHome, CommuteState::AtHome,
         LotAction::None},
    };
}

} // namespace evsim
