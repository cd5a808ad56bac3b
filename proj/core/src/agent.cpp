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
#include "evsim/agent.hpp"

namespace evsim
{

char to_char(EmissionsCategory c)
{
    return static_cast<char>('A' + index_of(c));
}

std::optional<EmissionsCategory> category_from_char(char c)
{
    if (c >= 'a' && c <= 'e') {
        c = static_cast<char>(c - 'a' + 'A');
    }
    if (c < 'A' || c > 'E') {
        return std::nullopt;
    }
    return static_cast<EmissionsCategory>(c - 'A');
}

std::string_view to_string(CommuteState s)
{
    switch (s) {
    case CommuteState::AtHome:
        return "AtHome";
    case CommuteState::WayWork:
        return "WayWork";
    case CommuteState::AtWork:
        return "AtWork";
    case CommuteState::WayHome:
        return "WayHome";
    }
    return "?";
}

} // namespace evsim
