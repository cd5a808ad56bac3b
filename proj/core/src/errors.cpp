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

namespace evsim
{

namespace
{
std::string config_message(const std::string& key, const std::string& message, std::optional<int> line)
{
    std::string out;
    if (line) {
        out += "line " + std::to_string(*line) + ": ";
    }
    if (!key.empty()) {
        out += "'" + key + "': ";
    }
    return out + message;
}

std::string protocol_message(const std::string& message, std::optional<std::int64_t> minute,
                             std::optional<int> agent)
{
    std::string out = message;
    if (minute) {
        out += " (t=" + std::to_string(*minute) + " min, day " + std::to_string(*minute / 1440) + ")";
    }
    if (agent) {
        out += " [agent " + std::to_string(*agent) + "]";
    }
    return out;
}
} // namespace

ConfigError::ConfigError(std::string key, const std::string& message, std::optional<int> line)
    : std::runtime_error(config_message(key, message, line))
    , m_key(std::move(key))
    , m_detail(message)
    , m_line(line)
{
}

ProtocolError::ProtocolError(const std::string& message, std::optional<std::int64_t> minute,
                             std::optional<int> agent)
    : std::logic_error(protocol_message(message, minute, agent))
    , m_detail(message)
    , m_minute(minute)
    , m_agent(agent)
{
}

} // namespace evsim
