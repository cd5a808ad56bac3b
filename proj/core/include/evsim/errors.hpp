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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace evsim
{

/// Invalid scenario or module configuration. Carries the offending key and,
/// when parsed from a file, the 1-based line number.
class ConfigError : public std::runtime_error
{
public:
    ConfigError(std::string key, const std::string& message, std::optional<int> line = std::nullopt);

    const std::string& key() const noexcept { return m_key; }
    std::optional<int> line() const noexcept { return m_line; }
    /// The message without key and line decoration.
    const std::string& detail() const noexcept { return m_detail; }

private:
    std::string m_key;
    std::string m_detail;
    std::optional<int> m_line;
};

/// A state-chart message was delivered in a state that cannot accept it.
/// This is always a simulator bug and aborts the run.
class ProtocolError : public std::logic_error
{
public:
    ProtocolError(const std::string& message, std::optional<std::int64_t> minute = std::nullopt,
                  std::optional<int> agent = std::nullopt);

    std::optional<std::int64_t> minute() const noexcept { return m_minute; }
    std::optional<int> agent() const noexcept { return m_agent; }
    const std::string& detail() const noexcept { return m_detail; }

private:
    std::string m_detail;
    std::optional<std::int64_t> m_minute;
    std::optional<int> m_agent;
};

/// Argument outside the domain of a lookup or comparison.
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

} // namespace evsim
