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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evsim
{

std::string_view trim(std::string_view text);

std::vector<std::string_view> split(std::string_view text, char separator);

/// Whole-token parse; rejects trailing garbage, NaN and infinities.
std::optional<double> parse_double(std::string_view text);
std::optional<long long> parse_integer(std::string_view text);
std::optional<unsigned long long> parse_unsigned(std::string_view text);
std::optional<std::vector<double>> parse_double_list(std::string_view text);

/// Shortest representation that round-trips to the same double.
std::string format_double(double value);
std::string format_double_list(std::span<const double> values);

} // namespace evsim
