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

#include "evsim/errors.hpp"
#include "evsim/rng.hpp"
#include "evsim/format.hpp"
#include "evsim/agent.hpp"
#include "evsim/population.hpp"
#include "evsim/mobility.hpp"
#include "evsim/tariff.hpp"
#include "evsim/adoption.hpp"
#include "evsim/validation.hpp"
#include "evsim/scenario.hpp"
#include "evsim/engine.hpp"
#include "evsim/experiment.hpp"
