// Copyright 2026 The uavnoma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UAVNOMA_UAVNOMA_HPP
#define UAVNOMA_UAVNOMA_HPP

// Core library. File I/O (config_io.hpp, report_io.hpp) is kept separate
// because it pulls in Boost.program_options and nlohmann/json.

#include "uavnoma/channel.hpp"
#include "uavnoma/experiment.hpp"
#include "uavnoma/parallel.hpp"
#include "uavnoma/placement.hpp"
#include "uavnoma/power_control.hpp"
#include "uavnoma/rate_engine.hpp"
#include "uavnoma/rng.hpp"
#include "uavnoma/scenario.hpp"
#include "uavnoma/types.hpp"

#endif  // UAVNOMA_UAVNOMA_HPP
