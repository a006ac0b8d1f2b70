// SPDX-License-Identifier: Apache-2.0
//
// fr3sim: system-level simulator for multi-layer 4G/5G/6G networks
// Copyright (C) 2026 The fr3sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "fr3sim/scenario.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace fr3sim {

// Generator settings, optionally with a fully explicit network.
struct ScenarioFile {
    ScenarioConfig config;
    std::optional<Topology> topology;
};

// YAML scenario file. Every key is optional; missing keys keep their
// defaults and unknown keys are rejected. Errors name the field and line.
ScenarioFile load_scenario(const std::string& path);
ScenarioFile parse_scenario(const std::string& text, const std::string& source = "<string>");

void save_scenario(std::ostream& os, const ScenarioConfig& config, const Topology* topology = nullptr);

} // namespace fr3sim
