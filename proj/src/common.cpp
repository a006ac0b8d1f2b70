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

#include "fr3sim/common.hpp"

#include <array>
#include <utility>

namespace fr3sim {

namespace {

constexpr std::array<std::pair<Technology, std::string_view>, 3> kTechNames{{
    {Technology::FourG, "4G"},
    {Technology::FiveG, "5G"},
    {Technology::SixG, "6G"},
}};

constexpr std::array<std::pair<DeploymentClass, std::string_view>, 3> kClassNames{{
    {DeploymentClass::UMa, "UMa"},
    {DeploymentClass::UMi, "UMi"},
    {DeploymentClass::UPi, "UPi"},
}};

constexpr std::array<std::pair<Strategy, std::string_view>, 5> kStrategyNames{{
    {Strategy::FourG, "FourG"},
    {Strategy::FourG_FiveG, "FourG_FiveG"},
    {Strategy::CoLoc6G_UMa, "CoLoc6G_UMa"},
    {Strategy::NonCoLoc6G_UMi, "NonCoLoc6G_UMi"},
    {Strategy::NonCoLoc6G_UPi, "NonCoLoc6G_UPi"},
}};

template <typename E, std::size_t N>
std::string_view name_of(const std::array<std::pair<E, std::string_view>, N>& table, E value)
{
    for (const auto& [e, name] : table)
        if (e == value)
            return name;
    return "?";
}

template <typename E, std::size_t N>
std::optional<E> value_of(const std::array<std::pair<E, std::string_view>, N>& table, std::string_view text)
{
    for (const auto& [e, name] : table)
        if (name == text)
            return e;
    return std::nullopt;
}

} // namespace

std::string_view to_string(Technology tech) { return name_of(kTechNames, tech); }
std::string_view to_string(DeploymentClass cls) { return name_of(kClassNames, cls); }
std::string_view to_string(Strategy strategy) { return name_of(kStrategyNames, strategy); }

std::optional<Technology> parse_technology(std::string_view text) { return value_of(kTechNames, text); }
std::optional<DeploymentClass> parse_deployment_class(std::string_view text) { return value_of(kClassNames, text); }
std::optional<Strategy> parse_strategy(std::string_view text) { return value_of(kStrategyNames, text); }

double wrap_degrees(double deg)
{
    double w = std::fmod(deg, 360.0);
    if (w <= -180.0)
        w += 360.0;
    else if (w > 180.0)
        w -= 360.0;
    return w;
}

std::uint64_t derive_seed(std::initializer_list<std::uint64_t> keys)
{
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    for (std::uint64_t k : keys) {
        SplitMix64 mix(h ^ (k + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
        h = mix();
    }
    return h;
}

} // namespace fr3sim
