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

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fr3sim {

enum class Technology { FourG, FiveG, SixG };

// UMa/UMi select the propagation model; UPi is a 6G pico radio that
// propagates as UMi but carries its own power preset.
enum class DeploymentClass { UMa, UMi, UPi };

enum class Strategy { FourG, FourG_FiveG, CoLoc6G_UMa, NonCoLoc6G_UMi, NonCoLoc6G_UPi };

std::string_view to_string(Technology tech);
std::string_view to_string(DeploymentClass cls);
std::string_view to_string(Strategy strategy);

std::optional<Technology> parse_technology(std::string_view text);
std::optional<DeploymentClass> parse_deployment_class(std::string_view text);
std::optional<Strategy> parse_strategy(std::string_view text);

// Reselection priority: higher wins.
constexpr int priority(Technology tech) { return static_cast<int>(tech); }

constexpr bool has_fiveg(Strategy s) { return s != Strategy::FourG; }
constexpr bool has_sixg(Strategy s)
{
    return s == Strategy::CoLoc6G_UMa || s == Strategy::NonCoLoc6G_UMi || s == Strategy::NonCoLoc6G_UPi;
}

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const Vec2&) const = default;
};

inline double distance(Vec2 a, Vec2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

inline constexpr double kPi = 3.14159265358979323846;
inline double deg2rad(double deg) { return deg * kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / kPi; }
inline double db2lin(double db) { return std::pow(10.0, db / 10.0); }
inline double lin2db(double lin) { return 10.0 * std::log10(lin); }
inline double dbm2watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

// Wraps an angle in degrees to (-180, 180].
double wrap_degrees(double deg);

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// SplitMix64. Seeds in one multiply-xorshift, which matters because one
// independent stream is opened per UE-cell link and per faded PRB.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    result_type operator()()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// Order-sensitive hash of a key tuple into a stream seed.
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> keys);

// Stable tags for independent random streams.
enum class StreamTag : std::uint64_t {
    Topology4G = 1,
    Topology5G = 2,
    Topology6G = 3,
    Load = 4,
    Hotspots = 5,
    Users = 6,
    Links = 7,
    Fading = 8,
    Scheduler = 9,
};

inline std::uint64_t tag(StreamTag t) { return static_cast<std::uint64_t>(t); }

} // namespace fr3sim
