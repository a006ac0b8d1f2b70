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

#include "fr3sim/antenna.hpp"
#include "fr3sim/common.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace fr3sim {

struct Site {
    int id = 0;
    Vec2 position;
    double height = 25.0;
    Technology layer = Technology::FourG;
    bool operator==(const Site&) const = default;
};

// One radio sector on one carrier.
struct Cell {
    int id = 0;
    int site_id = 0;
    int sector = 0;
    double azimuth_deg = 0.0; // counter-clockwise from +x, [0, 360)
    Technology technology = Technology::FourG;
    double carrier_ghz = 2.0;
    double bandwidth_mhz = 20.0;
    int n_prb = 100;
    double scs_khz = 15.0;
    int n_trx = 2;
    double tx_power_dbm = 46.0;
    ArrayGeometry array;
    int n_ssb_beams = 1;
    int n_csirs_beams = 2;
    DeploymentClass deployment_class = DeploymentClass::UMa;
    Vec2 position; // copy of the site position
    double height = 25.0;

    double prb_bandwidth_hz() const { return 12.0 * scs_khz * 1e3; }
    // Cells interfere only on an identical carrier.
    bool shares_carrier(const Cell& o) const
    {
        return technology == o.technology && carrier_ghz == o.carrier_ghz;
    }
    bool operator==(const Cell&) const = default;
};

// Measured per-cell traffic of the legacy 4G/5G network; UEs are dropped in
// these areas whether or not the cell is switched on by the strategy.
struct TrafficArea {
    int cell_id = 0;
    int site_id = 0;
    Technology technology = Technology::FourG;
    Vec2 site_position;
    double azimuth_deg = 0.0;
    int n_prb = 100;
    int baseline_ues = 0;
    int prb_used = 0;
    bool operator==(const TrafficArea&) const = default;
};

struct Hotspot {
    int id = 0;
    Vec2 center;
    int cell_id = 0; // traffic area it was seeded in
    bool operator==(const Hotspot&) const = default;
};

struct UserTerminal {
    int id = 0;
    Vec2 position;
    double height = 1.5;
    bool indoor = false;
    int demand_prb = 1;
    int home_cell = -1;
    std::optional<int> hotspot_id;
    bool operator==(const UserTerminal&) const = default;
};

struct FourGLayerConfig {
    int sites = 47;
    int cells = 204;
    int cells_10mhz = 20;
    std::vector<double> carriers_ghz{1.815, 1.89, 2.02, 2.33, 2.62};
    double tx_min_dbm = 40.0;
    double tx_median_dbm = 45.9;
    double tx_max_dbm = 52.0;
    std::vector<std::pair<int, int>> trx_mix{{2, 50}, {4, 100}, {8, 40}, {64, 14}}; // (n_trx, cells)
    double height_min_m = 20.0;
    double height_max_m = 35.0;
    double min_site_distance_m = 150.0;
    bool operator==(const FourGLayerConfig&) const = default;
};

struct FiveGLayerConfig {
    int sites = 15;
    int sectors = 3;
    double carrier_ghz = 2.703;
    double bandwidth_mhz = 100.0;
    int n_prb = 273;
    int n_trx = 64;
    int ssb_beams = 8;
    int csirs_beams = 64;
    double tx_min_dbm = 51.3;
    double tx_mean_dbm = 53.2;
    double tx_max_dbm = 54.7;
    double height_min_m = 20.0;
    double height_max_m = 35.0;
    double min_site_distance_m = 150.0;
    double min_distance_to_4g_m = 50.0;
    bool operator==(const FiveGLayerConfig&) const = default;
};

struct SixGLayerConfig {
    int cells = 45;
    double carrier_ghz = 10.0;
    int n_prb = 273;
    double tx_macro_dbm = 55.0; // UMa and UMi radios
    double tx_pico_dbm = 52.0;  // UPi radios
    double tx_boost_400mhz_db = 3.0;
    double height_umi_m = 10.0;
    double height_upi_m = 6.0;
    double setback_m = 30.0;
    double min_site_distance_m = 80.0;
    bool operator==(const SixGLayerConfig&) const = default;
};

struct UeConfig {
    int baseline_count = 3604;
    double indoor_probability = 0.8;
    double height_m = 1.5;
    double count_log_sigma = 0.6;     // spread of per-cell UE counts
    double prb_usage_median = 0.8;    // fraction of PRBs in use at peak hour
    double prb_usage_log_sigma = 0.5;
    double prb_usage_load_exponent = 1.0; // usage grows as (ues / mean ues)^exponent
    bool operator==(const UeConfig&) const = default;
};

struct HotspotConfig {
    int count = 15;
    int ues_per_hotspot = 40;
    double radius_m = 40.0;
    double min_separation_m = 80.0;
    int max_attempts = 20000;
    bool operator==(const HotspotConfig&) const = default;
};

struct ScenarioConfig {
    double area_km2 = 6.2;
    double aspect_ratio = 1.0; // width / height
    std::uint64_t seed = 1;
    Strategy strategy = Strategy::FourG_FiveG;
    int sixg_bandwidth_mhz = 200;
    int sixg_trx = 128;
    double downtilt_uma_deg = 6.0;
    double downtilt_umi_deg = 0.0;
    FourGLayerConfig fourg;
    FiveGLayerConfig fiveg;
    SixGLayerConfig sixg;
    UeConfig ues;
    HotspotConfig hotspots;

    bool operator==(const ScenarioConfig&) const = default;
};

// Throws ConfigError naming the offending field.
void validate(const ScenarioConfig& config);

struct Topology {
    double width_m = 0.0;
    double height_m = 0.0;
    std::vector<Site> sites;
    std::vector<Cell> cells; // deployed radios
    std::vector<TrafficArea> traffic;
    std::vector<Hotspot> hotspots;
    std::optional<std::vector<UserTerminal>> fixed_ues;

    const Site& site(int id) const;
    const Cell& cell(int id) const;
    bool contains(Vec2 p) const { return p.x >= 0.0 && p.y >= 0.0 && p.x <= width_m && p.y <= height_m; }
    bool operator==(const Topology&) const = default;
};

// Largest subcarrier spacing (15 kHz * 2^mu) that fits n_prb into the band.
double numerology_scs_khz(double bandwidth_mhz, int n_prb);

// Array layout implied by a TRX count (one element per TRX port).
ArrayGeometry array_for(Technology tech, int n_trx, double downtilt_deg);

// Cell-level invariants; throws ConfigError.
void validate(const Cell& cell, const Site& site);

// Uniform sampling inside coverage regions: the Voronoi cell of a traffic
// area's site (within its layer), split between the site's sectors by
// nearest azimuth, clipped to the service area.
class CoverageIndex {
public:
    explicit CoverageIndex(const Topology& topology);

    bool in_region(const TrafficArea& area, Vec2 p) const;

    // True when the region misses every grid probe.
    bool empty(const TrafficArea& area) const { return rasters_[slot(area)].cells.empty(); }

    template <typename Rng>
    Vec2 sample(const TrafficArea& area, Rng& rng) const;

private:
    struct Raster {
        std::vector<int> cells; // grid indices touching the region
    };
    const Topology* topology_;
    double step_ = 10.0;
    int nx_ = 0;
    int ny_ = 0;
    std::vector<Raster> rasters_; // parallel to topology.traffic
    std::vector<int> area_slot_;  // cell id -> index in topology.traffic
    std::vector<std::vector<int>> sharing_; // areas with the same site and azimuth
    int slot(const TrafficArea& area) const;
    int owner(Technology layer, Vec2 p) const; // traffic index or -1
};

Topology generate_topology(const ScenarioConfig& config);

// Baseline UEs per traffic area plus hotspot UEs; independent of strategy.
std::vector<UserTerminal> drop_users(const ScenarioConfig& config, const Topology& topology,
                                     const CoverageIndex& coverage, std::uint64_t snapshot_seed);

} // namespace fr3sim

#include "fr3sim/scenario_impl.hpp"
