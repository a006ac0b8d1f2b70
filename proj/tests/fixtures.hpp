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

#include "fr3sim/engine.hpp"
#include "fr3sim/scenario_io.hpp"

#include <random>
#include <string>

namespace fr3sim::testing {

// Three co-carrier 5G cells and ten fixed UEs with overlapping grants.
inline std::string three_cell_text(double power_offset_db = 0.0)
{
    const std::string p = std::to_string(53.0 + power_offset_db);
    return R"(seed: 21
strategy: FourG_FiveG
topology:
  width_m: 1100
  height_m: 800
  sites:
    - {id: 0, x: 300, y: 400, height: 25, layer: 5G}
    - {id: 1, x: 800, y: 420, height: 30, layer: 5G}
  cells:
    - {id: 0, site: 0, azimuth_deg: 0, tech: 5G, carrier_ghz: 2.703, bandwidth_mhz: 100, n_prb: 273,
       n_trx: 64, tx_power_dbm: )" + p + R"(, ssb_beams: 8, csirs_beams: 64}
    - {id: 1, site: 0, azimuth_deg: 120, tech: 5G, carrier_ghz: 2.703, bandwidth_mhz: 100, n_prb: 273,
       n_trx: 64, tx_power_dbm: )" + p + R"(, ssb_beams: 8, csirs_beams: 64}
    - {id: 2, site: 1, azimuth_deg: 180, tech: 5G, carrier_ghz: 2.703, bandwidth_mhz: 100, n_prb: 273,
       n_trx: 64, tx_power_dbm: )" + p + R"(, ssb_beams: 8, csirs_beams: 64}
  ues:
    - {x: 420, y: 410, demand_prb: 120}
    - {x: 470, y: 380, demand_prb: 90}
    - {x: 520, y: 450, demand_prb: 150, indoor: true}
    - {x: 560, y: 400, demand_prb: 60}
    - {x: 610, y: 360, demand_prb: 200}
    - {x: 650, y: 430, demand_prb: 80}
    - {x: 700, y: 410, demand_prb: 110}
    - {x: 260, y: 560, demand_prb: 130}
    - {x: 200, y: 640, demand_prb: 70, indoor: true}
    - {x: 330, y: 700, demand_prb: 100}
)";
}

inline RunSpec three_cell_spec(double power_offset_db = 0.0)
{
    const ScenarioFile f = parse_scenario(three_cell_text(power_offset_db));
    RunSpec spec;
    spec.config = f.config;
    spec.topology = f.topology;
    spec.n_snapshots = 1;
    spec.threads = 1;
    return spec;
}

// Same cells with UE positions, indoor flags and demands drawn from `seed`.
inline RunSpec random_three_cell_spec(std::uint64_t seed)
{
    RunSpec spec = three_cell_spec();
    spec.config.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> x(150.0, 950.0);
    std::uniform_real_distribution<double> y(250.0, 750.0);
    std::uniform_int_distribution<int> demand(20, 273);
    std::bernoulli_distribution indoor(0.3);
    for (auto& ue : *spec.topology->fixed_ues) {
        ue.position = {x(rng), y(rng)};
        ue.demand_prb = demand(rng);
        ue.indoor = indoor(rng);
    }
    return spec;
}

} // namespace fr3sim::testing
