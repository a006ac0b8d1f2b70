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

#include "fr3sim/common.hpp"
#include "fr3sim/scenario.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace fr3sim {

enum class PaArchitecture { MCPA_shared, AAU_per_trx };

struct PowerParams {
    double baseline_w = 0.0;
    double baseband_w_per_mhz = 0.0;
    double per_trx_w = 0.0;
    double pa_overhead_per_chain_w = 0.0;
    double pa_efficiency = 1.0;
    PaArchitecture architecture = PaArchitecture::AAU_per_trx;
    bool operator==(const PowerParams&) const = default;
};

// Presets per layer; 6G carries one set per deployment class.
struct PowerPresets {
    PowerParams fourg;
    PowerParams fiveg;
    PowerParams sixg_uma;
    PowerParams sixg_umi;
    PowerParams sixg_upi;

    static PowerPresets defaults();
    static PowerPresets load(const std::string& path);

    const PowerParams& for_cell(const Cell& cell) const;
    bool operator==(const PowerPresets&) const = default;
};

void validate(const PowerParams& params, const std::string& name);

struct RadioPower {
    int cell_id = -1;
    Technology technology = Technology::FourG;
    DeploymentClass deployment_class = DeploymentClass::UMa;
    double load = 0.0;
    double baseline_w = 0.0;
    double baseband_w = 0.0;
    double trx_w = 0.0;
    double pa_overhead_w = 0.0;
    double radiated_w = 0.0; // output power drawn through the PA efficiency

    double total_w() const { return baseline_w + baseband_w + trx_w + pa_overhead_w + radiated_w; }
};

struct PowerReport {
    std::vector<RadioPower> radios;
    std::map<Technology, double> layer_w;
    double total_w = 0.0;

    double total_kw() const { return total_w * 1e-3; }
};

// Throws ContractViolation unless 0 <= load <= 1.
RadioPower radio_power(const Cell& cell, double load, const PowerParams& params);

// Cells the MCPA of `cell` is shared with: same site and sector, carriers
// chained within `adjacency_ghz`.
std::vector<std::vector<int>> mcpa_groups(const std::vector<Cell>& cells, double adjacency_ghz = 0.1);

// Radios in cell order. MCPA groups keep one PA-overhead block, sized by
// their largest member and booked on the lowest cell id.
PowerReport network_power(const std::vector<Cell>& cells, const std::map<int, double>& loads,
                          const PowerPresets& presets);

// Component-wise mean over snapshots of reports on the same cells.
PowerReport average(const std::vector<PowerReport>& reports);

// CSV: radio_id,tech,class,load,baseline_w,baseband_w,trx_w,pa_overhead_w,radiated_w,total_w
void write_power_csv(std::ostream& os, const PowerReport& report);

} // namespace fr3sim
