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

#include "fr3sim/assoc.hpp"
#include "fr3sim/channel.hpp"
#include "fr3sim/scenario.hpp"
#include "fr3sim/sched.hpp"

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

namespace fr3sim {

struct LinkParams {
    double noise_figure_db = 9.0;
    double overhead = 0.86;
    double miesm_beta = 1.0;
    bool operator==(const LinkParams&) const = default;
};

struct McsEntry {
    double sinr_threshold_db = 0.0;
    double efficiency = 0.0; // bit/s/Hz
    bool operator==(const McsEntry&) const = default;
};

class McsTable {
public:
    // Throws ConfigError unless thresholds and efficiencies strictly increase
    // and the top efficiency stays within 7.4063.
    explicit McsTable(std::vector<McsEntry> entries);

    // CQI table 2, built in.
    static McsTable cqi_table2();
    static McsTable load(const std::string& path);

    const std::vector<McsEntry>& entries() const { return entries_; }

    // Index of the highest entry whose threshold is <= eff_db, or -1.
    int select(double eff_db) const;

    bool operator==(const McsTable&) const = default;

private:
    std::vector<McsEntry> entries_;
};

// MIESM: beta * (2^{mean log2(1 + s/beta)} - 1), returned in dB.
double effective_sinr_db(const std::vector<double>& sinr_linear, double beta = 1.0);

// Spectral efficiency of the selected MCS; 0 below the lowest threshold.
double sinr_to_mcs(double eff_db, const McsTable& table);

double ue_throughput_mbps(int allocated_prb, const std::vector<double>& se_per_layer, double prb_bandwidth_hz,
                          double overhead);

// -174 dBm/Hz over one PRB plus the noise figure.
double prb_noise_dbm(const Cell& cell, double noise_figure_db);

// Retained links per UE, sorted by cell id.
class LinkTable {
public:
    explicit LinkTable(std::size_t n_ues = 0) : links_(n_ues) {}

    void resize(std::size_t n_ues) { links_.resize(n_ues); }
    void set(int ue_id, std::vector<LinkState> links);
    const LinkState* find(int ue_id, int cell_id) const;
    const std::vector<LinkState>& of(int ue_id) const { return links_.at(ue_id); }
    std::size_t size() const { return links_.size(); }

private:
    std::vector<std::vector<LinkState>> links_;
};

struct SinrGrid {
    int ue_id = -1;
    std::vector<int> prbs;
    std::array<std::vector<double>, 2> layers; // linear, parallel to prbs
};

// Downlink SINR over a frozen allocation. Each cell splits its power evenly
// over PRBs and polarizations, then over the beams sharing a PRB. Interference
// comes from every other (cell, beam) on the same carrier that scheduled the
// PRB, through its gain toward the UE on the same polarization.
class SinrEngine {
public:
    SinrEngine(const Topology& topology, const std::vector<CellBeams>& beams, const std::vector<UserTerminal>& ues,
               const std::vector<Attachment>& attachments, const Allocation& allocation, const LinkTable& links,
               const LinkParams& params);

    double per_prb_sinr(int ue_id, int prb, int layer) const;
    SinrGrid grid(int ue_id) const;

private:
    struct CellLoad {
        // [polarization][prb] -> beams transmitting
        std::array<std::vector<std::vector<int>>, 2> active;
    };
    struct View; // per-UE gains toward the co-carrier cells

    View view(int ue_id) const;
    double evaluate(const View& v, int prb, int layer) const;

    const Topology& topology_;
    const std::vector<CellBeams>& beams_;
    const std::vector<UserTerminal>& ues_;
    const std::vector<Attachment>& attachments_;
    const Allocation& allocation_;
    const LinkTable& links_;
    LinkParams params_;
    std::unordered_map<int, std::size_t> cell_index_;
    std::vector<CellLoad> load_;
};

} // namespace fr3sim
