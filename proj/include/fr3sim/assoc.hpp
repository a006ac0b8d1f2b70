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
#include "fr3sim/channel.hpp"
#include "fr3sim/common.hpp"
#include "fr3sim/scenario.hpp"

#include <iosfwd>
#include <limits>
#include <utility>
#include <vector>

namespace fr3sim {

struct Attachment {
    int ue_id = -1;
    int cell_id = -1; // -1: outage
    int ssb_beam = -1;
    std::pair<int, int> csirs_pair{-1, -1};
    double rsrp_dbm = -std::numeric_limits<double>::infinity();
    Technology technology = Technology::FourG;

    bool outage() const { return cell_id < 0; }
};

struct AssociationParams {
    double threshold_5g_dbm = -110.0;
    double threshold_6g_dbm = -108.0;
    double noise_figure_db = 9.0;
    bool operator==(const AssociationParams&) const = default;
};

// SSB and CSI-RS codebooks of one cell.
struct CellBeams {
    BeamCodebook ssb;
    BeamCodebook csirs;
};

// Parallel to topology.cells.
std::vector<CellBeams> build_beams(const Topology& topology);

// Boresight-relative direction from a cell toward a UE.
Direction direction_to(const Cell& cell, Vec2 ue_position, double ue_height);

// Per-resource-element share of the full cell power carried by one SSB.
double ssb_power_per_re_dbm(const Cell& cell);

// Thermal noise over one subcarrier of the cell plus the UE noise figure.
double noise_per_re_dbm(const Cell& cell, double noise_figure_db);

// tx + gain - pathloss - shadowing - O2I; fading is left out (L3-filtered).
double rsrp_dbm(double tx_per_re_dbm, double beam_gain_db, const LinkState& link);

double ssb_rsrp(const UserTerminal& ue, const Cell& cell, const BeamCodebook& ssb, int beam, const LinkState& link);

// Strongest SSB of one cell at one UE.
struct RsrpCandidate {
    int cell_id = -1;
    Technology technology = Technology::FourG;
    int ssb_beam = 0;
    double rsrp_dbm = 0.0;
    double noise_dbm = -std::numeric_limits<double>::infinity(); // detection floor
};

RsrpCandidate best_ssb(const UserTerminal& ue, const Cell& cell, const BeamCodebook& ssb, const LinkState& link,
                       const AssociationParams& params);

// Priority reselection: a layer is eligible when its best RSRP strictly
// exceeds its threshold (4G: detectable at all). Highest priority wins, then
// strongest RSRP, then lowest cell id. Nothing detectable: outage.
Attachment associate(int ue_id, const std::vector<RsrpCandidate>& candidates, const AssociationParams& params);

// Strongest CSI-RS beam per polarization panel.
std::pair<int, int> refine_beams(const UserTerminal& ue, const Cell& cell, const BeamCodebook& csirs);

// CSV: ue_id,cell_id,tech,ssb_idx,csirs_pol0,csirs_pol1,rsrp_dbm
void write_attachments_csv(std::ostream& os, const std::vector<Attachment>& attachments);

} // namespace fr3sim
