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

#include "fr3sim/assoc.hpp"

#include <cmath>
#include <ostream>

namespace fr3sim {

std::vector<CellBeams> build_beams(const Topology& topology)
{
    std::vector<CellBeams> out;
    out.reserve(topology.cells.size());
    for (const auto& c : topology.cells)
        out.push_back({build_codebook(c.array, BeamKind::SSB, c.n_ssb_beams),
                       build_codebook(c.array, BeamKind::CSIRS, c.n_csirs_beams)});
    return out;
}

Direction direction_to(const Cell& cell, Vec2 ue_position, double ue_height)
{
    const double dx = ue_position.x - cell.position.x;
    const double dy = ue_position.y - cell.position.y;
    const double bearing = rad2deg(std::atan2(dy, dx));
    const double d2d = std::hypot(dx, dy);
    return {wrap_degrees(bearing - cell.azimuth_deg), rad2deg(std::atan2(ue_height - cell.height, d2d))};
}

double ssb_power_per_re_dbm(const Cell& cell) { return cell.tx_power_dbm - lin2db(12.0 * cell.n_prb); }

double noise_per_re_dbm(const Cell& cell, double noise_figure_db)
{
    return -174.0 + lin2db(cell.scs_khz * 1e3) + noise_figure_db;
}

double rsrp_dbm(double tx_per_re_dbm, double beam_gain_db, const LinkState& link)
{
    return tx_per_re_dbm + beam_gain_db - link.pathloss_db - link.shadowing_db - link.o2i_loss_db;
}

double ssb_rsrp(const UserTerminal& ue, const Cell& cell, const BeamCodebook& ssb, int beam, const LinkState& link)
{
    const Direction dir = direction_to(cell, ue.position, ue.height);
    return rsrp_dbm(ssb_power_per_re_dbm(cell), beam_gain_db(ssb, beam, dir), link);
}

RsrpCandidate best_ssb(const UserTerminal& ue, const Cell& cell, const BeamCodebook& ssb, const LinkState& link,
                       const AssociationParams& params)
{
    const Direction dir = direction_to(cell, ue.position, ue.height);
    const int beam = ssb.best_beam(to_panel_frame(ssb.array(), dir));
    return {cell.id, cell.technology, beam, rsrp_dbm(ssb_power_per_re_dbm(cell), beam_gain_db(ssb, beam, dir), link),
            noise_per_re_dbm(cell, params.noise_figure_db)};
}

Attachment associate(int ue_id, const std::vector<RsrpCandidate>& candidates, const AssociationParams& params)
{
    // Best detectable candidate per layer.
    const RsrpCandidate* best[3] = {nullptr, nullptr, nullptr};
    for (const auto& c : candidates) {
        if (!(c.rsrp_dbm > c.noise_dbm))
            continue;
        const RsrpCandidate*& b = best[static_cast<int>(c.technology)];
        if (!b || c.rsrp_dbm > b->rsrp_dbm || (c.rsrp_dbm == b->rsrp_dbm && c.cell_id < b->cell_id))
            b = &c;
    }
    auto eligible = [&](Technology t) {
        const RsrpCandidate* b = best[static_cast<int>(t)];
        if (!b)
            return false;
        switch (t) {
        case Technology::FiveG:
            return b->rsrp_dbm > params.threshold_5g_dbm;
        case Technology::SixG:
            return b->rsrp_dbm > params.threshold_6g_dbm;
        default:
            return true;
        }
    };
    Attachment a;
    a.ue_id = ue_id;
    for (Technology t : {Technology::SixG, Technology::FiveG, Technology::FourG}) {
        if (!eligible(t))
            continue;
        const RsrpCandidate* b = best[static_cast<int>(t)];
        a.cell_id = b->cell_id;
        a.ssb_beam = b->ssb_beam;
        a.rsrp_dbm = b->rsrp_dbm;
        a.technology = t;
        break;
    }
    return a;
}

std::pair<int, int> refine_beams(const UserTerminal& ue, const Cell& cell, const BeamCodebook& csirs)
{
    // Both panels see the same geometry and the fading is beam-flat, so the
    // per-panel argmax coincides.
    const Direction dir = to_panel_frame(csirs.array(), direction_to(cell, ue.position, ue.height));
    const int b = csirs.best_beam(dir);
    return {b, b};
}

void write_attachments_csv(std::ostream& os, const std::vector<Attachment>& attachments)
{
    os << "ue_id,cell_id,tech,ssb_idx,csirs_pol0,csirs_pol1,rsrp_dbm\n";
    const auto prec = os.precision(10);
    for (const auto& a : attachments) {
        if (a.outage())
            continue;
        os << a.ue_id << ',' << a.cell_id << ',' << to_string(a.technology) << ',' << a.ssb_beam << ','
           << a.csirs_pair.first << ',' << a.csirs_pair.second << ',' << a.rsrp_dbm << '\n';
    }
    os.precision(prec);
}

} // namespace fr3sim
