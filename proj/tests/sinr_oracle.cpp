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

#include "sinr_oracle.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <set>
#include <stdexcept>

namespace fr3sim::testing {

namespace {

const Cell& find_cell(const Topology& t, int id, std::size_t& index)
{
    for (std::size_t i = 0; i < t.cells.size(); ++i)
        if (t.cells[i].id == id) {
            index = i;
            return t.cells[i];
        }
    throw std::runtime_error("oracle: unknown cell");
}

// Element pattern times N |a^H w|^2 from explicit vectors.
double explicit_gain(const Cell& cell, const BeamCodebook& cb, int beam, const UserTerminal& ue)
{
    const double dx = ue.position.x - cell.position.x;
    const double dy = ue.position.y - cell.position.y;
    Direction d{wrap_degrees(rad2deg(std::atan2(dy, dx)) - cell.azimuth_deg),
                rad2deg(std::atan2(ue.height - cell.height, std::hypot(dx, dy)))};
    d = to_panel_frame(cell.array, d);
    const auto a = steering_vector(cell.array, d);
    const auto w = cb.weights(beam);
    std::complex<double> dot = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        dot += std::conj(a[i]) * w[i];
    return db2lin(element_gain_db(d.azimuth_deg, d.elevation_deg)) * cell.array.panel_elements() * std::norm(dot);
}

} // namespace

SinrTerms brute_force_sinr(const Topology& topology, const std::vector<CellBeams>& beams,
                           const std::vector<UserTerminal>& ues, const std::vector<Attachment>& attachments,
                           const Allocation& allocation, const LinkTable& links, const LinkParams& params, int ue_id,
                           int prb, int layer)
{
    const Attachment& own = attachments.at(ue_id);
    const UserTerminal& ue = ues.at(ue_id);
    std::size_t serving_index = 0;
    const Cell& serving = find_cell(topology, own.cell_id, serving_index);
    const int own_beam = layer == 0 ? own.csirs_pair.first : own.csirs_pair.second;

    // Beams of each cell transmitting on this PRB and polarization.
    std::map<int, std::set<int>> on_air;
    for (const auto& [key, grants] : allocation.beams)
        for (const auto& [ue2, prbs] : grants)
            for (int p : prbs)
                if (p == prb) {
                    const auto& pair = attachments.at(ue2).csirs_pair;
                    on_air[key.first].insert(layer == 0 ? pair.first : pair.second);
                }

    SinrTerms t;
    t.noise_mw = db2lin(-174.0 + 10.0 * std::log10(12.0 * serving.scs_khz * 1e3) + params.noise_figure_db);
    for (const auto& [cell_id, active] : on_air) {
        std::size_t index = 0;
        const Cell& c = find_cell(topology, cell_id, index);
        if (c.technology != serving.technology || c.carrier_ghz != serving.carrier_ghz)
            continue;
        const LinkState* link = links.find(ue_id, cell_id);
        if (!link)
            throw std::runtime_error("oracle: missing link");
        const double per_beam_mw = db2lin(c.tx_power_dbm) / c.n_prb / 2.0 / static_cast<double>(active.size());
        const double channel = db2lin(-(link->pathloss_db + link->shadowing_db + link->o2i_loss_db))
            * std::norm(fading_gain(*link, layer, prb));
        for (int b : active) {
            const double rx = per_beam_mw * channel * explicit_gain(c, beams[index].csirs, b, ue);
            if (cell_id == serving.id && b == own_beam)
                t.signal_mw += rx;
            else if (cell_id == serving.id)
                t.intra_mw += rx;
            else
                t.inter_mw += rx;
        }
    }
    return t;
}

} // namespace fr3sim::testing
