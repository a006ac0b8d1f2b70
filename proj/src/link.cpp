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

#include "fr3sim/link.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <yaml-cpp/yaml.h>

namespace fr3sim {

McsTable::McsTable(std::vector<McsEntry> entries) : entries_(std::move(entries))
{
    if (entries_.empty())
        throw ConfigError("mcs table: no entries");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!(entries_[i].efficiency > 0.0))
            throw ConfigError("mcs table: entry " + std::to_string(i) + " efficiency must be positive");
        if (i > 0 && !(entries_[i].sinr_threshold_db > entries_[i - 1].sinr_threshold_db))
            throw ConfigError("mcs table: thresholds must strictly increase at entry " + std::to_string(i));
        if (i > 0 && !(entries_[i].efficiency > entries_[i - 1].efficiency))
            throw ConfigError("mcs table: efficiencies must strictly increase at entry " + std::to_string(i));
    }
    if (entries_.back().efficiency > 7.4063 + 1e-9)
        throw ConfigError("mcs table: efficiency above 7.4063 bit/s/Hz");
}

McsTable McsTable::cqi_table2()
{
    return McsTable({{-6.7, 0.1523}, {-4.7, 0.3770}, {-2.3, 0.8770}, {0.2, 1.4766}, {2.4, 1.9141},
                     {4.3, 2.4063}, {5.9, 2.7305}, {8.1, 3.3223}, {10.3, 3.9023}, {11.7, 4.5234},
                     {14.1, 5.1152}, {16.3, 5.5547}, {18.7, 6.2266}, {21.0, 6.9141}, {22.7, 7.4063}});
}

McsTable McsTable::load(const std::string& path)
{
    YAML::Node root;
    try {
        root = YAML::LoadFile(path);
    } catch (const YAML::Exception& e) {
        throw ConfigError(path + ": " + e.what());
    }
    const YAML::Node list = root["entries"];
    if (!list || !list.IsSequence())
        throw ConfigError(path + ": 'entries' must be a list");
    std::vector<McsEntry> entries;
    for (const auto& n : list) {
        if (!n["sinr_db"] || !n["efficiency"])
            throw ConfigError(path + ": line " + std::to_string(n.Mark().line + 1)
                              + ": entry needs sinr_db and efficiency");
        try {
            entries.push_back({n["sinr_db"].as<double>(), n["efficiency"].as<double>()});
        } catch (const YAML::Exception& e) {
            throw ConfigError(path + ": line " + std::to_string(n.Mark().line + 1) + ": " + e.what());
        }
    }
    return McsTable(std::move(entries));
}

int McsTable::select(double eff_db) const
{
    int best = -1;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].sinr_threshold_db <= eff_db)
            best = static_cast<int>(i);
    return best;
}

double effective_sinr_db(const std::vector<double>& sinr_linear, double beta)
{
    if (sinr_linear.empty())
        throw ContractViolation("effective_sinr_db: empty grid");
    double acc = 0.0;
    for (double s : sinr_linear)
        acc += std::log2(1.0 + s / beta);
    const double mean = acc / static_cast<double>(sinr_linear.size());
    const double eff = beta * (std::exp2(mean) - 1.0);
    // Keep the fixed point exact for constant grids.
    const auto [lo, hi] = std::minmax_element(sinr_linear.begin(), sinr_linear.end());
    return lin2db(std::clamp(eff, *lo, *hi));
}

double sinr_to_mcs(double eff_db, const McsTable& table)
{
    const int i = table.select(eff_db);
    return i < 0 ? 0.0 : table.entries()[i].efficiency;
}

double ue_throughput_mbps(int allocated_prb, const std::vector<double>& se_per_layer, double prb_bandwidth_hz,
                          double overhead)
{
    const double se = std::accumulate(se_per_layer.begin(), se_per_layer.end(), 0.0);
    return se * allocated_prb * prb_bandwidth_hz * overhead * 1e-6;
}

double prb_noise_dbm(const Cell& cell, double noise_figure_db)
{
    return -174.0 + lin2db(cell.prb_bandwidth_hz()) + noise_figure_db;
}

void LinkTable::set(int ue_id, std::vector<LinkState> links)
{
    std::sort(links.begin(), links.end(), [](const LinkState& a, const LinkState& b) { return a.cell_id < b.cell_id; });
    links_.at(ue_id) = std::move(links);
}

const LinkState* LinkTable::find(int ue_id, int cell_id) const
{
    const auto& v = links_.at(ue_id);
    const auto it = std::lower_bound(v.begin(), v.end(), cell_id,
                                     [](const LinkState& l, int id) { return l.cell_id < id; });
    return it != v.end() && it->cell_id == cell_id ? &*it : nullptr;
}

struct SinrEngine::View {
    struct Entry {
        std::size_t cell = 0;
        const LinkState* link = nullptr;
        double scale = 0.0; // element gain * N * channel loss, linear
        std::vector<double> h;
        std::vector<double> v;
        int beams_h = 1;
        double power_mw = 0.0; // per PRB and polarization, before the beam split
    };
    int ue_id = -1;
    std::size_t serving = 0; // index into entries
    std::array<int, 2> beam{};
    double noise_mw = 0.0;
    std::vector<Entry> entries;
};

SinrEngine::SinrEngine(const Topology& topology, const std::vector<CellBeams>& beams,
                       const std::vector<UserTerminal>& ues, const std::vector<Attachment>& attachments,
                       const Allocation& allocation, const LinkTable& links, const LinkParams& params)
    : topology_(topology), beams_(beams), ues_(ues), attachments_(attachments), allocation_(allocation),
      links_(links), params_(params), load_(topology.cells.size())
{
    for (std::size_t i = 0; i < topology.cells.size(); ++i) {
        cell_index_[topology.cells[i].id] = i;
        for (auto& pol : load_[i].active)
            pol.resize(topology.cells[i].n_prb);
    }
    for (const auto& [key, grants] : allocation.beams) {
        const auto it = cell_index_.find(key.first);
        if (it == cell_index_.end())
            throw ContractViolation("allocation references unknown cell " + std::to_string(key.first));
        CellLoad& load = load_[it->second];
        for (const auto& [ue, prbs] : grants) {
            const std::array<int, 2> pair{attachments.at(ue).csirs_pair.first, attachments.at(ue).csirs_pair.second};
            for (int p : prbs)
                for (int pol = 0; pol < 2; ++pol) {
                    auto& list = load.active[pol].at(p);
                    if (std::find(list.begin(), list.end(), pair[pol]) == list.end())
                        list.push_back(pair[pol]);
                }
        }
    }
}

SinrEngine::View SinrEngine::view(int ue_id) const
{
    const Attachment& a = attachments_.at(ue_id);
    if (a.outage())
        throw ContractViolation("ue " + std::to_string(ue_id) + " is in outage");
    const UserTerminal& ue = ues_.at(ue_id);
    const Cell& serving = topology_.cell(a.cell_id);

    View v;
    v.ue_id = ue_id;
    v.beam = {a.csirs_pair.first, a.csirs_pair.second};
    v.noise_mw = db2lin(prb_noise_dbm(serving, params_.noise_figure_db));
    for (std::size_t i = 0; i < topology_.cells.size(); ++i) {
        const Cell& c = topology_.cells[i];
        if (!c.shares_carrier(serving))
            continue;
        const LinkState* link = links_.find(ue_id, c.id);
        if (!link)
            throw ContractViolation("no link from cell " + std::to_string(c.id) + " to ue " + std::to_string(ue_id));
        const BeamCodebook& cb = beams_[i].csirs;
        const Direction panel = to_panel_frame(c.array, direction_to(c, ue.position, ue.height));
        View::Entry e;
        e.cell = i;
        e.link = link;
        e.scale = db2lin(element_gain_db(panel.azimuth_deg, panel.elevation_deg) - link->coupling_loss_db())
            * c.array.panel_elements();
        cb.axis_response(panel, e.h, e.v);
        e.beams_h = cb.beams_h();
        e.power_mw = db2lin(c.tx_power_dbm) / (2.0 * c.n_prb);
        if (c.id == serving.id)
            v.serving = v.entries.size();
        v.entries.push_back(std::move(e));
    }
    return v;
}

double SinrEngine::evaluate(const View& v, int prb, int layer) const
{
    double signal = 0.0;
    double interference = 0.0;
    for (std::size_t k = 0; k < v.entries.size(); ++k) {
        const View::Entry& e = v.entries[k];
        const auto& per_prb = load_[e.cell].active[layer];
        if (prb >= static_cast<int>(per_prb.size()))
            continue;
        const auto& active = per_prb[prb];
        if (active.empty())
            continue;
        const double fade = std::norm(fading_gain(*e.link, layer, prb));
        const double base = e.power_mw / static_cast<double>(active.size()) * e.scale * fade;
        for (int b : active) {
            const double rx = base * e.h[b % e.beams_h] * e.v[b / e.beams_h];
            if (k == v.serving && b == v.beam[layer])
                signal = rx;
            else
                interference += rx;
        }
    }
    if (!(signal > 0.0))
        throw ContractViolation("ue " + std::to_string(v.ue_id) + " is not scheduled on prb " + std::to_string(prb));
    return signal / (interference + v.noise_mw);
}

double SinrEngine::per_prb_sinr(int ue_id, int prb, int layer) const
{
    const auto& prbs = allocation_.prbs(ue_id);
    if (!std::binary_search(prbs.begin(), prbs.end(), prb))
        throw ContractViolation("ue " + std::to_string(ue_id) + " holds no grant on prb " + std::to_string(prb));
    return evaluate(view(ue_id), prb, layer);
}

SinrGrid SinrEngine::grid(int ue_id) const
{
    SinrGrid g;
    g.ue_id = ue_id;
    g.prbs = allocation_.prbs(ue_id);
    if (g.prbs.empty())
        return g;
    const View v = view(ue_id);
    for (int layer = 0; layer < 2; ++layer) {
        g.layers[layer].reserve(g.prbs.size());
        for (int p : g.prbs)
            g.layers[layer].push_back(evaluate(v, p, layer));
    }
    return g;
}

} // namespace fr3sim
