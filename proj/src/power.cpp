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

#include "fr3sim/power.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include <yaml-cpp/yaml.h>

namespace fr3sim {

namespace {

PowerParams make(PaArchitecture arch, double baseline, double baseband, double trx, double overhead, double eff)
{
    return {baseline, baseband, trx, overhead, eff, arch};
}

PowerParams parse_params(const YAML::Node& node, const std::string& path, const std::string& name)
{
    auto where = [&](const YAML::Node& n) {
        return path + ": line " + std::to_string(n.Mark().line + 1) + ": " + name;
    };
    if (!node.IsMap())
        throw ConfigError(where(node) + " must be a mapping");
    static const std::set<std::string> kKeys = {"architecture", "baseline_w", "baseband_w_per_mhz", "per_trx_w",
                                                "pa_overhead_per_chain_w", "pa_efficiency"};
    for (const auto& kv : node) {
        const auto key = kv.first.as<std::string>();
        if (!kKeys.count(key))
            throw ConfigError(where(kv.first) + "." + key + ": unknown field");
    }
    PowerParams p;
    auto num = [&](const char* key, double& out) {
        const YAML::Node n = node[key];
        if (!n)
            throw ConfigError(where(node) + "." + key + ": missing");
        try {
            out = n.as<double>();
        } catch (const YAML::Exception&) {
            throw ConfigError(where(n) + "." + key + ": expected a number");
        }
    };
    num("baseline_w", p.baseline_w);
    num("baseband_w_per_mhz", p.baseband_w_per_mhz);
    num("per_trx_w", p.per_trx_w);
    num("pa_overhead_per_chain_w", p.pa_overhead_per_chain_w);
    num("pa_efficiency", p.pa_efficiency);
    const YAML::Node arch = node["architecture"];
    if (!arch)
        throw ConfigError(where(node) + ".architecture: missing");
    const auto a = arch.as<std::string>();
    if (a == "MCPA_shared")
        p.architecture = PaArchitecture::MCPA_shared;
    else if (a == "AAU_per_trx")
        p.architecture = PaArchitecture::AAU_per_trx;
    else
        throw ConfigError(where(arch) + ".architecture: expected MCPA_shared or AAU_per_trx");
    validate(p, name);
    return p;
}


} // namespace

PowerPresets PowerPresets::defaults()
{
    PowerPresets p;
    p.fourg = make(PaArchitecture::MCPA_shared, 350.0, 2.0, 1.8, 1.0, 0.3);
    p.fiveg = make(PaArchitecture::AAU_per_trx, 1040.0, 2.0, 2.0, 0.8, 0.3);
    p.sixg_uma = make(PaArchitecture::AAU_per_trx, 1010.0, 1.6, 1.6, 0.8, 0.3);
    p.sixg_umi = make(PaArchitecture::AAU_per_trx, 800.0, 1.6, 1.6, 0.8, 0.3);
    p.sixg_upi = make(PaArchitecture::AAU_per_trx, 530.0, 1.6, 1.6, 0.8, 0.3);
    return p;
}

PowerPresets PowerPresets::load(const std::string& path)
{
    YAML::Node root;
    try {
        root = YAML::LoadFile(path);
    } catch (const YAML::Exception& e) {
        throw ConfigError(path + ": " + e.what());
    }
    if (!root.IsMap())
        throw ConfigError(path + ": expected a mapping of presets");
    PowerPresets p = defaults();
    for (const auto& kv : root) {
        const auto key = kv.first.as<std::string>();
        PowerParams* slot = key == "4G"     ? &p.fourg
            : key == "5G"                   ? &p.fiveg
            : key == "6G_UMa"               ? &p.sixg_uma
            : key == "6G_UMi"               ? &p.sixg_umi
            : key == "6G_UPi"               ? &p.sixg_upi
                                            : nullptr;
        if (!slot)
            throw ConfigError(path + ": line " + std::to_string(kv.first.Mark().line + 1) + ": " + key
                              + ": unknown preset");
        *slot = parse_params(kv.second, path, key);
    }
    return p;
}

const PowerParams& PowerPresets::for_cell(const Cell& cell) const
{
    switch (cell.technology) {
    case Technology::FourG:
        return fourg;
    case Technology::FiveG:
        return fiveg;
    default:
        break;
    }
    switch (cell.deployment_class) {
    case DeploymentClass::UMa:
        return sixg_uma;
    case DeploymentClass::UMi:
        return sixg_umi;
    default:
        return sixg_upi;
    }
}

void validate(const PowerParams& p, const std::string& name)
{
    if (p.baseline_w < 0.0 || p.baseband_w_per_mhz < 0.0 || p.per_trx_w < 0.0 || p.pa_overhead_per_chain_w < 0.0)
        throw ConfigError(name + ": power components must be non-negative");
    if (!(p.pa_efficiency > 0.0 && p.pa_efficiency <= 1.0))
        throw ConfigError(name + ".pa_efficiency: must be in (0, 1]");
}

RadioPower radio_power(const Cell& cell, double load, const PowerParams& params)
{
    if (!(load >= 0.0 && load <= 1.0))
        throw ContractViolation("cell " + std::to_string(cell.id) + ": load " + std::to_string(load)
                                + " outside [0, 1]");
    RadioPower r;
    r.cell_id = cell.id;
    r.technology = cell.technology;
    r.deployment_class = cell.deployment_class;
    r.load = load;
    r.baseline_w = params.baseline_w;
    r.baseband_w = params.baseband_w_per_mhz * cell.bandwidth_mhz;
    r.trx_w = cell.n_trx * params.per_trx_w;
    r.pa_overhead_w = cell.n_trx * params.pa_overhead_per_chain_w;
    r.radiated_w = dbm2watt(cell.tx_power_dbm) * load / params.pa_efficiency;
    return r;
}

std::vector<std::vector<int>> mcpa_groups(const std::vector<Cell>& cells, double adjacency_ghz)
{
    std::map<std::pair<int, int>, std::vector<const Cell*>> sectors;
    for (const auto& c : cells)
        sectors[{c.site_id, c.sector}].push_back(&c);
    std::vector<std::vector<int>> groups;
    for (auto& [key, members] : sectors) {
        std::sort(members.begin(), members.end(), [](const Cell* a, const Cell* b) {
            return a->carrier_ghz != b->carrier_ghz ? a->carrier_ghz < b->carrier_ghz : a->id < b->id;
        });
        std::vector<int> group{members.front()->id};
        for (std::size_t i = 1; i < members.size(); ++i) {
            if (members[i]->carrier_ghz - members[i - 1]->carrier_ghz > adjacency_ghz + 1e-12) {
                groups.push_back(std::move(group));
                group.clear();
            }
            group.push_back(members[i]->id);
        }
        groups.push_back(std::move(group));
    }
    for (auto& g : groups)
        std::sort(g.begin(), g.end());
    std::sort(groups.begin(), groups.end());
    return groups;
}

PowerReport network_power(const std::vector<Cell>& cells, const std::map<int, double>& loads,
                          const PowerPresets& presets)
{
    PowerReport report;
    std::map<int, std::size_t> slot;
    for (const auto& c : cells) {
        const auto it = loads.find(c.id);
        slot[c.id] = report.radios.size();
        report.radios.push_back(radio_power(c, it == loads.end() ? 0.0 : it->second, presets.for_cell(c)));
    }

    std::vector<Cell> shared;
    for (const auto& c : cells)
        if (presets.for_cell(c).architecture == PaArchitecture::MCPA_shared)
            shared.push_back(c);
    for (const auto& group : mcpa_groups(shared)) {
        double block = 0.0;
        for (int id : group)
            block = std::max(block, report.radios[slot[id]].pa_overhead_w);
        for (int id : group)
            report.radios[slot[id]].pa_overhead_w = 0.0;
        report.radios[slot[group.front()]].pa_overhead_w = block;
    }

    for (const auto& r : report.radios) {
        report.layer_w[r.technology] += r.total_w();
        report.total_w += r.total_w();
    }
    return report;
}

PowerReport average(const std::vector<PowerReport>& reports)
{
    PowerReport out;
    if (reports.empty())
        return out;
    out.radios = reports.front().radios;
    for (std::size_t i = 0; i < out.radios.size(); ++i) {
        RadioPower& r = out.radios[i];
        r.load = r.baseline_w = r.baseband_w = r.trx_w = r.pa_overhead_w = r.radiated_w = 0.0;
        for (const auto& rep : reports) {
            const RadioPower& s = rep.radios.at(i);
            r.load += s.load;
            r.baseline_w += s.baseline_w;
            r.baseband_w += s.baseband_w;
            r.trx_w += s.trx_w;
            r.pa_overhead_w += s.pa_overhead_w;
            r.radiated_w += s.radiated_w;
        }
        const double n = static_cast<double>(reports.size());
        r.load /= n;
        r.baseline_w /= n;
        r.baseband_w /= n;
        r.trx_w /= n;
        r.pa_overhead_w /= n;
        r.radiated_w /= n;
    }
    for (const auto& r : out.radios) {
        out.layer_w[r.technology] += r.total_w();
        out.total_w += r.total_w();
    }
    return out;
}

void write_power_csv(std::ostream& os, const PowerReport& report)
{
    os << "radio_id,tech,class,load,baseline_w,baseband_w,trx_w,pa_overhead_w,radiated_w,total_w\n";
    const auto prec = os.precision(10);
    for (const auto& r : report.radios)
        os << r.cell_id << ',' << to_string(r.technology) << ',' << to_string(r.deployment_class) << ',' << r.load
           << ',' << r.baseline_w << ',' << r.baseband_w << ',' << r.trx_w << ',' << r.pa_overhead_w << ','
           << r.radiated_w << ',' << r.total_w() << '\n';
    os.precision(prec);
}

} // namespace fr3sim
