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

#include "fr3sim/engine.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <json.hpp>

namespace fr3sim {

namespace {

std::ofstream open(const std::filesystem::path& path)
{
    std::ofstream f(path);
    if (!f)
        throw ConfigError(path.string() + ": cannot write");
    return f;
}

// Shortest text that reads back to the same double.
std::string num(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    return nlohmann::json(v).dump();
}

} // namespace

void write_ue_metrics_csv(std::ostream& os, const MetricsReport& r)
{
    os << "strategy,snapshot,ue_id,tech,cell,indoor,hotspot,ssb_idx,csirs_pol0,csirs_pol1,rsrp_dbm,prbs,"
          "eff_sinr_l0_db,eff_sinr_l1_db,mcs_l0,mcs_l1,throughput_mbps\n";
    for (const auto& u : r.ues) {
        os << r.label << ',' << u.snapshot << ',' << u.ue_id << ',';
        if (u.outage()) {
            os << "outage,-1," << u.indoor << ',' << u.hotspot << ",-1,-1,-1,,0,,,-1,-1,0\n";
            continue;
        }
        os << to_string(u.technology) << ',' << u.cell_id << ',' << u.indoor << ',' << u.hotspot << ','
           << u.ssb_beam << ',' << u.csirs_pair.first << ',' << u.csirs_pair.second << ',' << num(u.rsrp_dbm) << ','
           << u.prbs << ',';
        if (u.prbs > 0)
            os << num(u.eff_sinr_db[0]) << ',' << num(u.eff_sinr_db[1]);
        else
            os << ',';
        os << ',' << u.mcs[0] << ',' << u.mcs[1] << ',' << num(u.throughput_mbps) << '\n';
    }
}

void write_summary_json(std::ostream& os, const MetricsReport& r)
{
    nlohmann::ordered_json j;
    j["label"] = r.label;
    j["strategy"] = std::string(to_string(r.strategy));
    j["sixg_bandwidth_mhz"] = r.sixg_bandwidth_mhz;
    j["sixg_trx"] = r.sixg_trx;
    j["seed"] = r.seed;
    j["snapshots"] = r.snapshots;
    j["config_hash"] = r.config_hash;
    j["ue_samples"] = r.ues.size();
    j["percentile_method"] = "nearest-rank";
    j["throughput_mbps"] = {{"mean", r.throughput.mean},
                            {"p5", r.throughput.p5},
                            {"p50", r.throughput.p50},
                            {"p95", r.throughput.p95}};
    nlohmann::ordered_json share;
    for (Technology t : {Technology::FourG, Technology::FiveG, Technology::SixG}) {
        const auto it = r.attachment_share.find(t);
        share[std::string(to_string(t))] = it == r.attachment_share.end() ? 0.0 : it->second;
    }
    share["outage"] = r.outage_share;
    j["attachment_share"] = share;
    nlohmann::ordered_json power;
    power["total_kw"] = r.power.total_kw();
    for (Technology t : {Technology::FourG, Technology::FiveG, Technology::SixG}) {
        const auto it = r.power.layer_w.find(t);
        power[std::string(to_string(t)) + "_kw"] = it == r.power.layer_w.end() ? 0.0 : it->second * 1e-3;
    }
    power["radios"] = r.power.radios.size();
    j["power"] = power;
    os << j.dump(2) << '\n';
}

void write_comparison_csv(std::ostream& os, const Comparison& c)
{
    os << "label,strategy,sixg_bandwidth_mhz,sixg_trx,seed,mean_mbps,p5_mbps,p50_mbps,p95_mbps,power_kw,"
          "mean_ratio,p5_ratio,p50_ratio,p95_ratio,power_ratio,baseline\n";
    for (const auto& r : c.rows)
        os << r.label << ',' << to_string(r.strategy) << ',' << r.sixg_bandwidth_mhz << ',' << r.sixg_trx << ','
           << r.seed << ',' << num(r.throughput.mean) << ',' << num(r.throughput.p5) << ',' << num(r.throughput.p50)
           << ',' << num(r.throughput.p95) << ',' << num(r.power_kw) << ',' << num(r.throughput_ratio.mean) << ','
           << num(r.throughput_ratio.p5) << ',' << num(r.throughput_ratio.p50) << ',' << num(r.throughput_ratio.p95)
           << ',' << num(r.power_ratio) << ',' << c.baseline << '\n';
}

void write_reports(const std::string& dir, const MetricsReport& r)
{
    const std::filesystem::path root(dir);
    std::filesystem::create_directories(root);
    {
        auto f = open(root / "ue_metrics.csv");
        write_ue_metrics_csv(f, r);
    }
    {
        auto f = open(root / "power.csv");
        write_power_csv(f, r.power);
    }
    {
        auto f = open(root / "summary.json");
        write_summary_json(f, r);
    }
    {
        auto f = open(root / "attachments.csv");
        write_attachments_csv(f, r.first_attachments);
    }
    {
        auto f = open(root / "allocation.csv");
        write_allocation_csv(f, r.first_allocation);
    }
}

} // namespace fr3sim
