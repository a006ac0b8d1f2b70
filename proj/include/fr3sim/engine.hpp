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
#include "fr3sim/link.hpp"
#include "fr3sim/power.hpp"
#include "fr3sim/scenario.hpp"
#include "fr3sim/sched.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fr3sim {

struct RunSpec {
    ScenarioConfig config;
    std::optional<Topology> topology; // explicit network instead of the generator
    int n_snapshots = 10;
    std::string out_dir; // empty: no files written
    std::string label;   // empty: derived from strategy and 6G settings
    unsigned threads = 0; // 0: min(hardware, 4)
    ChannelParams channel;
    AssociationParams association;
    LinkParams link;
    PowerPresets presets = PowerPresets::defaults();
    McsTable mcs = McsTable::cqi_table2();
};

std::string default_label(const ScenarioConfig& config);

// Failure inside one pipeline stage of one snapshot.
class StageError : public std::runtime_error {
public:
    StageError(int snapshot, std::string stage, const std::string& what);
    int snapshot() const { return snapshot_; }
    const std::string& stage() const { return stage_; }

private:
    int snapshot_;
    std::string stage_;
};

struct UeRecord {
    int snapshot = 0;
    int ue_id = 0;
    int cell_id = -1; // -1: outage
    Technology technology = Technology::FourG;
    bool indoor = false;
    bool hotspot = false;
    int ssb_beam = -1;
    std::pair<int, int> csirs_pair{-1, -1};
    double rsrp_dbm = 0.0;
    int prbs = 0;
    std::array<double, 2> eff_sinr_db{0.0, 0.0};
    std::array<int, 2> mcs{-1, -1};
    double throughput_mbps = 0.0;

    bool outage() const { return cell_id < 0; }
};

// Frozen state after scheduling; the link stage is a pure function of it.
struct SnapshotState {
    int index = 0;
    std::uint64_t seed = 0;
    std::vector<UserTerminal> ues;
    LinkTable links;
    std::vector<Attachment> attachments; // indexed by UE id
    Allocation allocation;
};

struct SnapshotResult {
    std::vector<UeRecord> records;
    PowerReport power;
    std::vector<Attachment> attachments;
    Allocation allocation;
};

class Simulation {
public:
    explicit Simulation(const RunSpec& spec);

    const RunSpec& spec() const { return spec_; }
    const Topology& topology() const { return topology_; }
    const std::vector<CellBeams>& beams() const { return beams_; }

    std::uint64_t snapshot_seed(int index) const;

    // Users, channel, association, scheduling.
    SnapshotState prepare(int index) const;
    std::vector<UeRecord> evaluate(const SnapshotState& state) const;
    std::map<int, double> loads(const SnapshotState& state) const;
    SnapshotResult snapshot(int index) const;

private:
    RunSpec spec_;
    Topology topology_;
    std::unique_ptr<CoverageIndex> coverage_;
    std::vector<CellBeams> beams_;
};

struct Percentiles {
    double mean = 0.0;
    double p5 = 0.0;
    double p50 = 0.0;
    double p95 = 0.0;
};

// Smallest sample with at least pct% of the data at or below it.
double nearest_rank(const std::vector<double>& sorted, double pct);
Percentiles percentiles(std::vector<double> samples);

struct MetricsReport {
    std::string label;
    Strategy strategy = Strategy::FourG_FiveG;
    int sixg_bandwidth_mhz = 200;
    int sixg_trx = 128;
    std::uint64_t seed = 0;
    int snapshots = 0;
    std::string config_hash;
    std::vector<UeRecord> ues; // pooled, ordered by (snapshot, ue)
    Percentiles throughput;    // Mbps; outage UEs count as 0
    std::map<Technology, double> attachment_share;
    double outage_share = 0.0;
    PowerReport power; // mean over snapshots
    std::vector<Attachment> first_attachments;
    Allocation first_allocation;
};

MetricsReport run(const RunSpec& spec);

// FNV-1a over the serialized configuration and run settings.
std::string config_hash(const RunSpec& spec);

struct ComparisonRow {
    std::string label;
    Strategy strategy = Strategy::FourG_FiveG;
    int sixg_bandwidth_mhz = 0;
    int sixg_trx = 0;
    std::uint64_t seed = 0;
    Percentiles throughput;
    double power_kw = 0.0;
    Percentiles throughput_ratio; // vs baseline; 0/0 counts as 1
    double power_ratio = 1.0;
};

struct Comparison {
    std::string baseline;
    std::vector<ComparisonRow> rows;
    std::vector<std::string> warnings;
};

Comparison compare(const std::vector<MetricsReport>& reports, std::size_t baseline);

void write_ue_metrics_csv(std::ostream& os, const MetricsReport& report);
void write_summary_json(std::ostream& os, const MetricsReport& report);
void write_comparison_csv(std::ostream& os, const Comparison& comparison);

// ue_metrics.csv, power.csv, summary.json, attachments.csv, allocation.csv.
void write_reports(const std::string& dir, const MetricsReport& report);

} // namespace fr3sim
