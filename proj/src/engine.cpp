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

#include "fr3sim/scenario_io.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace fr3sim {

namespace {

template <typename F>
auto stage(int snapshot, const char* name, F&& f)
{
    try {
        return f();
    } catch (const StageError&) {
        throw;
    } catch (const std::exception& e) {
        throw StageError(snapshot, name, e.what());
    }
}

} // namespace

StageError::StageError(int snapshot, std::string stage, const std::string& what)
    : std::runtime_error("snapshot " + std::to_string(snapshot) + ", stage " + stage + ": " + what),
      snapshot_(snapshot), stage_(std::move(stage))
{
}

std::string default_label(const ScenarioConfig& c)
{
    std::string label(to_string(c.strategy));
    if (has_sixg(c.strategy))
        label += "@" + std::to_string(c.sixg_bandwidth_mhz) + "MHz/" + std::to_string(c.sixg_trx) + "TRX";
    return label;
}

Simulation::Simulation(const RunSpec& spec) : spec_(spec)
{
    if (spec_.n_snapshots < 1)
        throw ConfigError("snapshots: must be at least 1");
    topology_ = stage(-1, "scenario", [&] {
        if (spec_.topology)
            return *spec_.topology;
        return generate_topology(spec_.config);
    });
    coverage_ = std::make_unique<CoverageIndex>(topology_);
    beams_ = stage(-1, "antenna", [&] { return build_beams(topology_); });
}

std::uint64_t Simulation::snapshot_seed(int index) const
{
    return derive_seed({spec_.config.seed, static_cast<std::uint64_t>(index)});
}

SnapshotState Simulation::prepare(int index) const
{
    SnapshotState s;
    s.index = index;
    s.seed = snapshot_seed(index);
    s.ues = stage(index, "scenario", [&] { return drop_users(spec_.config, topology_, *coverage_, s.seed); });
    s.links.resize(s.ues.size());
    s.attachments.resize(s.ues.size());

    const auto& cells = topology_.cells;
    stage(index, "channel", [&] {
        std::vector<LinkState> all(cells.size());
        std::vector<RsrpCandidate> candidates(cells.size());
        for (const auto& ue : s.ues) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                const Cell& c = cells[i];
                const LinkGeometry g{classify_model(c.height), c.carrier_ghz, distance(ue.position, c.position),
                                     c.height, ue.height, ue.indoor};
                const std::uint64_t seed = derive_seed({s.seed, tag(StreamTag::Links),
                                                        static_cast<std::uint64_t>(ue.id),
                                                        static_cast<std::uint64_t>(c.id)});
                all[i] = make_link(ue.id, c.id, g, spec_.channel, seed);
                candidates[i] = best_ssb(ue, c, beams_[i].ssb, all[i], spec_.association);
            }
            Attachment a = associate(ue.id, candidates, spec_.association);
            std::vector<LinkState> kept;
            if (!a.outage()) {
                const Cell& serving = topology_.cell(a.cell_id);
                for (std::size_t i = 0; i < cells.size(); ++i)
                    if (cells[i].shares_carrier(serving))
                        kept.push_back(all[i]);
                std::size_t si = 0;
                while (cells[si].id != a.cell_id)
                    ++si;
                a.csirs_pair = refine_beams(ue, serving, beams_[si].csirs);
            }
            s.links.set(ue.id, std::move(kept));
            s.attachments[ue.id] = a;
        }
        return 0;
    });

    stage(index, "sched", [&] {
        for (const auto& c : cells)
            allocate_cell(c.id, c.n_prb, s.attachments, s.ues, s.seed, s.allocation);
        s.allocation.index();
        return 0;
    });
    return s;
}

std::vector<UeRecord> Simulation::evaluate(const SnapshotState& s) const
{
    return stage(s.index, "link", [&] {
        const SinrEngine engine(topology_, beams_, s.ues, s.attachments, s.allocation, s.links, spec_.link);
        std::vector<UeRecord> out;
        out.reserve(s.ues.size());
        for (const auto& ue : s.ues) {
            const Attachment& a = s.attachments[ue.id];
            UeRecord r;
            r.snapshot = s.index;
            r.ue_id = ue.id;
            r.indoor = ue.indoor;
            r.hotspot = ue.hotspot_id.has_value();
            if (!a.outage()) {
                r.cell_id = a.cell_id;
                r.technology = a.technology;
                r.ssb_beam = a.ssb_beam;
                r.csirs_pair = a.csirs_pair;
                r.rsrp_dbm = a.rsrp_dbm;
                const SinrGrid g = engine.grid(ue.id);
                r.prbs = static_cast<int>(g.prbs.size());
                if (r.prbs > 0) {
                    std::vector<double> se(2);
                    for (int l = 0; l < 2; ++l) {
                        r.eff_sinr_db[l] = effective_sinr_db(g.layers[l], spec_.link.miesm_beta);
                        r.mcs[l] = spec_.mcs.select(r.eff_sinr_db[l]);
                        se[l] = sinr_to_mcs(r.eff_sinr_db[l], spec_.mcs);
                    }
                    r.throughput_mbps = ue_throughput_mbps(r.prbs, se, topology_.cell(a.cell_id).prb_bandwidth_hz(),
                                                           spec_.link.overhead);
                }
            }
            out.push_back(r);
        }
        return out;
    });
}

std::map<int, double> Simulation::loads(const SnapshotState& s) const
{
    std::map<int, std::pair<double, int>> acc; // used PRB fraction sum, active beams
    for (const auto& [key, grants] : s.allocation.beams) {
        if (grants.empty())
            continue;
        int used = 0;
        for (const auto& [ue, prbs] : grants)
            used += static_cast<int>(prbs.size());
        auto& a = acc[key.first];
        a.first += static_cast<double>(used) / topology_.cell(key.first).n_prb;
        a.second += 1;
    }
    std::map<int, double> out;
    for (const auto& c : topology_.cells) {
        const auto it = acc.find(c.id);
        out[c.id] = it == acc.end() ? 0.0 : std::clamp(it->second.first / it->second.second, 0.0, 1.0);
    }
    return out;
}

SnapshotResult Simulation::snapshot(int index) const
{
    SnapshotState s = prepare(index);
    SnapshotResult r;
    r.records = evaluate(s);
    r.power = stage(index, "power", [&] { return network_power(topology_.cells, loads(s), spec_.presets); });
    r.attachments = std::move(s.attachments);
    r.allocation = std::move(s.allocation);
    return r;
}

double nearest_rank(const std::vector<double>& sorted, double pct)
{
    if (sorted.empty())
        return 0.0;
    const double n = static_cast<double>(sorted.size());
    const auto rank = static_cast<std::size_t>(std::ceil(pct / 100.0 * n - 1e-9));
    return sorted[std::clamp<std::size_t>(rank, 1, sorted.size()) - 1];
}

Percentiles percentiles(std::vector<double> samples)
{
    Percentiles p;
    if (samples.empty())
        return p;
    std::sort(samples.begin(), samples.end());
    p.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(samples.size());
    p.p5 = nearest_rank(samples, 5.0);
    p.p50 = nearest_rank(samples, 50.0);
    p.p95 = nearest_rank(samples, 95.0);
    return p;
}

std::string config_hash(const RunSpec& spec)
{
    std::ostringstream text;
    save_scenario(text, spec.config, spec.topology ? &*spec.topology : nullptr);
    text << spec.n_snapshots;
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text.str()) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << h;
    return out.str();
}

MetricsReport run(const RunSpec& spec)
{
    const Simulation sim(spec);
    const int n = spec.n_snapshots;
    std::vector<std::optional<SnapshotResult>> results(n);
    std::vector<std::exception_ptr> errors(n);

    unsigned threads = spec.threads ? spec.threads : std::min(4u, std::max(1u, std::thread::hardware_concurrency()));
    threads = std::min<unsigned>(threads, n);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < n; i = next++) {
            try {
                results[i] = sim.snapshot(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    MetricsReport rep;
    rep.label = spec.label.empty() ? default_label(spec.config) : spec.label;
    rep.strategy = spec.config.strategy;
    rep.sixg_bandwidth_mhz = spec.config.sixg_bandwidth_mhz;
    rep.sixg_trx = spec.config.sixg_trx;
    rep.seed = spec.config.seed;
    rep.snapshots = n;
    rep.config_hash = config_hash(spec);

    std::vector<PowerReport> power;
    for (auto& r : results) {
        rep.ues.insert(rep.ues.end(), r->records.begin(), r->records.end());
        power.push_back(std::move(r->power));
    }
    rep.power = average(power);
    rep.first_attachments = std::move(results.front()->attachments);
    rep.first_allocation = std::move(results.front()->allocation);
    rep.first_allocation.index();

    std::vector<double> tput;
    tput.reserve(rep.ues.size());
    int outage = 0;
    for (const auto& u : rep.ues) {
        tput.push_back(u.throughput_mbps);
        if (u.outage())
            ++outage;
        else
            rep.attachment_share[u.technology] += 1.0;
    }
    rep.throughput = percentiles(tput);
    const double total = static_cast<double>(std::max<std::size_t>(rep.ues.size(), 1));
    for (auto& [tech, share] : rep.attachment_share)
        share /= total;
    rep.outage_share = outage / total;
    if (!spec.out_dir.empty())
        stage(n, "report", [&] {
            write_reports(spec.out_dir, rep);
            return 0;
        });
    return rep;
}

namespace {

double ratio(double value, double base)
{
    if (base == 0.0)
        return value == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    return value / base;
}

} // namespace

Comparison compare(const std::vector<MetricsReport>& reports, std::size_t baseline)
{
    if (baseline >= reports.size())
        throw ConfigError("compare: baseline index out of range");
    Comparison out;
    const MetricsReport& b = reports[baseline];
    out.baseline = b.label;
    for (const auto& r : reports) {
        if (r.seed != b.seed)
            out.warnings.push_back("seed mismatch: " + r.label + " ran with seed " + std::to_string(r.seed)
                                   + ", baseline " + b.label + " with " + std::to_string(b.seed));
        ComparisonRow row;
        row.label = r.label;
        row.strategy = r.strategy;
        row.sixg_bandwidth_mhz = r.sixg_bandwidth_mhz;
        row.sixg_trx = r.sixg_trx;
        row.seed = r.seed;
        row.throughput = r.throughput;
        row.power_kw = r.power.total_kw();
        row.throughput_ratio = {ratio(r.throughput.mean, b.throughput.mean), ratio(r.throughput.p5, b.throughput.p5),
                                ratio(r.throughput.p50, b.throughput.p50), ratio(r.throughput.p95, b.throughput.p95)};
        row.power_ratio = ratio(r.power.total_w, b.power.total_w);
        out.rows.push_back(row);
    }
    return out;
}

} // namespace fr3sim
