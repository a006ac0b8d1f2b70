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

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace fr3sim;

namespace {

struct Options {
    std::string config;
    std::string strategy;
    std::vector<std::string> strategies;
    std::vector<int> sixg_bw;
    std::vector<int> sixg_trx;
    std::uint64_t seed = 1;
    int snapshots = 10;
    std::string out = "out";
    std::string baseline = "FourG_FiveG";
    std::string presets;
    std::string mcs;
    bool sweep = false;
    bool codebooks = false;
};

Strategy strategy_or_throw(const std::string& text)
{
    const auto s = parse_strategy(text);
    if (!s)
        throw ConfigError("--strategy: '" + text
                          + "' is not one of FourG, FourG_FiveG, CoLoc6G_UMa, NonCoLoc6G_UMi, NonCoLoc6G_UPi");
    return *s;
}

RunSpec base_spec(const Options& o, const CLI::App& sub)
{
    RunSpec spec;
    if (!o.config.empty()) {
        ScenarioFile f = load_scenario(o.config);
        spec.config = f.config;
        spec.topology = std::move(f.topology);
    }
    if (sub.count("--seed"))
        spec.config.seed = o.seed;
    if (!o.sixg_bw.empty())
        spec.config.sixg_bandwidth_mhz = o.sixg_bw.front();
    if (!o.sixg_trx.empty())
        spec.config.sixg_trx = o.sixg_trx.front();
    spec.n_snapshots = o.snapshots;
    if (!o.presets.empty())
        spec.presets = PowerPresets::load(o.presets);
    if (!o.mcs.empty())
        spec.mcs = McsTable::load(o.mcs);
    return spec;
}

void print_summary(const MetricsReport& r)
{
    std::cout << r.label << ": mean " << r.throughput.mean << " Mbps, p5 " << r.throughput.p5 << ", p50 "
              << r.throughput.p50 << ", p95 " << r.throughput.p95 << ", power " << r.power.total_kw() << " kW\n";
}

int cmd_run(const Options& o, const CLI::App& sub)
{
    RunSpec spec = base_spec(o, sub);
    if (!o.strategy.empty())
        spec.config.strategy = strategy_or_throw(o.strategy);
    validate(spec.config);
    spec.out_dir = o.out;
    print_summary(run(spec));
    return 0;
}

int cmd_compare(const Options& o, const CLI::App& sub)
{
    const RunSpec base = base_spec(o, sub);
    std::vector<RunSpec> specs;
    auto add = [&](Strategy s, int bw, int trx) {
        RunSpec spec = base;
        spec.config.strategy = s;
        spec.config.sixg_bandwidth_mhz = bw;
        spec.config.sixg_trx = trx;
        validate(spec.config);
        spec.label = default_label(spec.config);
        std::string dir = spec.label;
        std::replace_if(dir.begin(), dir.end(), [](char c) { return c == '@' || c == '/'; }, '_');
        spec.out_dir = (std::filesystem::path(o.out) / dir).string();
        specs.push_back(std::move(spec));
    };
    std::vector<std::string> names = o.strategies;
    if (o.sweep || names.empty())
        names = {"FourG", "FourG_FiveG", "CoLoc6G_UMa", "NonCoLoc6G_UMi", "NonCoLoc6G_UPi"};
    std::vector<int> bws = o.sixg_bw;
    std::vector<int> trxs = o.sixg_trx;
    if (bws.empty())
        bws = o.sweep ? std::vector<int>{200, 400} : std::vector<int>{base.config.sixg_bandwidth_mhz};
    if (trxs.empty())
        trxs = o.sweep ? std::vector<int>{128, 256} : std::vector<int>{base.config.sixg_trx};
    for (const auto& name : names) {
        const Strategy s = strategy_or_throw(name);
        if (!has_sixg(s)) {
            add(s, base.config.sixg_bandwidth_mhz, base.config.sixg_trx);
            continue;
        }
        for (int bw : bws)
            for (int trx : trxs)
                add(s, bw, trx);
    }

    std::vector<MetricsReport> reports;
    std::size_t baseline = 0;
    for (const auto& spec : specs) {
        reports.push_back(run(spec));
        print_summary(reports.back());
        if (reports.back().label == o.baseline)
            baseline = reports.size() - 1;
    }
    const Comparison c = compare(reports, baseline);
    for (const auto& w : c.warnings)
        std::cerr << "warning: " << w << '\n';
    std::filesystem::create_directories(o.out);
    std::ofstream f(std::filesystem::path(o.out) / "comparison.csv");
    write_comparison_csv(f, c);
    return 0;
}

int cmd_dump(const Options& o, const CLI::App& sub)
{
    RunSpec spec = base_spec(o, sub);
    if (!o.strategy.empty())
        spec.config.strategy = strategy_or_throw(o.strategy);
    validate(spec.config);
    const Topology topo = spec.topology ? *spec.topology : generate_topology(spec.config);
    std::filesystem::create_directories(o.out);
    {
        std::ofstream f(std::filesystem::path(o.out) / "scenario.yaml");
        save_scenario(f, spec.config, &topo);
    }
    if (o.codebooks) {
        const auto beams = build_beams(topo);
        const auto dir = std::filesystem::path(o.out) / "codebooks";
        std::filesystem::create_directories(dir);
        for (std::size_t i = 0; i < topo.cells.size(); ++i) {
            std::ofstream f(dir / ("cell_" + std::to_string(topo.cells[i].id) + "_csirs.json"));
            write_codebook(f, beams[i].csirs);
        }
    }
    std::cout << topo.sites.size() << " sites, " << topo.cells.size() << " cells written to " << o.out << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"fr3sim: multi-layer 4G/5G/6G system-level simulator"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool multi) {
        sub->add_option("--config", o.config, "YAML scenario file")->check(CLI::ExistingFile);
        if (multi) {
            sub->add_option("--strategy", o.strategies, "Strategies to compare (repeatable)");
            sub->add_option("--sixg-bw", o.sixg_bw, "6G bandwidth in MHz")->check(CLI::IsMember({200, 400}));
            sub->add_option("--sixg-trx", o.sixg_trx, "6G TRX count")->check(CLI::IsMember({128, 256}));
        } else {
            sub->add_option("--strategy", o.strategy, "Deployment strategy");
            sub->add_option("--sixg-bw", o.sixg_bw, "6G bandwidth in MHz")
                ->check(CLI::IsMember({200, 400}))
                ->expected(1);
            sub->add_option("--sixg-trx", o.sixg_trx, "6G TRX count")->check(CLI::IsMember({128, 256}))->expected(1);
        }
        sub->add_option("--seed", o.seed, "Run seed");
        sub->add_option("--snapshots", o.snapshots, "Monte-Carlo snapshots")->check(CLI::PositiveNumber);
        sub->add_option("--out", o.out, "Output directory");
        sub->add_option("--presets", o.presets, "Power preset file")->check(CLI::ExistingFile);
        sub->add_option("--mcs", o.mcs, "MCS table file")->check(CLI::ExistingFile);
    };

    auto* run_cmd = app.add_subcommand("run", "Simulate one strategy");
    common(run_cmd, false);
    auto* cmp_cmd = app.add_subcommand("compare", "Simulate several strategies and tabulate ratios");
    common(cmp_cmd, true);
    cmp_cmd->add_option("--baseline", o.baseline, "Label of the reference row");
    cmp_cmd->add_flag("--sweep", o.sweep, "All strategies at 200/400 MHz and 128/256 TRX");
    auto* dump_cmd = app.add_subcommand("dump-scenario", "Write the generated topology as an explicit scenario");
    common(dump_cmd, false);
    dump_cmd->add_flag("--codebooks", o.codebooks, "Also dump CSI-RS codebooks");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*run_cmd)
            return cmd_run(o, *run_cmd);
        if (*cmp_cmd)
            return cmd_compare(o, *cmp_cmd);
        return cmd_dump(o, *dump_cmd);
    } catch (const StageError& e) {
        std::cerr << "error [" << e.stage() << "]: " << e.what() << '\n';
        return 3;
    } catch (const ConfigError& e) {
        std::cerr << "error [config]: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
