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

#include "fixtures.hpp"
#include "sinr_oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

using namespace fr3sim;
using fr3sim::testing::brute_force_sinr;

TEST_CASE("MIESM two-point reference")
{
    CHECK(effective_sinr_db({1.0, 10.0}) == doctest::Approx(5.67).epsilon(0.002));
    const double expect = std::exp2((std::log2(2.0) + std::log2(11.0)) / 2.0) - 1.0;
    CHECK(effective_sinr_db({1.0, 10.0}) == doctest::Approx(10.0 * std::log10(expect)));
}

TEST_CASE("MIESM fixed point and bounds")
{
    for (double s : {1e-4, 0.5, 1.0, 7.3, 1e3, 1e6})
        CHECK(effective_sinr_db(std::vector<double>(17, s)) == 10.0 * std::log10(s));
    std::mt19937_64 rng(3);
    std::lognormal_distribution<double> d(0.0, 2.0);
    for (int t = 0; t < 500; ++t) {
        std::vector<double> g(1 + t % 40);
        for (auto& s : g)
            s = d(rng);
        const double e = effective_sinr_db(g, 1.0 + t % 3);
        const auto [lo, hi] = std::minmax_element(g.begin(), g.end());
        CHECK(e >= 10.0 * std::log10(*lo) - 1e-12);
        CHECK(e <= 10.0 * std::log10(*hi) + 1e-12);
        double mean = 0.0;
        for (double s : g)
            mean += s / g.size();
        CHECK(e <= 10.0 * std::log10(mean) + 1e-9);
    }
    CHECK_THROWS_AS(effective_sinr_db({}), ContractViolation);
}

TEST_CASE("MCS selection thresholds are inclusive")
{
    const McsTable t = McsTable::cqi_table2();
    REQUIRE(t.entries().size() == 15);
    for (std::size_t i = 0; i < t.entries().size(); ++i) {
        const auto& e = t.entries()[i];
        CHECK(t.select(e.sinr_threshold_db) == static_cast<int>(i));
        CHECK(sinr_to_mcs(e.sinr_threshold_db, t) == e.efficiency);
        CHECK(t.select(std::nextafter(e.sinr_threshold_db, -1e9)) == static_cast<int>(i) - 1);
    }
    CHECK(sinr_to_mcs(-6.71, t) == 0.0);
    CHECK(t.select(-30.0) == -1);
    CHECK(sinr_to_mcs(40.0, t) == 7.4063);
}

TEST_CASE("throughput is layers times efficiency times bandwidth")
{
    CHECK(ue_throughput_mbps(100, {2.0}, 180e3, 1.0) == doctest::Approx(36.0));
    CHECK(ue_throughput_mbps(100, {2.0, 2.0}, 180e3, 1.0) == doctest::Approx(72.0));
    CHECK(ue_throughput_mbps(100, {2.0}, 180e3, 0.86) == doctest::Approx(36.0 * 0.86));
    CHECK(ue_throughput_mbps(0, {5.0, 5.0}, 180e3, 0.86) == 0.0);
    double prev = 0.0;
    for (int n = 1; n <= 273; ++n) {
        const double r = ue_throughput_mbps(n, {3.3223, 1.4766}, 360e3, 0.86);
        CHECK(r > prev);
        prev = r;
    }
}

TEST_CASE("MCS table validation")
{
    CHECK_THROWS_AS(McsTable({}), ConfigError);
    CHECK_THROWS_AS(McsTable({{0.0, 1.0}, {0.0, 2.0}}), ConfigError);
    CHECK_THROWS_AS(McsTable({{0.0, 2.0}, {1.0, 1.0}}), ConfigError);
    CHECK_THROWS_AS(McsTable({{0.0, 8.0}}), ConfigError);
    CHECK_THROWS_AS(McsTable({{0.0, 0.0}}), ConfigError);
    CHECK_NOTHROW(McsTable({{-3.0, 0.5}, {3.0, 7.4063}}));
}

TEST_CASE("shipped MCS table equals the built-in one")
{
    CHECK(McsTable::load(std::string(FR3SIM_DATA_DIR) + "/mcs_cqi_table2.yaml") == McsTable::cqi_table2());
    CHECK_THROWS_AS(McsTable::load("/nonexistent/mcs.yaml"), ConfigError);
}

TEST_CASE("PRB noise floor")
{
    Cell c;
    c.scs_khz = 30.0;
    CHECK(prb_noise_dbm(c, 9.0) == doctest::Approx(-174.0 + 10.0 * std::log10(360e3) + 9.0));
}

namespace {

struct Prepared {
    RunSpec spec;
    Simulation sim;
    SnapshotState state;

    explicit Prepared(RunSpec s) : spec(std::move(s)), sim(spec), state(sim.prepare(0)) {}
};

} // namespace

TEST_CASE("SINR engine matches the brute-force sum")
{
    const Prepared p(fr3sim::testing::three_cell_spec());
    const SinrEngine engine(p.sim.topology(), p.sim.beams(), p.state.ues, p.state.attachments, p.state.allocation,
                            p.state.links, p.spec.link);
    int checked = 0;
    bool interfered = false;
    for (const auto& ue : p.state.ues) {
        const auto g = engine.grid(ue.id);
        REQUIRE(g.prbs == p.state.allocation.prbs(ue.id));
        for (std::size_t k = 0; k < g.prbs.size(); ++k)
            for (int layer = 0; layer < 2; ++layer) {
                const auto t = brute_force_sinr(p.sim.topology(), p.sim.beams(), p.state.ues, p.state.attachments,
                                                p.state.allocation, p.state.links, p.spec.link, ue.id, g.prbs[k],
                                                layer);
                interfered = interfered || (t.intra_mw > 0.0 && t.inter_mw > 0.0);
                CHECK(g.layers[layer][k] == doctest::Approx(t.sinr()).epsilon(1e-9));
                CHECK(engine.per_prb_sinr(ue.id, g.prbs[k], layer) == g.layers[layer][k]);
                ++checked;
            }
    }
    CHECK(checked > 1000);
    CHECK(interfered);
}

TEST_CASE("an isolated cell sees pure SNR")
{
    RunSpec spec = fr3sim::testing::three_cell_spec();
    spec.topology->cells.resize(1);
    spec.topology->traffic.resize(1);
    spec.topology->fixed_ues->resize(1);
    const Prepared p(spec);
    REQUIRE_FALSE(p.state.attachments[0].outage());
    const SinrEngine engine(p.sim.topology(), p.sim.beams(), p.state.ues, p.state.attachments, p.state.allocation,
                            p.state.links, p.spec.link);
    const auto g = engine.grid(0);
    REQUIRE(g.prbs.size() == 120);
    for (std::size_t k = 0; k < g.prbs.size(); ++k) {
        const auto t = brute_force_sinr(p.sim.topology(), p.sim.beams(), p.state.ues, p.state.attachments,
                                        p.state.allocation, p.state.links, p.spec.link, 0, g.prbs[k], 0);
        CHECK(t.intra_mw + t.inter_mw == 0.0);
        CHECK(g.layers[0][k] == doctest::Approx(t.signal_mw / t.noise_mw).epsilon(1e-9));
    }
}

TEST_CASE("scaling every power and the noise together leaves SINR unchanged")
{
    const Prepared p(fr3sim::testing::three_cell_spec());
    Topology loud = p.sim.topology();
    for (auto& c : loud.cells)
        c.tx_power_dbm += 30.0;
    LinkParams lp = p.spec.link;
    lp.noise_figure_db += 30.0;
    const SinrEngine a(p.sim.topology(), p.sim.beams(), p.state.ues, p.state.attachments, p.state.allocation,
                       p.state.links, p.spec.link);
    const SinrEngine b(loud, p.sim.beams(), p.state.ues, p.state.attachments, p.state.allocation, p.state.links, lp);
    for (const auto& ue : p.state.ues) {
        const auto ga = a.grid(ue.id);
        const auto gb = b.grid(ue.id);
        for (int layer = 0; layer < 2; ++layer)
            for (std::size_t k = 0; k < ga.prbs.size(); ++k)
                CHECK(gb.layers[layer][k] == doctest::Approx(ga.layers[layer][k]).epsilon(1e-9));
    }
}

TEST_CASE("other technologies do not interfere")
{
    const Prepared p(fr3sim::testing::three_cell_spec());
    Topology topo = p.sim.topology();
    auto beams = p.sim.beams();
    Cell lte = topo.cells[0];
    lte.id = 99;
    lte.technology = Technology::FourG;
    lte.n_trx = 4;
    lte.n_prb = 273;
    lte.array = array_for(Technology::FourG, 4, 6.0);
    lte.n_ssb_beams = 1;
    lte.n_csirs_beams = 4;
    topo.cells.push_back(lte);
    beams.push_back({build_codebook(lte.array, BeamKind::SSB, 1), build_codebook(lte.array, BeamKind::CSIRS, 4)});

    auto ues = p.state.ues;
    auto att = p.state.attachments;
    UserTerminal extra = ues[0];
    extra.id = static_cast<int>(ues.size());
    ues.push_back(extra);
    Attachment a;
    a.ue_id = extra.id;
    a.cell_id = 99;
    a.technology = Technology::FourG;
    a.csirs_pair = {0, 0};
    att.push_back(a);
    Allocation alloc = p.state.allocation;
    std::vector<int> all(273);
    std::iota(all.begin(), all.end(), 0);
    alloc.beams[{99, 0}][extra.id] = all;
    alloc.index();
    LinkTable links = p.state.links;
    links.resize(ues.size());

    const SinrEngine base(p.sim.topology(), p.sim.beams(), p.state.ues, p.state.attachments, p.state.allocation,
                          p.state.links, p.spec.link);
    const SinrEngine mixed(topo, beams, ues, att, alloc, links, p.spec.link);
    for (const auto& ue : p.state.ues) {
        const auto g0 = base.grid(ue.id);
        const auto g1 = mixed.grid(ue.id);
        CHECK(g0.layers[0] == g1.layers[0]);
        CHECK(g0.layers[1] == g1.layers[1]);
    }
}

TEST_CASE("asking for an unscheduled PRB is a contract violation")
{
    const Prepared p(fr3sim::testing::three_cell_spec());
    const SinrEngine engine(p.sim.topology(), p.sim.beams(), p.state.ues, p.state.attachments, p.state.allocation,
                            p.state.links, p.spec.link);
    const auto& prbs = p.state.allocation.prbs(3);
    REQUIRE(prbs.size() == 60);
    int free_prb = 0;
    while (std::binary_search(prbs.begin(), prbs.end(), free_prb))
        ++free_prb;
    CHECK_THROWS_AS(engine.per_prb_sinr(3, free_prb, 0), ContractViolation);
    CHECK_NOTHROW(engine.per_prb_sinr(3, prbs.front(), 1));
}

TEST_CASE("link table lookups")
{
    LinkTable t(2);
    LinkState a, b;
    a.cell_id = 7;
    b.cell_id = 3;
    t.set(1, {a, b});
    CHECK(t.of(1).front().cell_id == 3);
    REQUIRE(t.find(1, 7) != nullptr);
    CHECK(t.find(1, 7)->cell_id == 7);
    CHECK(t.find(1, 5) == nullptr);
    CHECK(t.find(0, 7) == nullptr);
}

TEST_CASE("interference-limited SINR is invariant to a common power scale")
{
    const Prepared p(fr3sim::testing::three_cell_spec());
    auto scaled = [&](double db) {
        Topology t = p.sim.topology();
        for (auto& c : t.cells)
            c.tx_power_dbm += db;
        return t;
    };
    const Topology t30 = scaled(30.0);
    const Topology t60 = scaled(60.0);
    const SinrEngine a(t30, p.sim.beams(), p.state.ues, p.state.attachments, p.state.allocation, p.state.links,
                       p.spec.link);
    const SinrEngine b(t60, p.sim.beams(), p.state.ues, p.state.attachments, p.state.allocation, p.state.links,
                       p.spec.link);
    int compared = 0;
    for (const auto& ue : p.state.ues) {
        const auto ga = a.grid(ue.id);
        const auto gb = b.grid(ue.id);
        for (std::size_t k = 0; k < ga.prbs.size(); ++k) {
            const auto t = brute_force_sinr(t30, p.sim.beams(), p.state.ues, p.state.attachments, p.state.allocation,
                                            p.state.links, p.spec.link, ue.id, ga.prbs[k], 0);
            if (t.intra_mw + t.inter_mw < 100.0 * t.noise_mw)
                continue;
            CHECK(gb.layers[0][k] == doctest::Approx(ga.layers[0][k]).epsilon(0.011));
            ++compared;
        }
    }
    CHECK(compared > 100);
}

TEST_CASE("6G transmit power does not touch 4G or 5G SINR")
{
    RunSpec spec;
    spec.config.strategy = Strategy::CoLoc6G_UMa;
    spec.config.seed = 5;
    spec.n_snapshots = 1;
    const Prepared p(spec);
    Topology hot = p.sim.topology();
    for (auto& c : hot.cells)
        if (c.technology == Technology::SixG)
            c.tx_power_dbm -= 7.0;
    const SinrEngine a(p.sim.topology(), p.sim.beams(), p.state.ues, p.state.attachments, p.state.allocation,
                       p.state.links, p.spec.link);
    const SinrEngine b(hot, p.sim.beams(), p.state.ues, p.state.attachments, p.state.allocation, p.state.links,
                       p.spec.link);
    int legacy = 0;
    int changed_6g = 0;
    for (const auto& ue : p.state.ues) {
        const auto& att = p.state.attachments[ue.id];
        if (att.outage())
            continue;
        const auto ga = a.grid(ue.id);
        const auto gb = b.grid(ue.id);
        if (att.technology == Technology::SixG) {
            changed_6g += ga.layers[0] != gb.layers[0];
            continue;
        }
        ++legacy;
        CHECK(ga.layers[0] == gb.layers[0]);
        CHECK(ga.layers[1] == gb.layers[1]);
    }
    CHECK(legacy > 100);
    CHECK(changed_6g > 100);
}
