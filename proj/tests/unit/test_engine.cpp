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

#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

using namespace fr3sim;

namespace {

std::string summary_of(const RunSpec& spec)
{
    std::ostringstream os;
    write_summary_json(os, run(spec));
    return os.str();
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream f(p);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

MetricsReport fake(std::string label, double mean, double p50, double power_w, std::uint64_t seed = 1)
{
    MetricsReport r;
    r.label = std::move(label);
    r.seed = seed;
    r.throughput = {mean, mean / 4.0, p50, mean * 3.0};
    r.power.total_w = power_w;
    return r;
}

} // namespace

TEST_CASE("nearest-rank percentiles")
{
    const std::vector<double> v{15, 20, 35, 40, 50};
    CHECK(nearest_rank(v, 5.0) == 15);
    CHECK(nearest_rank(v, 30.0) == 20);
    CHECK(nearest_rank(v, 40.0) == 20);
    CHECK(nearest_rank(v, 50.0) == 35);
    CHECK(nearest_rank(v, 100.0) == 50);
    CHECK(nearest_rank({}, 50.0) == 0.0);

    std::vector<double> hundred;
    for (int i = 100; i >= 1; --i)
        hundred.push_back(i);
    const auto p = percentiles(hundred);
    CHECK(p.mean == doctest::Approx(50.5));
    CHECK(p.p5 == 5);
    CHECK(p.p50 == 50);
    CHECK(p.p95 == 95);
}

TEST_CASE("comparison ratios")
{
    const auto c = compare({fake("base", 10.0, 8.0, 1000.0), fake("new", 25.0, 12.0, 1500.0),
                            fake("zero", 0.0, 0.0, 0.0)},
                           0);
    CHECK(c.baseline == "base");
    REQUIRE(c.rows.size() == 3);
    CHECK(c.rows[0].throughput_ratio.mean == 1.0);
    CHECK(c.rows[0].power_ratio == 1.0);
    CHECK(c.rows[1].throughput_ratio.mean == doctest::Approx(2.5));
    CHECK(c.rows[1].throughput_ratio.p50 == doctest::Approx(1.5));
    CHECK(c.rows[1].power_ratio == doctest::Approx(1.5));
    CHECK(c.rows[1].power_kw == doctest::Approx(1.5));
    CHECK(c.warnings.empty());

    const auto z = compare({fake("zero", 0.0, 0.0, 0.0), fake("zero2", 0.0, 0.0, 0.0)}, 0);
    CHECK(z.rows[1].throughput_ratio.mean == 1.0);
    CHECK(z.rows[1].power_ratio == 1.0);

    const auto w = compare({fake("a", 1.0, 1.0, 1.0, 1), fake("b", 1.0, 1.0, 1.0, 2)}, 0);
    CHECK(w.warnings.size() == 1);
    CHECK_THROWS_AS(compare({fake("a", 1.0, 1.0, 1.0)}, 3), ConfigError);

    std::ostringstream os;
    write_comparison_csv(os, c);
    CHECK(os.str().rfind("label,strategy,", 0) == 0);
    CHECK(os.str().find("\nnew,FourG_FiveG,200,128,1,25.0,6.25,12.0,75.0,1.5,2.5,") != std::string::npos);
}

TEST_CASE("repeated runs produce byte-identical summaries")
{
    RunSpec spec = fr3sim::testing::three_cell_spec();
    spec.n_snapshots = 3;
    const std::string a = summary_of(spec);
    CHECK(a == summary_of(spec));
    spec.threads = 3;
    CHECK(a == summary_of(spec));
    spec.config.seed += 1;
    CHECK(a != summary_of(spec));
}

TEST_CASE("summary content")
{
    RunSpec spec = fr3sim::testing::three_cell_spec();
    spec.n_snapshots = 2;
    const MetricsReport r = run(spec);
    CHECK(r.ues.size() == 20);
    CHECK(r.label == "FourG_FiveG");
    CHECK(r.power.radios.size() == 3);
    std::ostringstream os;
    write_summary_json(os, r);
    const auto j = nlohmann::json::parse(os.str());
    CHECK(j["snapshots"] == 2);
    CHECK(j["ue_samples"] == 20);
    CHECK(j["percentile_method"] == "nearest-rank");
    CHECK(j["throughput_mbps"]["mean"].get<double>() == doctest::Approx(r.throughput.mean));
    const double shares = j["attachment_share"]["4G"].get<double>() + j["attachment_share"]["5G"].get<double>()
        + j["attachment_share"]["6G"].get<double>() + j["attachment_share"]["outage"].get<double>();
    CHECK(shares == doctest::Approx(1.0));
    CHECK(j["power"]["total_kw"].get<double>() == doctest::Approx(r.power.total_kw()));
    CHECK(j["config_hash"].get<std::string>().size() == 16);
}

TEST_CASE("a 4G-only network attaches every UE to 4G")
{
    RunSpec spec;
    spec.config.strategy = Strategy::FourG;
    spec.config.seed = 2;
    spec.n_snapshots = 1;
    const MetricsReport r = run(spec);
    CHECK(r.attachment_share.at(Technology::FourG) + r.outage_share == doctest::Approx(1.0));
    CHECK(r.attachment_share.count(Technology::FiveG) == 0);
    CHECK(r.label == "FourG");
    for (const auto& rad : r.power.radios)
        CHECK(rad.technology == Technology::FourG);
}

TEST_CASE("reports land in the output directory")
{
    const auto dir = std::filesystem::temp_directory_path() / "fr3sim_engine_reports";
    std::filesystem::remove_all(dir);
    RunSpec spec = fr3sim::testing::three_cell_spec();
    spec.out_dir = dir.string();
    const MetricsReport r = run(spec);
    for (const char* f : {"ue_metrics.csv", "power.csv", "summary.json", "attachments.csv", "allocation.csv"})
        CHECK(std::filesystem::exists(dir / f));
    const std::string ue = slurp(dir / "ue_metrics.csv");
    CHECK(ue.rfind("strategy,snapshot,ue_id,tech,cell,", 0) == 0);
    CHECK(std::count(ue.begin(), ue.end(), '\n') == 11);
    const std::string power = slurp(dir / "power.csv");
    CHECK(std::count(power.begin(), power.end(), '\n') == 4);
    std::ostringstream json;
    write_summary_json(json, r);
    CHECK(slurp(dir / "summary.json") == json.str());
    std::filesystem::remove_all(dir);
}

TEST_CASE("failures are tagged with their stage")
{
    RunSpec spec = fr3sim::testing::three_cell_spec();
    spec.out_dir = "/proc/fr3sim/not-writable";
    try {
        run(spec);
        FAIL("expected a StageError");
    } catch (const StageError& e) {
        CHECK(e.stage() == "report");
        CHECK(std::string(e.what()).find("stage report") != std::string::npos);
    }

    RunSpec bad;
    bad.config.sixg_bandwidth_mhz = 300;
    bad.config.strategy = Strategy::CoLoc6G_UMa;
    try {
        Simulation sim(bad);
        FAIL("expected a StageError");
    } catch (const StageError& e) {
        CHECK(e.stage() == "scenario");
        CHECK(e.snapshot() == -1);
    }

    spec.n_snapshots = 0;
    CHECK_THROWS_AS(Simulation{spec}, ConfigError);
}

TEST_CASE("default labels")
{
    ScenarioConfig c;
    CHECK(default_label(c) == "FourG_FiveG");
    c.strategy = Strategy::NonCoLoc6G_UPi;
    c.sixg_bandwidth_mhz = 400;
    c.sixg_trx = 256;
    CHECK(default_label(c) == "NonCoLoc6G_UPi@400MHz/256TRX");
}
