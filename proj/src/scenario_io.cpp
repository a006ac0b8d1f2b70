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

#include "fr3sim/scenario_io.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

namespace fr3sim {

namespace {

// An undefined node, as yaml-cpp returns for absent keys.
YAML::Node missing()
{
    const YAML::Node map(YAML::NodeType::Map);
    return map["absent"];
}

// A mapping being read: tracks which keys were consumed so leftovers can be
// reported as unknown.
class Section {
public:
    Section(YAML::Node node, std::string source, std::string path)
        : node_(std::move(node)), source_(std::move(source)), path_(std::move(path))
    {
        if (node_ && !node_.IsNull() && !node_.IsMap())
            fail(node_, path_, "expected a mapping");
    }

    [[noreturn]] void fail(const YAML::Node& at, const std::string& field, const std::string& what) const
    {
        throw ConfigError(source_ + ":" + std::to_string(at.Mark().line + 1) + ": " + field + ": " + what);
    }

    std::string field(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

    YAML::Node take(const std::string& key)
    {
        seen_.insert(key);
        if (!node_ || node_.IsNull())
            return missing();
        const YAML::Node& view = node_;
        return view[key];
    }

    bool has(const std::string& key) const
    {
        if (!node_ || node_.IsNull())
            return false;
        const YAML::Node& view = node_;
        return static_cast<bool>(view[key]);
    }

    template <typename T>
    void get(const std::string& key, T& out)
    {
        const YAML::Node n = take(key);
        if (!n)
            return;
        try {
            out = n.as<T>();
        } catch (const YAML::Exception&) {
            fail(n, field(key), "wrong type");
        }
    }

    template <typename T>
    T require(const std::string& key)
    {
        const YAML::Node n = take(key);
        if (!n)
            fail(node_, field(key), "missing");
        T out{};
        get_from(n, key, out);
        return out;
    }

    template <typename T>
    void get_from(const YAML::Node& n, const std::string& key, T& out) const
    {
        try {
            out = n.as<T>();
        } catch (const YAML::Exception&) {
            fail(n, field(key), "wrong type");
        }
    }

    Section child(const std::string& key) { return Section(take(key), source_, field(key)); }

    void finish() const
    {
        if (!node_ || node_.IsNull())
            return;
        for (const auto& kv : node_) {
            const auto key = kv.first.as<std::string>();
            if (!seen_.count(key))
                fail(kv.first, field(key), "unknown field");
        }
    }

    const YAML::Node& node() const { return node_; }
    const std::string& source() const { return source_; }

private:
    YAML::Node node_;
    std::string source_;
    std::string path_;
    std::set<std::string> seen_;
};

template <typename Parse>
auto enum_field(Section& s, const std::string& key, Parse parse, const char* allowed)
{
    const YAML::Node n = s.take(key);
    using R = decltype(*parse(std::string_view{}));
    std::optional<std::remove_cvref_t<R>> out;
    if (!n)
        return out;
    const auto text = n.as<std::string>();
    out = parse(text);
    if (!out)
        s.fail(n, s.field(key), "'" + text + "' is not one of " + allowed);
    return out;
}

void read_fourg(Section s, FourGLayerConfig& c)
{
    s.get("sites", c.sites);
    s.get("cells", c.cells);
    s.get("cells_10mhz", c.cells_10mhz);
    s.get("carriers_ghz", c.carriers_ghz);
    s.get("tx_min_dbm", c.tx_min_dbm);
    s.get("tx_median_dbm", c.tx_median_dbm);
    s.get("tx_max_dbm", c.tx_max_dbm);
    if (const YAML::Node mix = s.take("trx_mix")) {
        if (!mix.IsSequence())
            s.fail(mix, s.field("trx_mix"), "expected a list");
        c.trx_mix.clear();
        for (const auto& e : mix) {
            Section row(e, s.source(), s.field("trx_mix[]"));
            c.trx_mix.emplace_back(row.require<int>("trx"), row.require<int>("cells"));
            row.finish();
        }
    }
    s.get("height_min_m", c.height_min_m);
    s.get("height_max_m", c.height_max_m);
    s.get("min_site_distance_m", c.min_site_distance_m);
    s.finish();
}

void read_fiveg(Section s, FiveGLayerConfig& c)
{
    s.get("sites", c.sites);
    s.get("sectors", c.sectors);
    s.get("carrier_ghz", c.carrier_ghz);
    s.get("bandwidth_mhz", c.bandwidth_mhz);
    s.get("n_prb", c.n_prb);
    s.get("n_trx", c.n_trx);
    s.get("ssb_beams", c.ssb_beams);
    s.get("csirs_beams", c.csirs_beams);
    s.get("tx_min_dbm", c.tx_min_dbm);
    s.get("tx_mean_dbm", c.tx_mean_dbm);
    s.get("tx_max_dbm", c.tx_max_dbm);
    s.get("height_min_m", c.height_min_m);
    s.get("height_max_m", c.height_max_m);
    s.get("min_site_distance_m", c.min_site_distance_m);
    s.get("min_distance_to_4g_m", c.min_distance_to_4g_m);
    s.finish();
}

void read_sixg(Section s, ScenarioConfig& cfg)
{
    auto& c = cfg.sixg;
    s.get("bandwidth_mhz", cfg.sixg_bandwidth_mhz);
    s.get("trx", cfg.sixg_trx);
    s.get("cells", c.cells);
    s.get("carrier_ghz", c.carrier_ghz);
    s.get("n_prb", c.n_prb);
    s.get("tx_macro_dbm", c.tx_macro_dbm);
    s.get("tx_pico_dbm", c.tx_pico_dbm);
    s.get("tx_boost_400mhz_db", c.tx_boost_400mhz_db);
    s.get("height_umi_m", c.height_umi_m);
    s.get("height_upi_m", c.height_upi_m);
    s.get("setback_m", c.setback_m);
    s.get("min_site_distance_m", c.min_site_distance_m);
    s.finish();
}

void read_ues(Section s, UeConfig& c)
{
    s.get("baseline_count", c.baseline_count);
    s.get("indoor_probability", c.indoor_probability);
    s.get("height_m", c.height_m);
    s.get("count_log_sigma", c.count_log_sigma);
    s.get("prb_usage_median", c.prb_usage_median);
    s.get("prb_usage_log_sigma", c.prb_usage_log_sigma);
    s.get("prb_usage_load_exponent", c.prb_usage_load_exponent);
    s.finish();
}

void read_hotspots(Section s, HotspotConfig& c)
{
    s.get("count", c.count);
    s.get("ues_per_hotspot", c.ues_per_hotspot);
    s.get("radius_m", c.radius_m);
    s.get("min_separation_m", c.min_separation_m);
    s.get("max_attempts", c.max_attempts);
    s.finish();
}

YAML::Node list(Section& s, const std::string& key)
{
    const YAML::Node n = s.take(key);
    if (n && !n.IsSequence())
        s.fail(n, s.field(key), "expected a list");
    return n;
}

Topology read_topology(Section s, const ScenarioConfig& cfg)
{
    Topology t;
    const double area = cfg.area_km2 * 1e6;
    t.width_m = std::sqrt(area * cfg.aspect_ratio);
    t.height_m = area / t.width_m;
    s.get("width_m", t.width_m);
    s.get("height_m", t.height_m);
    if (!(t.width_m > 0.0 && t.height_m > 0.0))
        s.fail(s.node(), s.field("width_m"), "service area must be positive");

    for (const auto& n : list(s, "sites")) {
        Section r(n, s.source(), s.field("sites[]"));
        Site site;
        site.id = r.require<int>("id");
        site.position = {r.require<double>("x"), r.require<double>("y")};
        site.height = r.require<double>("height");
        if (auto layer = enum_field(r, "layer", parse_technology, "4G, 5G, 6G"))
            site.layer = *layer;
        r.finish();
        if (!t.contains(site.position))
            r.fail(n, r.field("x"), "site outside the service area");
        if (!(site.height > 0.0))
            r.fail(n, r.field("height"), "must be positive");
        for (const auto& o : t.sites)
            if (o.id == site.id)
                r.fail(n, r.field("id"), "duplicate site id " + std::to_string(site.id));
        t.sites.push_back(site);
    }

    for (const auto& n : list(s, "cells")) {
        Section r(n, s.source(), s.field("cells[]"));
        Cell c;
        c.id = r.require<int>("id");
        c.site_id = r.require<int>("site");
        r.get("sector", c.sector);
        c.azimuth_deg = r.require<double>("azimuth_deg");
        const auto tech = enum_field(r, "tech", parse_technology, "4G, 5G, 6G");
        if (!tech)
            r.fail(n, r.field("tech"), "missing");
        c.technology = *tech;
        c.carrier_ghz = r.require<double>("carrier_ghz");
        c.bandwidth_mhz = r.require<double>("bandwidth_mhz");
        c.n_prb = r.require<int>("n_prb");
        c.n_trx = r.require<int>("n_trx");
        c.tx_power_dbm = r.require<double>("tx_power_dbm");
        c.n_ssb_beams = r.require<int>("ssb_beams");
        c.n_csirs_beams = r.require<int>("csirs_beams");
        double tilt = -1.0;
        r.get("downtilt_deg", tilt);
        TrafficArea area;
        // Legacy cells always carry measured traffic; 6G radios only when listed.
        const bool has_traffic = c.technology != Technology::SixG || r.has("baseline_ues");
        r.get("baseline_ues", area.baseline_ues);
        area.prb_used = c.n_prb / 2;
        r.get("prb_used", area.prb_used);
        const auto cls = enum_field(r, "class", parse_deployment_class, "UMa, UMi, UPi");

        const Site* site = nullptr;
        for (const auto& st : t.sites)
            if (st.id == c.site_id)
                site = &st;
        if (!site)
            r.fail(n, r.field("site"), "unknown site " + std::to_string(c.site_id));
        c.position = site->position;
        c.height = site->height;
        c.deployment_class = cls ? *cls : (site->height > 15.0 ? DeploymentClass::UMa : DeploymentClass::UMi);
        if (tilt < 0.0)
            tilt = c.deployment_class == DeploymentClass::UMa ? cfg.downtilt_uma_deg : cfg.downtilt_umi_deg;
        c.scs_khz = numerology_scs_khz(c.bandwidth_mhz, c.n_prb);
        c.array = array_for(c.technology, c.n_trx, tilt);
        r.finish();
        if (c.azimuth_deg < 0.0 || c.azimuth_deg >= 360.0)
            r.fail(n, r.field("azimuth_deg"), "must be in [0, 360)");
        for (const auto& o : t.cells)
            if (o.id == c.id)
                r.fail(n, r.field("id"), "duplicate cell id " + std::to_string(c.id));
        try {
            validate(c, *site);
        } catch (const ConfigError& e) {
            r.fail(n, r.field("id"), e.what());
        }
        area.cell_id = c.id;
        area.site_id = c.site_id;
        area.technology = c.technology;
        area.site_position = c.position;
        area.azimuth_deg = c.azimuth_deg;
        area.n_prb = c.n_prb;
        if (has_traffic)
            t.traffic.push_back(area);
        t.cells.push_back(c);
    }
    if (t.cells.empty())
        s.fail(s.node(), s.field("cells"), "explicit topology needs at least one cell");

    // Measured areas of radios the strategy leaves switched off.
    for (const auto& n : list(s, "traffic")) {
        Section r(n, s.source(), s.field("traffic[]"));
        TrafficArea area;
        area.cell_id = r.require<int>("cell");
        area.site_id = r.require<int>("site");
        const auto tech = enum_field(r, "tech", parse_technology, "4G, 5G, 6G");
        if (!tech)
            r.fail(n, r.field("tech"), "missing");
        area.technology = *tech;
        area.site_position = {r.require<double>("x"), r.require<double>("y")};
        area.azimuth_deg = r.require<double>("azimuth_deg");
        area.n_prb = r.require<int>("n_prb");
        area.baseline_ues = r.require<int>("baseline_ues");
        area.prb_used = r.require<int>("prb_used");
        r.finish();
        if (!t.contains(area.site_position))
            r.fail(n, r.field("x"), "site outside the service area");
        if (area.n_prb < 1 || area.baseline_ues < 0 || area.prb_used < 0)
            r.fail(n, r.field("n_prb"), "counts must be non-negative and n_prb positive");
        for (const auto& o : t.traffic)
            if (o.cell_id == area.cell_id)
                r.fail(n, r.field("cell"), "duplicate traffic for cell " + std::to_string(area.cell_id));
        t.traffic.push_back(area);
    }
    std::stable_sort(t.traffic.begin(), t.traffic.end(),
                     [](const TrafficArea& a, const TrafficArea& b) { return a.cell_id < b.cell_id; });

    for (const auto& n : list(s, "hotspots")) {
        Section r(n, s.source(), s.field("hotspots[]"));
        Hotspot h;
        h.id = r.require<int>("id");
        h.center = {r.require<double>("x"), r.require<double>("y")};
        h.cell_id = r.require<int>("cell");
        r.finish();
        t.hotspots.push_back(h);
    }

    if (const YAML::Node ues = list(s, "ues")) {
        std::vector<UserTerminal> out;
        for (const auto& n : ues) {
            Section r(n, s.source(), s.field("ues[]"));
            UserTerminal ue;
            ue.id = static_cast<int>(out.size());
            ue.position = {r.require<double>("x"), r.require<double>("y")};
            ue.height = cfg.ues.height_m;
            r.get("height", ue.height);
            r.get("indoor", ue.indoor);
            r.get("demand_prb", ue.demand_prb);
            r.get("home_cell", ue.home_cell);
            int hotspot = -1;
            r.get("hotspot", hotspot);
            if (hotspot >= 0)
                ue.hotspot_id = hotspot;
            r.finish();
            if (ue.demand_prb < 1)
                r.fail(n, r.field("demand_prb"), "must be at least 1");
            if (!t.contains(ue.position))
                r.fail(n, r.field("x"), "UE outside the service area");
            out.push_back(ue);
        }
        t.fixed_ues = std::move(out);
    }
    s.finish();
    return t;
}

void emit_kv(YAML::Emitter& e, const char* key, double v) { e << YAML::Key << key << YAML::Value << v; }
void emit_kv(YAML::Emitter& e, const char* key, int v) { e << YAML::Key << key << YAML::Value << v; }

} // namespace

ScenarioFile parse_scenario(const std::string& text, const std::string& source)
{
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        throw ConfigError(source + ":" + std::to_string(e.mark.line + 1) + ": " + e.msg);
    }
    ScenarioFile out;
    ScenarioConfig& c = out.config;
    Section s(root, source, "");
    s.get("seed", c.seed);
    if (auto strategy = enum_field(s, "strategy", parse_strategy,
                                   "FourG, FourG_FiveG, CoLoc6G_UMa, NonCoLoc6G_UMi, NonCoLoc6G_UPi"))
        c.strategy = *strategy;
    s.get("area_km2", c.area_km2);
    s.get("aspect_ratio", c.aspect_ratio);
    {
        Section d = s.child("downtilt");
        d.get("uma_deg", c.downtilt_uma_deg);
        d.get("umi_deg", c.downtilt_umi_deg);
        d.finish();
    }
    read_fourg(s.child("fourg"), c.fourg);
    read_fiveg(s.child("fiveg"), c.fiveg);
    read_sixg(s.child("sixg"), c);
    read_ues(s.child("ues"), c.ues);
    read_hotspots(s.child("hotspots"), c.hotspots);
    const YAML::Node topo = s.take("topology");
    s.finish();
    try {
        validate(c);
    } catch (const ConfigError& e) {
        throw ConfigError(source + ": " + e.what());
    }
    if (topo)
        out.topology = read_topology(Section(topo, source, "topology"), c);
    return out;
}

ScenarioFile load_scenario(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError(path + ": cannot open");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_scenario(text.str(), path);
}

void save_scenario(std::ostream& os, const ScenarioConfig& c, const Topology* topology)
{
    YAML::Emitter e;
    e.SetDoublePrecision(17);
    e << YAML::BeginMap;
    e << YAML::Key << "seed" << YAML::Value << c.seed;
    e << YAML::Key << "strategy" << YAML::Value << std::string(to_string(c.strategy));
    emit_kv(e, "area_km2", c.area_km2);
    emit_kv(e, "aspect_ratio", c.aspect_ratio);
    e << YAML::Key << "downtilt" << YAML::Value << YAML::BeginMap;
    emit_kv(e, "uma_deg", c.downtilt_uma_deg);
    emit_kv(e, "umi_deg", c.downtilt_umi_deg);
    e << YAML::EndMap;

    const auto& f4 = c.fourg;
    e << YAML::Key << "fourg" << YAML::Value << YAML::BeginMap;
    emit_kv(e, "sites", f4.sites);
    emit_kv(e, "cells", f4.cells);
    emit_kv(e, "cells_10mhz", f4.cells_10mhz);
    e << YAML::Key << "carriers_ghz" << YAML::Value << YAML::Flow << f4.carriers_ghz;
    emit_kv(e, "tx_min_dbm", f4.tx_min_dbm);
    emit_kv(e, "tx_median_dbm", f4.tx_median_dbm);
    emit_kv(e, "tx_max_dbm", f4.tx_max_dbm);
    e << YAML::Key << "trx_mix" << YAML::Value << YAML::BeginSeq;
    for (auto [n, count] : f4.trx_mix)
        e << YAML::Flow << YAML::BeginMap << YAML::Key << "trx" << YAML::Value << n << YAML::Key << "cells"
          << YAML::Value << count << YAML::EndMap;
    e << YAML::EndSeq;
    emit_kv(e, "height_min_m", f4.height_min_m);
    emit_kv(e, "height_max_m", f4.height_max_m);
    emit_kv(e, "min_site_distance_m", f4.min_site_distance_m);
    e << YAML::EndMap;

    const auto& f5 = c.fiveg;
    e << YAML::Key << "fiveg" << YAML::Value << YAML::BeginMap;
    emit_kv(e, "sites", f5.sites);
    emit_kv(e, "sectors", f5.sectors);
    emit_kv(e, "carrier_ghz", f5.carrier_ghz);
    emit_kv(e, "bandwidth_mhz", f5.bandwidth_mhz);
    emit_kv(e, "n_prb", f5.n_prb);
    emit_kv(e, "n_trx", f5.n_trx);
    emit_kv(e, "ssb_beams", f5.ssb_beams);
    emit_kv(e, "csirs_beams", f5.csirs_beams);
    emit_kv(e, "tx_min_dbm", f5.tx_min_dbm);
    emit_kv(e, "tx_mean_dbm", f5.tx_mean_dbm);
    emit_kv(e, "tx_max_dbm", f5.tx_max_dbm);
    emit_kv(e, "height_min_m", f5.height_min_m);
    emit_kv(e, "height_max_m", f5.height_max_m);
    emit_kv(e, "min_site_distance_m", f5.min_site_distance_m);
    emit_kv(e, "min_distance_to_4g_m", f5.min_distance_to_4g_m);
    e << YAML::EndMap;

    const auto& f6 = c.sixg;
    e << YAML::Key << "sixg" << YAML::Value << YAML::BeginMap;
    emit_kv(e, "bandwidth_mhz", c.sixg_bandwidth_mhz);
    emit_kv(e, "trx", c.sixg_trx);
    emit_kv(e, "cells", f6.cells);
    emit_kv(e, "carrier_ghz", f6.carrier_ghz);
    emit_kv(e, "n_prb", f6.n_prb);
    emit_kv(e, "tx_macro_dbm", f6.tx_macro_dbm);
    emit_kv(e, "tx_pico_dbm", f6.tx_pico_dbm);
    emit_kv(e, "tx_boost_400mhz_db", f6.tx_boost_400mhz_db);
    emit_kv(e, "height_umi_m", f6.height_umi_m);
    emit_kv(e, "height_upi_m", f6.height_upi_m);
    emit_kv(e, "setback_m", f6.setback_m);
    emit_kv(e, "min_site_distance_m", f6.min_site_distance_m);
    e << YAML::EndMap;

    const auto& u = c.ues;
    e << YAML::Key << "ues" << YAML::Value << YAML::BeginMap;
    emit_kv(e, "baseline_count", u.baseline_count);
    emit_kv(e, "indoor_probability", u.indoor_probability);
    emit_kv(e, "height_m", u.height_m);
    emit_kv(e, "count_log_sigma", u.count_log_sigma);
    emit_kv(e, "prb_usage_median", u.prb_usage_median);
    emit_kv(e, "prb_usage_log_sigma", u.prb_usage_log_sigma);
    emit_kv(e, "prb_usage_load_exponent", u.prb_usage_load_exponent);
    e << YAML::EndMap;

    const auto& h = c.hotspots;
    e << YAML::Key << "hotspots" << YAML::Value << YAML::BeginMap;
    emit_kv(e, "count", h.count);
    emit_kv(e, "ues_per_hotspot", h.ues_per_hotspot);
    emit_kv(e, "radius_m", h.radius_m);
    emit_kv(e, "min_separation_m", h.min_separation_m);
    emit_kv(e, "max_attempts", h.max_attempts);
    e << YAML::EndMap;

    if (topology) {
        const Topology& t = *topology;
        e << YAML::Key << "topology" << YAML::Value << YAML::BeginMap;
        emit_kv(e, "width_m", t.width_m);
        emit_kv(e, "height_m", t.height_m);
        e << YAML::Key << "sites" << YAML::Value << YAML::BeginSeq;
        for (const auto& s : t.sites)
            e << YAML::Flow << YAML::BeginMap << YAML::Key << "id" << YAML::Value << s.id << YAML::Key << "x"
              << YAML::Value << s.position.x << YAML::Key << "y" << YAML::Value << s.position.y << YAML::Key
              << "height" << YAML::Value << s.height << YAML::Key << "layer" << YAML::Value
              << std::string(to_string(s.layer)) << YAML::EndMap;
        e << YAML::EndSeq;
        e << YAML::Key << "cells" << YAML::Value << YAML::BeginSeq;
        for (const auto& cell : t.cells) {
            e << YAML::Flow << YAML::BeginMap;
            emit_kv(e, "id", cell.id);
            emit_kv(e, "site", cell.site_id);
            emit_kv(e, "sector", cell.sector);
            emit_kv(e, "azimuth_deg", cell.azimuth_deg);
            e << YAML::Key << "tech" << YAML::Value << std::string(to_string(cell.technology));
            emit_kv(e, "carrier_ghz", cell.carrier_ghz);
            emit_kv(e, "bandwidth_mhz", cell.bandwidth_mhz);
            emit_kv(e, "n_prb", cell.n_prb);
            emit_kv(e, "n_trx", cell.n_trx);
            emit_kv(e, "tx_power_dbm", cell.tx_power_dbm);
            emit_kv(e, "ssb_beams", cell.n_ssb_beams);
            emit_kv(e, "csirs_beams", cell.n_csirs_beams);
            e << YAML::Key << "class" << YAML::Value << std::string(to_string(cell.deployment_class));
            emit_kv(e, "downtilt_deg", cell.array.downtilt_deg);
            for (const auto& a : t.traffic)
                if (a.cell_id == cell.id) {
                    emit_kv(e, "baseline_ues", a.baseline_ues);
                    emit_kv(e, "prb_used", a.prb_used);
                }
            e << YAML::EndMap;
        }
        e << YAML::EndSeq;
        std::vector<const TrafficArea*> detached;
        for (const auto& a : t.traffic)
            if (std::none_of(t.cells.begin(), t.cells.end(), [&](const Cell& c) { return c.id == a.cell_id; }))
                detached.push_back(&a);
        if (!detached.empty()) {
            e << YAML::Key << "traffic" << YAML::Value << YAML::BeginSeq;
            for (const TrafficArea* a : detached) {
                e << YAML::Flow << YAML::BeginMap;
                emit_kv(e, "cell", a->cell_id);
                emit_kv(e, "site", a->site_id);
                e << YAML::Key << "tech" << YAML::Value << std::string(to_string(a->technology));
                emit_kv(e, "x", a->site_position.x);
                emit_kv(e, "y", a->site_position.y);
                emit_kv(e, "azimuth_deg", a->azimuth_deg);
                emit_kv(e, "n_prb", a->n_prb);
                emit_kv(e, "baseline_ues", a->baseline_ues);
                emit_kv(e, "prb_used", a->prb_used);
                e << YAML::EndMap;
            }
            e << YAML::EndSeq;
        }
        if (!t.hotspots.empty()) {
            e << YAML::Key << "hotspots" << YAML::Value << YAML::BeginSeq;
            for (const auto& hs : t.hotspots)
                e << YAML::Flow << YAML::BeginMap << YAML::Key << "id" << YAML::Value << hs.id << YAML::Key << "x"
                  << YAML::Value << hs.center.x << YAML::Key << "y" << YAML::Value << hs.center.y << YAML::Key
                  << "cell" << YAML::Value << hs.cell_id << YAML::EndMap;
            e << YAML::EndSeq;
        }
        if (t.fixed_ues) {
            e << YAML::Key << "ues" << YAML::Value << YAML::BeginSeq;
            for (const auto& ue : *t.fixed_ues) {
                e << YAML::Flow << YAML::BeginMap;
                emit_kv(e, "x", ue.position.x);
                emit_kv(e, "y", ue.position.y);
                emit_kv(e, "height", ue.height);
                e << YAML::Key << "indoor" << YAML::Value << ue.indoor;
                emit_kv(e, "demand_prb", ue.demand_prb);
                emit_kv(e, "home_cell", ue.home_cell);
                if (ue.hotspot_id)
                    emit_kv(e, "hotspot", *ue.hotspot_id);
                e << YAML::EndMap;
            }
            e << YAML::EndSeq;
        }
        e << YAML::EndMap;
    }
    e << YAML::EndMap;
    os << e.c_str() << '\n';
}

} // namespace fr3sim
