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

#include "fr3sim/scenario.hpp"

#include "fr3sim/sched.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

namespace fr3sim {

namespace {

constexpr int kMaxPlacementAttempts = 200000;

void require(bool ok, const std::string& field, const std::string& what)
{
    if (!ok)
        throw ConfigError(field + ": " + what);
}

double bearing_deg(Vec2 from, Vec2 to)
{
    double b = rad2deg(std::atan2(to.y - from.y, to.x - from.x));
    return b < 0.0 ? b + 360.0 : b;
}

// Uniform positions with a minimum spacing to each other and to `avoid`.
template <typename Rng>
std::vector<Vec2> place_sites(int count, double width, double height, double min_spacing,
                              const std::vector<Vec2>& avoid, double min_avoid, Rng& rng, const char* layer)
{
    std::uniform_real_distribution<double> ux(0.0, width);
    std::uniform_real_distribution<double> uy(0.0, height);
    std::vector<Vec2> out;
    out.reserve(count);
    int attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > kMaxPlacementAttempts)
            throw ConfigError(std::string(layer) + " sites: area too small for " + std::to_string(count)
                              + " sites at " + std::to_string(min_spacing) + " m spacing");
        const Vec2 p{ux(rng), uy(rng)};
        const bool clear = std::all_of(out.begin(), out.end(), [&](Vec2 q) { return distance(p, q) >= min_spacing; })
            && std::all_of(avoid.begin(), avoid.end(), [&](Vec2 q) { return distance(p, q) >= min_avoid; });
        if (clear)
            out.push_back(p);
    }
    return out;
}

// Stratified draws from a piecewise-linear CDF through (lo,0), (median,0.5),
// (hi,1), returned in random order.
template <typename Rng>
std::vector<double> stratified_power(int n, double lo, double median, double hi, Rng& rng)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        const double q = (i + u(rng)) / n;
        out[i] = q < 0.5 ? lo + (median - lo) * (q / 0.5) : median + (hi - median) * ((q - 0.5) / 0.5);
    }
    std::shuffle(out.begin(), out.end(), rng);
    return out;
}

template <typename Rng>
double triangular(double lo, double mode, double hi, Rng& rng)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double x = u(rng);
    const double fc = (mode - lo) / (hi - lo);
    if (x < fc)
        return lo + std::sqrt(x * (hi - lo) * (mode - lo));
    return hi - std::sqrt((1.0 - x) * (hi - lo) * (hi - mode));
}

// Integer apportionment of `total` by weights (largest remainder).
std::vector<int> apportion(const std::vector<double>& weights, int total)
{
    const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
    std::vector<int> out(weights.size());
    std::vector<std::pair<double, std::size_t>> rema;
    int assigned = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const double exact = total * weights[i] / sum;
        out[i] = static_cast<int>(std::floor(exact));
        assigned += out[i];
        rema.emplace_back(exact - out[i], i);
    }
    std::stable_sort(rema.begin(), rema.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t k = 0; assigned < total; ++k, ++assigned)
        out[rema[k % rema.size()].second] += 1;
    return out;
}

Cell make_cell(int id, const Site& site, int sector, double azimuth, Technology tech, double carrier,
               double bandwidth, int n_prb, int n_trx, double tx_dbm, int ssb, int csirs, DeploymentClass cls,
               double downtilt)
{
    Cell c;
    c.id = id;
    c.site_id = site.id;
    c.sector = sector;
    c.azimuth_deg = std::fmod(azimuth + 360.0, 360.0);
    c.technology = tech;
    c.carrier_ghz = carrier;
    c.bandwidth_mhz = bandwidth;
    c.n_prb = n_prb;
    c.scs_khz = numerology_scs_khz(bandwidth, n_prb);
    c.n_trx = n_trx;
    c.tx_power_dbm = tx_dbm;
    c.array = array_for(tech, n_trx, downtilt);
    c.n_ssb_beams = ssb;
    c.n_csirs_beams = csirs;
    c.deployment_class = cls;
    c.position = site.position;
    c.height = site.height;
    return c;
}

DeploymentClass class_for_height(double h) { return h > 15.0 ? DeploymentClass::UMa : DeploymentClass::UMi; }

void generate_fourg(const ScenarioConfig& cfg, Topology& topo, std::vector<Cell>& cells)
{
    const auto& L = cfg.fourg;
    std::mt19937_64 rng(derive_seed({cfg.seed, tag(StreamTag::Topology4G)}));
    const auto positions = place_sites(L.sites, topo.width_m, topo.height_m, L.min_site_distance_m, {}, 0.0, rng, "4G");
    std::uniform_real_distribution<double> uh(L.height_min_m, L.height_max_m);
    std::uniform_real_distribution<double> uaz(0.0, 120.0);
    std::vector<double> offsets;
    for (int s = 0; s < L.sites; ++s) {
        Site site{static_cast<int>(topo.sites.size()), positions[s], uh(rng), Technology::FourG};
        topo.sites.push_back(site);
        offsets.push_back(uaz(rng));
    }

    // Per-cell parameter pools, shuffled so each statistic hits its target
    // exactly while the spatial assignment stays random.
    std::vector<int> bw10(L.cells, 0);
    std::fill(bw10.begin(), bw10.begin() + L.cells_10mhz, 1);
    std::shuffle(bw10.begin(), bw10.end(), rng);
    std::vector<int> trx;
    for (auto [n, count] : L.trx_mix)
        trx.insert(trx.end(), count, n);
    std::shuffle(trx.begin(), trx.end(), rng);
    const auto power = stratified_power(L.cells, L.tx_min_dbm, L.tx_median_dbm, L.tx_max_dbm, rng);

    // Cells fill sector slots round-robin: every site gets three sectors on a
    // first carrier, the remainder add a second (third, ...) carrier.
    const int slots = 3 * L.sites;
    std::vector<std::vector<double>> site_carriers(L.sites);
    for (int i = 0; i < L.cells; ++i) {
        const int slot = i % slots;
        const int layer = i / slots;
        const int s = slot / 3;
        const int sector = slot % 3;
        auto& used = site_carriers[s];
        if (static_cast<int>(used.size()) <= layer) {
            std::vector<double> free;
            for (double f : L.carriers_ghz)
                if (std::find(used.begin(), used.end(), f) == used.end())
                    free.push_back(f);
            if (free.empty())
                free = L.carriers_ghz;
            std::uniform_int_distribution<std::size_t> pick(0, free.size() - 1);
            used.push_back(free[pick(rng)]);
        }
        const Site& site = topo.sites[s];
        const int n_trx = trx[i];
        const bool narrow = bw10[i] != 0;
        const auto cls = class_for_height(site.height);
        cells.push_back(make_cell(static_cast<int>(cells.size()), site, sector, offsets[s] + 120.0 * sector,
                                  Technology::FourG, used[layer], narrow ? 10.0 : 20.0, narrow ? 50 : 100, n_trx,
                                  power[i], 1, std::min(n_trx, 8), cls,
                                  cls == DeploymentClass::UMa ? cfg.downtilt_uma_deg : cfg.downtilt_umi_deg));
    }
}

void generate_fiveg(const ScenarioConfig& cfg, Topology& topo, std::vector<Cell>& cells)
{
    const auto& L = cfg.fiveg;
    std::mt19937_64 rng(derive_seed({cfg.seed, tag(StreamTag::Topology5G)}));
    std::vector<Vec2> legacy;
    for (const auto& s : topo.sites)
        legacy.push_back(s.position);
    const auto positions = place_sites(L.sites, topo.width_m, topo.height_m, L.min_site_distance_m, legacy,
                                       L.min_distance_to_4g_m, rng, "5G");
    std::uniform_real_distribution<double> uh(L.height_min_m, L.height_max_m);
    std::uniform_real_distribution<double> uaz(0.0, 360.0 / L.sectors);
    const double mode = 3.0 * L.tx_mean_dbm - L.tx_min_dbm - L.tx_max_dbm;
    for (int s = 0; s < L.sites; ++s) {
        Site site{static_cast<int>(topo.sites.size()), positions[s], uh(rng), Technology::FiveG};
        topo.sites.push_back(site);
        const double offset = uaz(rng);
        const auto cls = class_for_height(site.height);
        for (int k = 0; k < L.sectors; ++k) {
            const double tx = triangular(L.tx_min_dbm, mode, L.tx_max_dbm, rng);
            cells.push_back(make_cell(static_cast<int>(cells.size()), site, k, offset + 360.0 / L.sectors * k,
                                      Technology::FiveG, L.carrier_ghz, L.bandwidth_mhz, L.n_prb, L.n_trx, tx,
                                      L.ssb_beams, L.csirs_beams, cls,
                                      cls == DeploymentClass::UMa ? cfg.downtilt_uma_deg : cfg.downtilt_umi_deg));
        }
    }
}

void assign_load(const ScenarioConfig& cfg, Topology& topo, const CoverageIndex& cov)
{
    std::mt19937_64 rng(derive_seed({cfg.seed, tag(StreamTag::Load)}));
    std::normal_distribution<double> z(0.0, 1.0);
    std::vector<double> weights;
    for (const auto& area : topo.traffic) {
        const double w = std::exp(cfg.ues.count_log_sigma * z(rng));
        // A sector facing out of the service area can own no ground at all.
        weights.push_back(cov.empty(area) ? 0.0 : w);
    }
    const auto counts = apportion(weights, cfg.ues.baseline_count);
    const double mean_count = static_cast<double>(cfg.ues.baseline_count) / std::max<std::size_t>(counts.size(), 1);
    for (std::size_t i = 0; i < topo.traffic.size(); ++i) {
        auto& t = topo.traffic[i];
        t.baseline_ues = counts[i];
        const double busy = std::pow(std::max(counts[i], 1) / mean_count, cfg.ues.prb_usage_load_exponent);
        const double usage = std::clamp(
            cfg.ues.prb_usage_median * busy * std::exp(cfg.ues.prb_usage_log_sigma * z(rng)), 0.02, 1.0);
        t.prb_used = std::max(1, static_cast<int>(std::lround(usage * t.n_prb)));
    }
}

// Traffic areas ordered by baseline UE count, heaviest first.
std::vector<std::size_t> load_ranking(const Topology& topo)
{
    std::vector<std::size_t> order(topo.traffic.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return topo.traffic[a].baseline_ues > topo.traffic[b].baseline_ues;
    });
    return order;
}

bool inset(const Topology& topo, Vec2 p, double margin)
{
    return p.x >= margin && p.y >= margin && p.x <= topo.width_m - margin && p.y <= topo.height_m - margin;
}

void seed_hotspots(const ScenarioConfig& cfg, Topology& topo, const CoverageIndex& cov)
{
    const auto& H = cfg.hotspots;
    std::mt19937_64 rng(derive_seed({cfg.seed, tag(StreamTag::Hotspots)}));
    const auto order = load_ranking(topo);
    // Walk down the load ranking; an area too small to keep the separation
    // from earlier hotspots hands its slot to the next one.
    std::size_t next = 0;
    for (int h = 0; h < H.count; ++h) {
        bool placed = false;
        while (!placed && next < order.size()) {
            const TrafficArea& area = topo.traffic[order[next++]];
            if (area.baseline_ues <= 0 || cov.empty(area))
                continue;
            for (int attempt = 0; attempt < H.max_attempts && !placed; ++attempt) {
                const Vec2 c = cov.sample(area, rng);
                if (!inset(topo, c, H.radius_m))
                    continue;
                const bool clear = std::all_of(topo.hotspots.begin(), topo.hotspots.end(), [&](const Hotspot& o) {
                    return distance(o.center, c) >= H.min_separation_m;
                });
                if (clear) {
                    topo.hotspots.push_back({h, c, area.cell_id});
                    placed = true;
                }
            }
        }
        if (!placed)
            throw GenerationError("hotspot " + std::to_string(h) + ": no traffic area has room " + std::to_string(H.min_separation_m)
                                  + " m from the " + std::to_string(topo.hotspots.size()) + " hotspots already placed ("
                                  + std::to_string(H.max_attempts) + " attempts per area)");
    }
}

ArrayGeometry sixg_array(const ScenarioConfig& cfg, DeploymentClass cls)
{
    return array_for(Technology::SixG, cfg.sixg_trx,
                     cls == DeploymentClass::UMa ? cfg.downtilt_uma_deg : cfg.downtilt_umi_deg);
}

double sixg_tx(const ScenarioConfig& cfg, DeploymentClass cls)
{
    const double base = cls == DeploymentClass::UPi ? cfg.sixg.tx_pico_dbm : cfg.sixg.tx_macro_dbm;
    return base + (cfg.sixg_bandwidth_mhz >= 400 ? cfg.sixg.tx_boost_400mhz_db : 0.0);
}

int sixg_ssb_beams(int trx) { return trx >= 256 ? 32 : 16; }

void generate_sixg_colocated(const ScenarioConfig& cfg, Topology& topo)
{
    std::vector<const Site*> hosts;
    for (const auto& s : topo.sites)
        if (s.layer == Technology::FiveG)
            hosts.push_back(&s);
    if (hosts.empty())
        throw ConfigError("sixg: co-located deployment needs 5G sites");
    // Reuse the 5G sector azimuths of each host site.
    std::vector<double> azimuths(hosts.size(), 0.0);
    for (std::size_t h = 0; h < hosts.size(); ++h)
        for (const auto& c : topo.cells)
            if (c.site_id == hosts[h]->id && c.sector == 0) {
                azimuths[h] = c.azimuth_deg;
                break;
            }
    const int slots = 3 * static_cast<int>(hosts.size());
    std::vector<Cell> added;
    for (int i = 0; i < cfg.sixg.cells; ++i) {
        const int slot = i % slots;
        const Site& site = *hosts[slot / 3];
        const int sector = slot % 3;
        added.push_back(make_cell(static_cast<int>(topo.cells.size() + added.size()), site, sector,
                                  azimuths[slot / 3] + 120.0 * sector, Technology::SixG, cfg.sixg.carrier_ghz,
                                  cfg.sixg_bandwidth_mhz, cfg.sixg.n_prb, cfg.sixg_trx,
                                  sixg_tx(cfg, DeploymentClass::UMa), sixg_ssb_beams(cfg.sixg_trx), cfg.sixg_trx,
                                  class_for_height(site.height), cfg.downtilt_uma_deg));
        added.back().array = sixg_array(cfg, added.back().deployment_class);
    }
    topo.cells.insert(topo.cells.end(), added.begin(), added.end());
}

void generate_sixg_hotspot(const ScenarioConfig& cfg, Topology& topo, const CoverageIndex& cov, DeploymentClass cls)
{
    const auto& L = cfg.sixg;
    std::mt19937_64 rng(derive_seed({cfg.seed, tag(StreamTag::Topology6G)}));

    // Hotspot centers first, then further positions drawn in the next most
    // loaded traffic areas.
    std::vector<Vec2> targets;
    for (const auto& h : topo.hotspots)
        if (static_cast<int>(targets.size()) < L.cells)
            targets.push_back(h.center);
    const auto order = load_ranking(topo);
    std::size_t rank = topo.hotspots.size();
    int misses = 0;
    while (static_cast<int>(targets.size()) < L.cells) {
        const TrafficArea& area = topo.traffic[order[rank % order.size()]];
        ++rank;
        bool placed = false;
        for (int attempt = 0; attempt < 200 && !placed && !cov.empty(area); ++attempt) {
            const Vec2 p = cov.sample(area, rng);
            if (!inset(topo, p, L.setback_m))
                continue;
            if (std::all_of(targets.begin(), targets.end(), [&](Vec2 q) { return distance(p, q) >= L.min_site_distance_m; })) {
                targets.push_back(p);
                placed = true;
            }
        }
        if (!placed && ++misses > 10 * L.cells)
            throw GenerationError("sixg: cannot place " + std::to_string(L.cells) + " cells "
                                  + std::to_string(L.min_site_distance_m) + " m apart");
    }

    // Each radio stands back from its target and points at it.
    std::uniform_real_distribution<double> ub(0.0, 360.0);
    const double height = cls == DeploymentClass::UPi ? L.height_upi_m : L.height_umi_m;
    for (const Vec2 t : targets) {
        Vec2 pos = t;
        double az = 0.0;
        for (int attempt = 0; attempt < 1000; ++attempt) {
            az = ub(rng);
            pos = {t.x - L.setback_m * std::cos(deg2rad(az)), t.y - L.setback_m * std::sin(deg2rad(az))};
            if (topo.contains(pos))
                break;
        }
        if (!topo.contains(pos))
            throw GenerationError("sixg: no in-area site position near target");
        Site site{static_cast<int>(topo.sites.size()), pos, height, Technology::SixG};
        topo.sites.push_back(site);
        Cell c = make_cell(static_cast<int>(topo.cells.size()), site, 0, az, Technology::SixG, L.carrier_ghz,
                           cfg.sixg_bandwidth_mhz, L.n_prb, cfg.sixg_trx, sixg_tx(cfg, cls),
                           sixg_ssb_beams(cfg.sixg_trx), cfg.sixg_trx, height > 15.0 ? DeploymentClass::UMa : cls,
                           0.0);
        c.array = sixg_array(cfg, c.deployment_class);
        topo.cells.push_back(c);
    }
}

} // namespace

double numerology_scs_khz(double bandwidth_mhz, int n_prb)
{
    double scs = 15.0;
    for (int mu = 1; mu <= 4; ++mu) {
        const double next = 15.0 * (1 << mu);
        if (n_prb * 12.0 * next > bandwidth_mhz * 1e3)
            break;
        scs = next;
    }
    return scs;
}

ArrayGeometry array_for(Technology tech, int n_trx, double downtilt_deg)
{
    ArrayGeometry a;
    a.dual_polarized = true;
    a.downtilt_deg = downtilt_deg;
    const int per_panel = n_trx / 2;
    if (tech == Technology::FourG && n_trx < 64) {
        // Vertical cross-polarized column.
        a.n_rows = std::max(1, per_panel);
        a.n_cols = 1;
    } else {
        a.n_rows = 4;
        a.n_cols = std::max(1, per_panel / 4);
    }
    return a;
}

void validate(const Cell& c, const Site& site)
{
    const std::string f = "cell " + std::to_string(c.id);
    require(c.n_prb > 0, f + ".n_prb", "must be positive");
    require(c.bandwidth_mhz > 0.0, f + ".bandwidth_mhz", "must be positive");
    static constexpr int kTrx[] = {2, 4, 8, 64, 128, 256};
    require(std::find(std::begin(kTrx), std::end(kTrx), c.n_trx) != std::end(kTrx), f + ".n_trx",
            "must be one of 2, 4, 8, 64, 128, 256");
    require(c.array.element_count() == c.n_trx, f + ".array", "element count must equal n_trx");
    require(c.n_csirs_beams >= 1 && c.n_csirs_beams <= c.n_trx, f + ".csirs_beams", "must be in [1, n_trx]");
    require(c.n_ssb_beams >= 1, f + ".ssb_beams", "must be positive");
    require(site.height > 0.0, f + ".height", "site height must be positive");
    const bool uma = site.height > 15.0;
    require(uma == (c.deployment_class == DeploymentClass::UMa), f + ".class", "UMa iff site height > 15 m");
    require(c.deployment_class != DeploymentClass::UPi || c.technology == Technology::SixG, f + ".class",
            "UPi is reserved for 6G pico cells");
    require(c.n_prb * 12.0 * c.scs_khz <= c.bandwidth_mhz * 1e3 + 1e-9, f + ".n_prb", "PRBs exceed the bandwidth");
}

void validate(const ScenarioConfig& c)
{
    require(c.area_km2 > 0.0, "area_km2", "must be positive");
    require(c.aspect_ratio > 0.0, "aspect_ratio", "must be positive");
    require(c.sixg_bandwidth_mhz == 200 || c.sixg_bandwidth_mhz == 400, "sixg.bandwidth_mhz", "must be 200 or 400");
    require(c.sixg_trx == 128 || c.sixg_trx == 256, "sixg.trx", "must be 128 or 256");
    require(c.fourg.sites > 0, "fourg.sites", "must be positive");
    require(c.fourg.cells > 0, "fourg.cells", "must be positive");
    require(c.fourg.cells_10mhz >= 0 && c.fourg.cells_10mhz <= c.fourg.cells, "fourg.cells_10mhz",
            "must be in [0, cells]");
    require(!c.fourg.carriers_ghz.empty(), "fourg.carriers_ghz", "must not be empty");
    require(c.fourg.tx_min_dbm <= c.fourg.tx_median_dbm && c.fourg.tx_median_dbm <= c.fourg.tx_max_dbm,
            "fourg.tx_median_dbm", "must lie within [tx_min_dbm, tx_max_dbm]");
    int mix = 0;
    for (auto [n, count] : c.fourg.trx_mix) {
        require(n == 2 || n == 4 || n == 8 || n == 64, "fourg.trx_mix", "TRX counts must be 2, 4, 8 or 64");
        require(count >= 0, "fourg.trx_mix", "counts must be non-negative");
        mix += count;
    }
    require(mix == c.fourg.cells, "fourg.trx_mix", "counts must sum to fourg.cells");
    require(c.fourg.height_min_m > 0.0 && c.fourg.height_min_m <= c.fourg.height_max_m, "fourg.height_min_m",
            "heights must be positive and ordered");
    require(c.fourg.min_site_distance_m > 0.0, "fourg.min_site_distance_m", "must be positive");
    require(c.fiveg.sites >= 0, "fiveg.sites", "must be non-negative");
    require(c.fiveg.sectors >= 1, "fiveg.sectors", "must be positive");
    require(c.fiveg.n_prb > 0 && c.fiveg.bandwidth_mhz > 0.0, "fiveg.n_prb", "must be positive");
    require(c.fiveg.csirs_beams <= c.fiveg.n_trx, "fiveg.csirs_beams", "must not exceed n_trx");
    require(c.fiveg.tx_min_dbm < c.fiveg.tx_max_dbm, "fiveg.tx_min_dbm", "must be below tx_max_dbm");
    const double mode = 3.0 * c.fiveg.tx_mean_dbm - c.fiveg.tx_min_dbm - c.fiveg.tx_max_dbm;
    require(mode >= c.fiveg.tx_min_dbm && mode <= c.fiveg.tx_max_dbm, "fiveg.tx_mean_dbm",
            "not reachable by a triangular distribution on [tx_min_dbm, tx_max_dbm]");
    require(c.fiveg.height_min_m > 0.0 && c.fiveg.height_min_m <= c.fiveg.height_max_m, "fiveg.height_min_m",
            "heights must be positive and ordered");
    require(c.fiveg.min_site_distance_m > 0.0, "fiveg.min_site_distance_m", "must be positive");
    require(c.sixg.cells >= 0, "sixg.cells", "must be non-negative");
    require(c.sixg.n_prb > 0, "sixg.n_prb", "must be positive");
    require(c.sixg.height_umi_m > 0.0 && c.sixg.height_upi_m > 0.0, "sixg.height_umi_m", "must be positive");
    require(c.sixg.setback_m >= 0.0, "sixg.setback_m", "must be non-negative");
    require(c.sixg.min_site_distance_m > 0.0, "sixg.min_site_distance_m", "must be positive");
    require(c.ues.baseline_count >= 0, "ues.baseline_count", "must be non-negative");
    require(c.ues.indoor_probability >= 0.0 && c.ues.indoor_probability <= 1.0, "ues.indoor_probability",
            "must be in [0, 1]");
    require(c.ues.height_m > 0.0, "ues.height_m", "must be positive");
    require(c.ues.prb_usage_median > 0.0 && c.ues.prb_usage_median <= 1.0, "ues.prb_usage_median",
            "must be in (0, 1]");
    require(c.ues.count_log_sigma >= 0.0 && c.ues.prb_usage_log_sigma >= 0.0, "ues.count_log_sigma",
            "must be non-negative");
    require(c.ues.prb_usage_load_exponent >= 0.0, "ues.prb_usage_load_exponent", "must be non-negative");
    require(c.hotspots.count >= 0, "hotspots.count", "must be non-negative");
    require(c.hotspots.ues_per_hotspot >= 0, "hotspots.ues_per_hotspot", "must be non-negative");
    require(c.hotspots.radius_m > 0.0, "hotspots.radius_m", "must be positive");
    require(c.hotspots.min_separation_m > 0.0, "hotspots.min_separation_m", "must be positive");
    require(c.hotspots.max_attempts > 0, "hotspots.max_attempts", "must be positive");
}

const Site& Topology::site(int id) const
{
    for (const auto& s : sites)
        if (s.id == id)
            return s;
    throw ConfigError("unknown site " + std::to_string(id));
}

const Cell& Topology::cell(int id) const
{
    if (id >= 0 && id < static_cast<int>(cells.size()) && cells[id].id == id)
        return cells[id];
    for (const auto& c : cells)
        if (c.id == id)
            return c;
    throw ConfigError("unknown cell " + std::to_string(id));
}

CoverageIndex::CoverageIndex(const Topology& topology) : topology_(&topology)
{
    const double area = topology.width_m * topology.height_m;
    step_ = std::max(10.0, std::sqrt(area / 20000.0));
    nx_ = static_cast<int>(std::ceil(topology.width_m / step_));
    ny_ = static_cast<int>(std::ceil(topology.height_m / step_));
    rasters_.resize(topology.traffic.size());
    int max_id = -1;
    for (const auto& t : topology.traffic)
        max_id = std::max(max_id, t.cell_id);
    area_slot_.assign(max_id + 1, -1);
    for (std::size_t i = 0; i < topology.traffic.size(); ++i)
        area_slot_[topology.traffic[i].cell_id] = static_cast<int>(i);

    // Carriers stacked on one sector share its region.
    sharing_.resize(topology.traffic.size());
    for (std::size_t i = 0; i < topology.traffic.size(); ++i)
        for (std::size_t j = 0; j < topology.traffic.size(); ++j) {
            const auto& a = topology.traffic[i];
            const auto& b = topology.traffic[j];
            if (a.technology == b.technology && a.site_id == b.site_id
                && std::abs(wrap_degrees(a.azimuth_deg - b.azimuth_deg)) < 1e-9)
                sharing_[i].push_back(static_cast<int>(j));
        }

    std::vector<Technology> layers;
    for (const auto& t : topology.traffic)
        if (std::find(layers.begin(), layers.end(), t.technology) == layers.end())
            layers.push_back(t.technology);

    // A grid square belongs to every region owning its center or a corner.
    static constexpr double kProbe[][2] = {{0.5, 0.5}, {0, 0}, {1, 0}, {0, 1}, {1, 1}};
    for (int gy = 0; gy < ny_; ++gy)
        for (int gx = 0; gx < nx_; ++gx) {
            const int g = gy * nx_ + gx;
            for (const auto& pr : kProbe) {
                const Vec2 p{std::min((gx + pr[0]) * step_, topology.width_m),
                             std::min((gy + pr[1]) * step_, topology.height_m)};
                for (Technology layer : layers) {
                    const int o = owner(layer, p);
                    if (o < 0)
                        continue;
                    for (int k : sharing_[o])
                        if (rasters_[k].cells.empty() || rasters_[k].cells.back() != g)
                            rasters_[k].cells.push_back(g);
                }
            }
        }
}

int CoverageIndex::slot(const TrafficArea& area) const
{
    if (area.cell_id < 0 || area.cell_id >= static_cast<int>(area_slot_.size()) || area_slot_[area.cell_id] < 0)
        throw ConfigError("cell " + std::to_string(area.cell_id) + " has no traffic area");
    return area_slot_[area.cell_id];
}

int CoverageIndex::owner(Technology layer, Vec2 p) const
{
    // Nearest site of the layer, then nearest sector azimuth at that site.
    const auto& traffic = topology_->traffic;
    int site = -1;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& t : traffic)
        if (t.technology == layer) {
            const double d = distance(p, t.site_position);
            if (d < best) {
                best = d;
                site = t.site_id;
            }
        }
    int out = -1;
    double best_off = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < traffic.size(); ++i) {
        const auto& t = traffic[i];
        if (t.technology != layer || t.site_id != site)
            continue;
        const double off = std::abs(wrap_degrees(bearing_deg(t.site_position, p) - t.azimuth_deg));
        if (off < best_off - 1e-9) {
            best_off = off;
            out = static_cast<int>(i);
        }
    }
    return out;
}

bool CoverageIndex::in_region(const TrafficArea& area, Vec2 p) const
{
    const int o = owner(area.technology, p);
    if (o < 0)
        return false;
    const auto& group = sharing_[o];
    return std::find(group.begin(), group.end(), slot(area)) != group.end();
}

Topology generate_topology(const ScenarioConfig& cfg)
{
    validate(cfg);
    Topology topo;
    const double area_m2 = cfg.area_km2 * 1e6;
    topo.width_m = std::sqrt(area_m2 * cfg.aspect_ratio);
    topo.height_m = area_m2 / topo.width_m;

    std::vector<Cell> legacy;
    generate_fourg(cfg, topo, legacy);
    generate_fiveg(cfg, topo, legacy);

    for (const auto& c : legacy)
        topo.traffic.push_back({c.id, c.site_id, c.technology, c.position, c.azimuth_deg, c.n_prb, 0, 0});
    const CoverageIndex cov(topo);
    assign_load(cfg, topo, cov);

    const bool fiveg_on = has_fiveg(cfg.strategy);
    for (const auto& c : legacy)
        if (c.technology == Technology::FourG || fiveg_on)
            topo.cells.push_back(c);
    if (!fiveg_on)
        std::erase_if(topo.sites, [](const Site& s) { return s.layer == Technology::FiveG; });

    seed_hotspots(cfg, topo, cov);

    switch (cfg.strategy) {
    case Strategy::CoLoc6G_UMa:
        generate_sixg_colocated(cfg, topo);
        break;
    case Strategy::NonCoLoc6G_UMi:
        generate_sixg_hotspot(cfg, topo, cov, DeploymentClass::UMi);
        break;
    case Strategy::NonCoLoc6G_UPi:
        generate_sixg_hotspot(cfg, topo, cov, DeploymentClass::UPi);
        break;
    default:
        break;
    }

    for (const auto& c : topo.cells)
        validate(c, topo.site(c.site_id));
    return topo;
}

std::vector<UserTerminal> drop_users(const ScenarioConfig& cfg, const Topology& topo, const CoverageIndex& cov,
                                     std::uint64_t snapshot_seed)
{
    if (topo.fixed_ues)
        return *topo.fixed_ues;

    std::mt19937_64 rng(derive_seed({snapshot_seed, tag(StreamTag::Users)}));
    std::bernoulli_distribution indoor(cfg.ues.indoor_probability);
    std::vector<UserTerminal> ues;
    std::vector<int> area_demand(topo.traffic.size(), 1);

    for (std::size_t i = 0; i < topo.traffic.size(); ++i) {
        const TrafficArea& a = topo.traffic[i];
        if (a.baseline_ues <= 0)
            continue;
        area_demand[i] = *estimate_demand(a.prb_used, a.baseline_ues);
        for (int k = 0; k < a.baseline_ues; ++k) {
            UserTerminal ue;
            ue.id = static_cast<int>(ues.size());
            ue.position = cov.sample(a, rng);
            ue.height = cfg.ues.height_m;
            ue.indoor = indoor(rng);
            ue.demand_prb = area_demand[i];
            ue.home_cell = a.cell_id;
            ues.push_back(ue);
        }
    }

    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (const auto& h : topo.hotspots) {
        std::size_t slot = 0;
        while (slot < topo.traffic.size() && topo.traffic[slot].cell_id != h.cell_id)
            ++slot;
        const TrafficArea* a = slot < topo.traffic.size() ? &topo.traffic[slot] : nullptr;
        const int demand = a && a->baseline_ues > 0 ? area_demand[slot]
                                                    : (a ? std::max(1, a->prb_used / cfg.hotspots.ues_per_hotspot) : 1);
        for (int k = 0; k < cfg.hotspots.ues_per_hotspot; ++k) {
            Vec2 p;
            do {
                const double r = cfg.hotspots.radius_m * std::sqrt(u(rng));
                const double phi = 2.0 * kPi * u(rng);
                p = {h.center.x + r * std::cos(phi), h.center.y + r * std::sin(phi)};
            } while (!topo.contains(p));
            UserTerminal ue;
            ue.id = static_cast<int>(ues.size());
            ue.position = p;
            ue.height = cfg.ues.height_m;
            ue.indoor = indoor(rng);
            ue.demand_prb = demand;
            ue.home_cell = h.cell_id;
            ue.hotspot_id = h.id;
            ues.push_back(ue);
        }
    }
    return ues;
}

} // namespace fr3sim
