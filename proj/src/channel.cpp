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

#include "fr3sim/channel.hpp"

#include <string>

namespace fr3sim {

namespace {

constexpr double kSpeedOfLight = 299792458.0;
constexpr double kMinDistance2d = 10.0;

} // namespace

PropagationModel classify_model(double antenna_height_m)
{
    return antenna_height_m > 15.0 ? PropagationModel::UMa : PropagationModel::UMi;
}

double los_probability(PropagationModel model, double d2d, double ue_height_m)
{
    if (d2d <= 18.0)
        return 1.0;
    if (model == PropagationModel::UMi)
        return 18.0 / d2d + std::exp(-d2d / 36.0) * (1.0 - 18.0 / d2d);
    const double c = ue_height_m <= 13.0 ? 0.0 : std::pow((ue_height_m - 13.0) / 10.0, 1.5);
    return (18.0 / d2d + std::exp(-d2d / 63.0) * (1.0 - 18.0 / d2d))
        * (1.0 + c * 1.25 * std::pow(d2d / 100.0, 3) * std::exp(-d2d / 150.0));
}

Pathloss pathloss(PropagationModel model, bool los, double fc, double d2d, double d3d, double h_bs, double h_ut)
{
    if (!(fc >= 0.5 && fc <= 100.0))
        throw ConfigError("carrier " + std::to_string(fc) + " GHz outside the 0.5-100 GHz pathloss model range");

    Pathloss out;
    if (d2d < kMinDistance2d) {
        const double dz = h_bs - h_ut;
        d2d = kMinDistance2d;
        d3d = std::hypot(d2d, dz);
        out.clamped = true;
    }

    // Effective environment height of 1 m (UE below 13 m).
    const double hb = h_bs - 1.0;
    const double hu = h_ut - 1.0;
    const double d_bp = 4.0 * hb * hu * fc * 1e9 / kSpeedOfLight;
    const double dz2 = (h_bs - h_ut) * (h_bs - h_ut);
    const double lf = 20.0 * std::log10(fc);

    double pl_los = 0.0;
    if (model == PropagationModel::UMa) {
        if (d2d <= d_bp)
            pl_los = 28.0 + 22.0 * std::log10(d3d) + lf;
        else
            pl_los = 28.0 + 40.0 * std::log10(d3d) + lf - 9.0 * std::log10(d_bp * d_bp + dz2);
    } else {
        if (d2d <= d_bp)
            pl_los = 32.4 + 21.0 * std::log10(d3d) + lf;
        else
            pl_los = 32.4 + 40.0 * std::log10(d3d) + lf - 9.5 * std::log10(d_bp * d_bp + dz2);
    }
    if (los) {
        out.db = pl_los;
        return out;
    }

    double pl_nlos = 0.0;
    if (model == PropagationModel::UMa)
        pl_nlos = 13.54 + 39.08 * std::log10(d3d) + lf - 0.6 * (h_ut - 1.5);
    else
        pl_nlos = 22.4 + 35.3 * std::log10(d3d) + 21.3 * std::log10(fc) - 0.3 * (h_ut - 1.5);
    out.db = std::max(pl_los, pl_nlos);
    return out;
}

double shadowing_sigma_db(PropagationModel model, bool los)
{
    if (model == PropagationModel::UMa)
        return los ? 4.0 : 6.0;
    return los ? 4.0 : 7.82;
}

double o2i_wall_loss_db(double fc)
{
    const double glass = 2.0 + 0.2 * fc;
    const double concrete = 5.0 + 4.0 * fc;
    return 5.0 - 10.0 * std::log10(0.3 * std::pow(10.0, -glass / 10.0) + 0.7 * std::pow(10.0, -concrete / 10.0));
}

LinkState make_link(int ue_id, int cell_id, const LinkGeometry& g, const ChannelParams& params,
                    std::uint64_t link_seed)
{
    SplitMix64 rng(link_seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    LinkState s;
    s.ue_id = ue_id;
    s.cell_id = cell_id;
    s.distance_2d = g.distance_2d;
    s.distance_3d = std::hypot(g.distance_2d, g.bs_height - g.ue_height);
    // Indoor UEs see the LoS probability of their building's outer wall.
    s.los = u(rng) < los_probability(g.model, g.distance_2d, g.ue_height);
    const Pathloss pl = pathloss(g.model, s.los, g.freq_ghz, s.distance_2d, s.distance_3d, g.bs_height, g.ue_height);
    s.pathloss_db = pl.db;
    s.clamped = pl.clamped;
    s.shadowing_db = sample_shadowing(g.model, s.los, rng);
    s.o2i_loss_db = o2i_penetration(g.freq_ghz, rng, g.indoor);
    s.rician_k_db = s.los ? (g.model == PropagationModel::UMa ? params.k_factor_uma_los_db : params.k_factor_umi_los_db)
                          : -std::numeric_limits<double>::infinity();
    s.fading_seed = rng();
    return s;
}

std::complex<double> fading_gain(const LinkState& link, int polarization, int prb)
{
    // The LoS phase is a per-link constant; scatter is drawn per (pol, prb).
    SplitMix64 phase_rng(link.fading_seed);
    std::uniform_real_distribution<double> phase(-kPi, kPi);
    const double phi = phase(phase_rng);
    SplitMix64 rng(derive_seed({link.fading_seed, static_cast<std::uint64_t>(polarization),
                                static_cast<std::uint64_t>(prb)}));
    return rician_gain(link.rician_k_db, phi, rng);
}

} // namespace fr3sim
