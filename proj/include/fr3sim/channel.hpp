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

#include "fr3sim/common.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace fr3sim {

enum class PropagationModel { UMa, UMi };

// UMa iff the antenna sits strictly above 15 m.
PropagationModel classify_model(double antenna_height_m);

// 3GPP TR 38.901 Table 7.4.2-1 (outdoor UE).
double los_probability(PropagationModel model, double distance_2d_m, double ue_height_m);

struct Pathloss {
    double db = 0.0;
    bool clamped = false; // 2D distance was raised to the 10 m model minimum
};

// 3GPP TR 38.901 Table 7.4.1-1 UMa/UMi street canyon, LoS with breakpoint
// and NLoS as max(LoS, NLoS'). Throws ConfigError outside 0.5-100 GHz.
Pathloss pathloss(PropagationModel model, bool los, double freq_ghz, double distance_2d_m, double distance_3d_m,
                  double bs_height_m, double ue_height_m);

double shadowing_sigma_db(PropagationModel model, bool los);

template <typename Rng>
double sample_shadowing(PropagationModel model, bool los, Rng& rng);

// Low-loss building model: glass/concrete wall loss plus 0.5 dB/m over the
// inside distance (min of two U(0,25 m)) plus N(0, 4.4 dB). Zero outdoors;
// never negative.
template <typename Rng>
double o2i_penetration(double freq_ghz, Rng& rng, bool indoor);

// Deterministic part of the low-loss wall loss, dB.
double o2i_wall_loss_db(double freq_ghz);

struct ChannelParams {
    double k_factor_uma_los_db = 9.0;
    double k_factor_umi_los_db = 9.0;
    bool operator==(const ChannelParams&) const = default;
};

// Large-scale state of one UE-cell pair, drawn once per snapshot.
struct LinkState {
    int ue_id = -1;
    int cell_id = -1;
    bool los = false;
    bool clamped = false;
    double distance_2d = 0.0;
    double distance_3d = 0.0;
    double pathloss_db = 0.0;
    double shadowing_db = 0.0;
    double o2i_loss_db = 0.0;
    double rician_k_db = 0.0; // -inf for Rayleigh
    std::uint64_t fading_seed = 0;

    double coupling_loss_db() const { return pathloss_db + shadowing_db + o2i_loss_db; }
};

struct LinkGeometry {
    PropagationModel model;
    double freq_ghz;
    double distance_2d;
    double bs_height;
    double ue_height;
    bool indoor;
};

// Draws LoS state, shadowing, O2I and the fading seed from one link stream.
LinkState make_link(int ue_id, int cell_id, const LinkGeometry& geom, const ChannelParams& params,
                    std::uint64_t link_seed);

// One Rician draw: LoS phasor of power K/(K+1) plus CN(0, 1/(K+1)).
// k_db = -inf gives Rayleigh, +inf a pure unit phasor.
template <typename Rng>
std::complex<double> rician_gain(double k_db, double los_phase_rad, Rng& rng);

using PolarizationGains = std::array<std::complex<double>, 2>;

// i.i.d. per-PRB gains for both polarizations.
template <typename Rng>
std::vector<PolarizationGains> sample_fading(int n_prb, double k_db, Rng& rng);

// Counter-based access to the same fading field: the gain on (polarization,
// prb) of a link depends only on its seed, so any evaluation order agrees.
std::complex<double> fading_gain(const LinkState& link, int polarization, int prb);

} // namespace fr3sim

#include "fr3sim/channel_impl.hpp"
