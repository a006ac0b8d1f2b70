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

#include <algorithm>
#include <limits>
#include <random>

namespace fr3sim {

template <typename Rng>
double sample_shadowing(PropagationModel model, bool los, Rng& rng)
{
    std::normal_distribution<double> n(0.0, shadowing_sigma_db(model, los));
    return n(rng);
}

template <typename Rng>
double o2i_penetration(double freq_ghz, Rng& rng, bool indoor)
{
    if (!indoor)
        return 0.0;
    std::uniform_real_distribution<double> u(0.0, 25.0);
    const double d_in = std::min(u(rng), u(rng));
    std::normal_distribution<double> n(0.0, 4.4);
    return std::max(0.0, o2i_wall_loss_db(freq_ghz) + 0.5 * d_in + n(rng));
}

template <typename Rng>
std::complex<double> rician_gain(double k_db, double los_phase_rad, Rng& rng)
{
    if (k_db == std::numeric_limits<double>::infinity())
        return std::polar(1.0, los_phase_rad);
    std::normal_distribution<double> n(0.0, std::sqrt(0.5));
    const std::complex<double> scatter(n(rng), n(rng));
    if (k_db == -std::numeric_limits<double>::infinity())
        return scatter;
    const double k = db2lin(k_db);
    return std::polar(std::sqrt(k / (k + 1.0)), los_phase_rad) + std::sqrt(1.0 / (k + 1.0)) * scatter;
}

template <typename Rng>
std::vector<PolarizationGains> sample_fading(int n_prb, double k_db, Rng& rng)
{
    std::uniform_real_distribution<double> phase(-kPi, kPi);
    const double phi = phase(rng);
    std::vector<PolarizationGains> out(n_prb > 0 ? n_prb : 0);
    for (auto& g : out) {
        g[0] = rician_gain(k_db, phi, rng);
        g[1] = rician_gain(k_db, phi, rng);
    }
    return out;
}

} // namespace fr3sim
