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

#include <random>
#include <string>

namespace fr3sim {

template <typename Rng>
Vec2 CoverageIndex::sample(const TrafficArea& area, Rng& rng) const
{
    const Raster& r = rasters_[slot(area)];
    std::uniform_real_distribution<double> u(0.0, 1.0);
    constexpr int kMaxTries = 100000;
    for (int t = 0; t < kMaxTries; ++t) {
        Vec2 p;
        if (!r.cells.empty()) {
            std::uniform_int_distribution<std::size_t> pick(0, r.cells.size() - 1);
            const int g = r.cells[pick(rng)];
            p = {((g % nx_) + u(rng)) * step_, ((g / nx_) + u(rng)) * step_};
        } else {
            p = {u(rng) * topology_->width_m, u(rng) * topology_->height_m};
        }
        if (topology_->contains(p) && in_region(area, p))
            return p;
    }
    throw GenerationError("coverage region of cell " + std::to_string(area.cell_id) + " is empty");
}

} // namespace fr3sim
