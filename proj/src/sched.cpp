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

#include "fr3sim/sched.hpp"

#include "fr3sim/assoc.hpp"
#include "fr3sim/common.hpp"
#include "fr3sim/scenario.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>

namespace fr3sim {

std::optional<int> estimate_demand(int prb_used, int active_ues)
{
    if (active_ues <= 0)
        return std::nullopt;
    const int d = (std::max(prb_used, 0) + active_ues - 1) / active_ues;
    return std::max(d, 1);
}

BeamGrants allocate_beam(int n_prb, const std::vector<BeamRequest>& requests, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> order(requests.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<int> pool(n_prb);
    std::iota(pool.begin(), pool.end(), 0);
    std::size_t remaining = pool.size();

    BeamGrants grants;
    for (std::size_t idx : order) {
        const BeamRequest& r = requests[idx];
        const std::size_t take = std::min<std::size_t>(std::max(r.demand_prb, 0), remaining);
        std::vector<int> prbs;
        prbs.reserve(take);
        for (std::size_t k = 0; k < take; ++k) {
            std::uniform_int_distribution<std::size_t> pick(0, remaining - 1);
            const std::size_t j = pick(rng);
            prbs.push_back(pool[j]);
            pool[j] = pool[--remaining];
        }
        std::sort(prbs.begin(), prbs.end());
        grants[r.ue_id] = std::move(prbs);
    }
    return grants;
}

const std::vector<int>& Allocation::prbs(int ue_id) const
{
    static const std::vector<int> kNone;
    const auto it = by_ue_.find(ue_id);
    return it == by_ue_.end() ? kNone : *it->second;
}

void Allocation::index()
{
    by_ue_.clear();
    for (const auto& [key, grants] : beams)
        for (const auto& [ue, prbs] : grants)
            by_ue_[ue] = &prbs;
}

void allocate_cell(int cell_id, int n_prb, const std::vector<Attachment>& attachments,
                   const std::vector<UserTerminal>& ues, std::uint64_t snapshot_seed, Allocation& out)
{
    std::map<int, std::vector<BeamRequest>> per_beam;
    for (const auto& a : attachments)
        if (a.cell_id == cell_id)
            per_beam[a.csirs_pair.first].push_back({a.ue_id, ues.at(a.ue_id).demand_prb});
    for (auto& [beam, requests] : per_beam) {
        const std::uint64_t seed = derive_seed({snapshot_seed, tag(StreamTag::Scheduler),
                                                static_cast<std::uint64_t>(cell_id), static_cast<std::uint64_t>(beam)});
        out.beams[{cell_id, beam}] = allocate_beam(n_prb, requests, seed);
    }
}

void write_allocation_csv(std::ostream& os, const Allocation& allocation)
{
    os << "cell,beam,ue,prb_count\n";
    for (const auto& [key, grants] : allocation.beams)
        for (const auto& [ue, prbs] : grants)
            os << key.first << ',' << key.second << ',' << ue << ',' << prbs.size() << '\n';
}

} // namespace fr3sim
