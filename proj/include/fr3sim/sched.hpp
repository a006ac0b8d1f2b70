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

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace fr3sim {

// ceil(prb_used / active_ues), at least 1; empty when no UE is active.
std::optional<int> estimate_demand(int prb_used, int active_ues);

struct BeamRequest {
    int ue_id = 0;
    int demand_prb = 1;
};

// UE id -> sorted PRB indices.
using BeamGrants = std::map<int, std::vector<int>>;

// Serves the requests in a random order, each taking min(demand, remaining)
// PRBs drawn uniformly without replacement from the beam's pool [0, n_prb).
BeamGrants allocate_beam(int n_prb, const std::vector<BeamRequest>& requests, std::uint64_t seed);

// (cell id, CSI-RS beam) -> grants. A dual-layer UE is listed under its
// first-polarization beam; the second layer reuses the same PRBs.
struct Allocation {
    std::map<std::pair<int, int>, BeamGrants> beams;

    Allocation() = default;
    Allocation(const Allocation& o) : beams(o.beams) { index(); }
    Allocation(Allocation&&) = default;
    Allocation& operator=(const Allocation& o)
    {
        beams = o.beams;
        index();
        return *this;
    }
    Allocation& operator=(Allocation&&) = default;

    // PRBs granted to a UE, empty if unscheduled.
    const std::vector<int>& prbs(int ue_id) const;
    void index();

private:
    std::map<int, const std::vector<int>*> by_ue_;
};

struct Attachment;
struct UserTerminal;

// Per-beam pools for one cell. Seeds are derived per (cell, beam) so cells
// and beams can be scheduled in any order.
void allocate_cell(int cell_id, int n_prb, const std::vector<Attachment>& attachments,
                   const std::vector<UserTerminal>& ues, std::uint64_t snapshot_seed, Allocation& out);

// CSV: cell,beam,ue,prb_count
void write_allocation_csv(std::ostream& os, const Allocation& allocation);

} // namespace fr3sim
