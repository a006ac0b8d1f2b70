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

#include <complex>
#include <iosfwd>
#include <vector>

namespace fr3sim {

// Cross-polarized uniform planar array. One digital port per element and
// polarization; rows are vertical, columns horizontal.
struct ArrayGeometry {
    int n_rows = 1;
    int n_cols = 1;
    bool dual_polarized = true;
    double h_spacing = 0.5; // wavelengths
    double v_spacing = 0.5; // wavelengths
    double downtilt_deg = 0.0;

    int panel_elements() const { return n_rows * n_cols; }
    int element_count() const { return panel_elements() * (dual_polarized ? 2 : 1); }

    bool operator==(const ArrayGeometry&) const = default;
};

// Angles relative to boresight: azimuth positive to the left, elevation
// positive above the horizon.
struct Direction {
    double azimuth_deg = 0.0;
    double elevation_deg = 0.0;
};

enum class BeamKind { SSB, CSIRS };

// 3GPP single-element pattern: 8 dBi peak, 65 degree half-power beamwidth
// in both planes, 30 dB floors.
double element_gain_db(double azimuth_off_deg, double elevation_off_deg);

// Rotates a boresight-relative direction into the frame of the mechanically
// down-tilted panel.
Direction to_panel_frame(const ArrayGeometry& array, Direction dir);

// Unit-norm steering vector over one polarization panel, element index
// r * n_cols + c. `panel_dir` is already in the panel frame.
std::vector<std::complex<double>> steering_vector(const ArrayGeometry& array, Direction panel_dir);

// 2D-DFT beam grid. Along each axis the spatial frequencies are k/B for
// k in [-floor(B/2), ceil(B/2)), so coarse grids are subsets of finer ones
// built on the same panel.
class BeamCodebook {
public:
    BeamCodebook(const ArrayGeometry& array, BeamKind kind, int beams_h, int beams_v);

    BeamKind kind() const { return kind_; }
    const ArrayGeometry& array() const { return array_; }
    int size() const { return beams_h_ * beams_v_; }
    int beams_h() const { return beams_h_; }
    int beams_v() const { return beams_v_; }
    int oversampling_h() const;
    int oversampling_v() const;

    // Beam index = h_index + beams_h * v_index.
    int h_index(int beam) const { return beam % beams_h_; }
    int v_index(int beam) const { return beam / beams_h_; }
    double h_frequency(int beam) const { return h_freqs_[h_index(beam)]; }
    double v_frequency(int beam) const { return v_freqs_[v_index(beam)]; }

    std::vector<std::complex<double>> weights(int beam) const;

    // Beam center in the panel frame.
    Direction steering(int beam) const;

    // Per-axis |a^H w|^2 for every horizontal and vertical grid entry, in
    // closed (Dirichlet kernel) form. The product h[i] * v[j] is the
    // normalized array factor of beam i + beams_h * j.
    void axis_response(Direction panel_dir, std::vector<double>& h, std::vector<double>& v) const;

    // Highest array factor toward `panel_dir`; ties resolve to the lowest index.
    int best_beam(Direction panel_dir) const;

private:
    ArrayGeometry array_;
    BeamKind kind_;
    int beams_h_;
    int beams_v_;
    std::vector<double> h_freqs_;
    std::vector<double> v_freqs_;
};

BeamCodebook build_codebook(const ArrayGeometry& array, BeamKind kind, int size);

// N * |a^H w|^2 toward a panel-frame direction (linear, peak N).
double array_gain(const BeamCodebook& codebook, int beam, Direction panel_dir);

// Element pattern plus array factor toward a boresight-relative direction, dB.
double beam_gain_db(const BeamCodebook& codebook, int beam, Direction dir);

// Codebook dump: geometry, per-codeword steering angles and weights, JSON.
void write_codebook(std::ostream& os, const BeamCodebook& codebook);

} // namespace fr3sim
