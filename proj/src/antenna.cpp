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

#include "fr3sim/antenna.hpp"

#include "fr3sim/common.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>

#include <json.hpp>

namespace fr3sim {

namespace {

constexpr double kElementPeakDbi = 8.0;
constexpr double kHalfPowerBeamwidthDeg = 65.0;
constexpr double kSideLobeFloorDb = 30.0;
constexpr double kFrontToBackDb = 30.0;

std::vector<double> grid_frequencies(int beams)
{
    std::vector<double> f(beams);
    for (int i = 0; i < beams; ++i)
        f[i] = static_cast<double>(i - beams / 2) / beams;
    return f;
}

// |(1/N) sum_n exp(j 2 pi n x)|^2
double dirichlet_power(int n, double x)
{
    if (n == 1)
        return 1.0;
    const double den = std::sin(kPi * x);
    if (std::abs(den) < 1e-12)
        return 1.0;
    const double r = std::sin(kPi * n * x) / (n * den);
    return r * r;
}

bool axis_compatible(int beams, int elements)
{
    return beams > 0 && (elements % beams == 0 || beams % elements == 0);
}

} // namespace

double element_gain_db(double azimuth_off_deg, double elevation_off_deg)
{
    const double az = wrap_degrees(azimuth_off_deg);
    const double vertical = -std::min(12.0 * std::pow(elevation_off_deg / kHalfPowerBeamwidthDeg, 2), kSideLobeFloorDb);
    const double horizontal = -std::min(12.0 * std::pow(az / kHalfPowerBeamwidthDeg, 2), kFrontToBackDb);
    return kElementPeakDbi - std::min(-(vertical + horizontal), kFrontToBackDb);
}

Direction to_panel_frame(const ArrayGeometry& array, Direction dir)
{
    if (array.downtilt_deg == 0.0)
        return dir;
    const double az = deg2rad(dir.azimuth_deg);
    const double el = deg2rad(dir.elevation_deg);
    const double t = deg2rad(array.downtilt_deg);
    const double x = std::cos(el) * std::cos(az);
    const double y = std::cos(el) * std::sin(az);
    const double z = std::sin(el);
    const double xp = x * std::cos(t) - z * std::sin(t);
    const double zp = x * std::sin(t) + z * std::cos(t);
    return {rad2deg(std::atan2(y, xp)), rad2deg(std::asin(std::clamp(zp, -1.0, 1.0)))};
}

std::vector<std::complex<double>> steering_vector(const ArrayGeometry& array, Direction panel_dir)
{
    const double az = deg2rad(panel_dir.azimuth_deg);
    const double el = deg2rad(panel_dir.elevation_deg);
    const double uh = array.h_spacing * std::sin(az) * std::cos(el);
    const double uv = array.v_spacing * std::sin(el);
    const double norm = 1.0 / std::sqrt(static_cast<double>(array.panel_elements()));
    std::vector<std::complex<double>> a(array.panel_elements());
    for (int r = 0; r < array.n_rows; ++r)
        for (int c = 0; c < array.n_cols; ++c)
            a[r * array.n_cols + c] = std::polar(norm, 2.0 * kPi * (c * uh + r * uv));
    return a;
}

BeamCodebook::BeamCodebook(const ArrayGeometry& array, BeamKind kind, int beams_h, int beams_v)
    : array_(array), kind_(kind), beams_h_(beams_h), beams_v_(beams_v),
      h_freqs_(grid_frequencies(beams_h)), v_freqs_(grid_frequencies(beams_v))
{
    if (!axis_compatible(beams_h, array.n_cols) || !axis_compatible(beams_v, array.n_rows))
        throw ConfigError("beam grid " + std::to_string(beams_h) + "x" + std::to_string(beams_v)
                          + " is not a DFT grid of a " + std::to_string(array.n_cols) + "x"
                          + std::to_string(array.n_rows) + " panel");
}

int BeamCodebook::oversampling_h() const { return std::max(1, beams_h_ / array_.n_cols); }
int BeamCodebook::oversampling_v() const { return std::max(1, beams_v_ / array_.n_rows); }

std::vector<std::complex<double>> BeamCodebook::weights(int beam) const
{
    const double fh = h_frequency(beam);
    const double fv = v_frequency(beam);
    const double norm = 1.0 / std::sqrt(static_cast<double>(array_.panel_elements()));
    std::vector<std::complex<double>> w(array_.panel_elements());
    for (int r = 0; r < array_.n_rows; ++r)
        for (int c = 0; c < array_.n_cols; ++c)
            w[r * array_.n_cols + c] = std::polar(norm, 2.0 * kPi * (c * fh + r * fv));
    return w;
}

Direction BeamCodebook::steering(int beam) const
{
    double y = h_frequency(beam) / array_.h_spacing;
    double z = v_frequency(beam) / array_.v_spacing;
    z = std::clamp(z, -1.0, 1.0);
    const double el = std::asin(z);
    const double c = std::cos(el);
    y = c > 0.0 ? std::clamp(y / c, -1.0, 1.0) : 0.0;
    return {rad2deg(std::asin(y)), rad2deg(el)};
}

void BeamCodebook::axis_response(Direction panel_dir, std::vector<double>& h, std::vector<double>& v) const
{
    const double az = deg2rad(panel_dir.azimuth_deg);
    const double el = deg2rad(panel_dir.elevation_deg);
    const double uh = array_.h_spacing * std::sin(az) * std::cos(el);
    const double uv = array_.v_spacing * std::sin(el);
    h.resize(beams_h_);
    v.resize(beams_v_);
    for (int i = 0; i < beams_h_; ++i)
        h[i] = dirichlet_power(array_.n_cols, h_freqs_[i] - uh);
    for (int j = 0; j < beams_v_; ++j)
        v[j] = dirichlet_power(array_.n_rows, v_freqs_[j] - uv);
}

int BeamCodebook::best_beam(Direction panel_dir) const
{
    std::vector<double> h;
    std::vector<double> v;
    axis_response(panel_dir, h, v);
    // Separable: the best beam pairs the best horizontal and vertical entries.
    const auto ih = std::distance(h.begin(), std::max_element(h.begin(), h.end()));
    const auto iv = std::distance(v.begin(), std::max_element(v.begin(), v.end()));
    return static_cast<int>(ih + beams_h_ * iv);
}

BeamCodebook build_codebook(const ArrayGeometry& array, BeamKind kind, int size)
{
    if (size <= 0)
        throw ConfigError("codebook size must be positive");
    const int n_h = array.n_cols;
    const int n_v = array.n_rows;
    const int n = array.panel_elements();

    // CSI-RS: full aperture sampling, oversampling along the longer axis.
    if (kind == BeamKind::CSIRS && size >= n && size % n == 0) {
        const int o = size / n;
        if (n_h >= n_v)
            return BeamCodebook(array, kind, n_h * o, n_v);
        return BeamCodebook(array, kind, n_h, n_v * o);
    }

    // Otherwise the widest horizontal fan that factors onto the panel.
    for (int bh = size; bh >= 1; --bh) {
        if (size % bh != 0)
            continue;
        const int bv = size / bh;
        if (axis_compatible(bh, n_h) && axis_compatible(bv, n_v))
            return BeamCodebook(array, kind, bh, bv);
    }
    throw ConfigError("codebook size " + std::to_string(size) + " does not factor onto a "
                      + std::to_string(n_h) + "x" + std::to_string(n_v) + " panel");
}

double array_gain(const BeamCodebook& codebook, int beam, Direction panel_dir)
{
    const ArrayGeometry& a = codebook.array();
    const double az = deg2rad(panel_dir.azimuth_deg);
    const double el = deg2rad(panel_dir.elevation_deg);
    const double uh = a.h_spacing * std::sin(az) * std::cos(el);
    const double uv = a.v_spacing * std::sin(el);
    return a.panel_elements() * dirichlet_power(a.n_cols, codebook.h_frequency(beam) - uh)
        * dirichlet_power(a.n_rows, codebook.v_frequency(beam) - uv);
}

double beam_gain_db(const BeamCodebook& codebook, int beam, Direction dir)
{
    const Direction p = to_panel_frame(codebook.array(), dir);
    return element_gain_db(p.azimuth_deg, p.elevation_deg) + lin2db(array_gain(codebook, beam, p));
}

void write_codebook(std::ostream& os, const BeamCodebook& codebook)
{
    const ArrayGeometry& a = codebook.array();
    nlohmann::ordered_json j;
    j["kind"] = codebook.kind() == BeamKind::SSB ? "SSB" : "CSIRS";
    j["n_rows"] = a.n_rows;
    j["n_cols"] = a.n_cols;
    j["dual_polarized"] = a.dual_polarized;
    j["downtilt_deg"] = a.downtilt_deg;
    j["beams_h"] = codebook.beams_h();
    j["beams_v"] = codebook.beams_v();
    j["oversampling_h"] = codebook.oversampling_h();
    j["oversampling_v"] = codebook.oversampling_v();
    auto& words = j["codewords"] = nlohmann::ordered_json::array();
    for (int b = 0; b < codebook.size(); ++b) {
        const Direction s = codebook.steering(b);
        nlohmann::ordered_json cw;
        cw["index"] = b;
        cw["azimuth_deg"] = s.azimuth_deg;
        cw["elevation_deg"] = s.elevation_deg;
        auto& w = cw["weights"] = nlohmann::ordered_json::array();
        for (const auto& x : codebook.weights(b))
            w.push_back({x.real(), x.imag()});
        words.push_back(std::move(cw));
    }
    os << j.dump(2) << '\n';
}

} // namespace fr3sim
