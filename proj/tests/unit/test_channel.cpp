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
#include "fr3sim/common.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace fr3sim;

namespace {

double d3(double d2d, double h_bs, double h_ut) { return std::hypot(d2d, h_bs - h_ut); }

template <typename F>
std::pair<double, double> moments(int n, F draw)
{
    double s = 0.0;
    double s2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = draw();
        s += x;
        s2 += x * x;
    }
    const double mean = s / n;
    return {mean, std::sqrt(s2 / n - mean * mean)};
}

} // namespace

TEST_CASE("propagation model follows the 15 m height rule")
{
    CHECK(classify_model(25.0) == PropagationModel::UMa);
    CHECK(classify_model(15.0) == PropagationModel::UMi);
    CHECK(classify_model(10.0) == PropagationModel::UMi);
}

TEST_CASE("LoS probability limits and monotonicity")
{
    CHECK(los_probability(PropagationModel::UMi, 0.0, 1.5) == 1.0);
    CHECK(los_probability(PropagationModel::UMa, 18.0, 1.5) == 1.0);
    // 38.901 UMa at 100 m, UE at 1.5 m: 18/100 + exp(-100/63) * 0.82.
    CHECK(los_probability(PropagationModel::UMa, 100.0, 1.5) == doctest::Approx(0.18 + std::exp(-100.0 / 63.0) * 0.82));
    CHECK(los_probability(PropagationModel::UMi, 100.0, 1.5) == doctest::Approx(0.18 + std::exp(-100.0 / 36.0) * 0.82));
    for (auto m : {PropagationModel::UMa, PropagationModel::UMi}) {
        double prev = 1.0;
        for (double d = 0.0; d <= 3000.0; d += 0.5) {
            const double p = los_probability(m, d, 1.5);
            CHECK(p <= prev + 1e-15);
            CHECK(p >= 0.0);
            prev = p;
        }
    }
}

TEST_CASE("UMa LoS pathloss gap between 10 and 3.5 GHz")
{
    const double expected = 20.0 * std::log10(10.0 / 3.5);
    CHECK(expected == doctest::Approx(9.12).epsilon(0.01 / 9.12));
    for (double d = 10.0; d <= 500.0; d += 7.0) {
        const double gap = pathloss(PropagationModel::UMa, true, 10.0, d, d3(d, 25.0, 1.5), 25.0, 1.5).db
            - pathloss(PropagationModel::UMa, true, 3.5, d, d3(d, 25.0, 1.5), 25.0, 1.5).db;
        CHECK(std::abs(gap - expected) < 0.01);
    }
}

TEST_CASE("doubling distance in UMa LoS adds 22 log10 2")
{
    for (double d : {20.0, 50.0, 150.0}) {
        const double a = pathloss(PropagationModel::UMa, true, 3.5, d, d, 25.0, 1.5).db;
        const double b = pathloss(PropagationModel::UMa, true, 3.5, 2.0 * d, 2.0 * d, 25.0, 1.5).db;
        CHECK(b - a == doctest::Approx(22.0 * std::log10(2.0)));
        CHECK(b - a == doctest::Approx(6.62).epsilon(0.005 / 6.62));
    }
}

TEST_CASE("pathloss reference values")
{
    // Hand-evaluated 38.901 expressions.
    const double d = 200.0;
    const double dd = d3(d, 25.0, 1.5);
    CHECK(pathloss(PropagationModel::UMa, true, 2.0, d, dd, 25.0, 1.5).db
          == doctest::Approx(28.0 + 22.0 * std::log10(dd) + 20.0 * std::log10(2.0)));
    CHECK(pathloss(PropagationModel::UMa, false, 2.0, d, dd, 25.0, 1.5).db
          == doctest::Approx(13.54 + 39.08 * std::log10(dd) + 20.0 * std::log10(2.0)));
    const double du = d3(d, 10.0, 1.5);
    CHECK(pathloss(PropagationModel::UMi, true, 10.0, d, du, 10.0, 1.5).db
          == doctest::Approx(32.4 + 21.0 * std::log10(du) + 20.0));
    // Past the UMa breakpoint (4 * 24 * 0.5 * 2e9 / c ~ 640 m).
    const double far = 2000.0;
    const double df = d3(far, 25.0, 1.5);
    const double dbp = 4.0 * 24.0 * 0.5 * 2e9 / 299792458.0;
    CHECK(pathloss(PropagationModel::UMa, true, 2.0, far, df, 25.0, 1.5).db
          == doctest::Approx(28.0 + 40.0 * std::log10(df) + 20.0 * std::log10(2.0)
                             - 9.0 * std::log10(dbp * dbp + 23.5 * 23.5)));
}

TEST_CASE("NLoS never beats LoS and pathloss grows with distance")
{
    for (auto m : {PropagationModel::UMa, PropagationModel::UMi}) {
        const double h = m == PropagationModel::UMa ? 25.0 : 10.0;
        for (bool los : {true, false}) {
            double prev = -1.0;
            for (double d = 10.0; d < 5000.0; d *= 1.05) {
                const double pl = pathloss(m, los, 10.0, d, d3(d, h, 1.5), h, 1.5).db;
                CHECK(pl > prev);
                prev = pl;
                if (!los)
                    CHECK(pl >= pathloss(m, true, 10.0, d, d3(d, h, 1.5), h, 1.5).db);
            }
        }
    }
}

TEST_CASE("short distances clamp to 10 m and flag it")
{
    const auto pl = pathloss(PropagationModel::UMa, true, 3.5, 2.0, d3(2.0, 25.0, 1.5), 25.0, 1.5);
    CHECK(pl.clamped);
    CHECK(pl.db == doctest::Approx(pathloss(PropagationModel::UMa, true, 3.5, 10.0, d3(10.0, 25.0, 1.5), 25.0, 1.5).db));
    CHECK_FALSE(pathloss(PropagationModel::UMa, true, 3.5, 10.0, 30.0, 25.0, 1.5).clamped);
}

TEST_CASE("carrier outside the model range is rejected")
{
    CHECK_THROWS_AS(pathloss(PropagationModel::UMa, true, 0.3, 100.0, 100.0, 25.0, 1.5), ConfigError);
    CHECK_THROWS_AS(pathloss(PropagationModel::UMi, true, 120.0, 100.0, 100.0, 10.0, 1.5), ConfigError);
}

TEST_CASE("shadowing is zero-mean with the tabulated spread")
{
    std::mt19937_64 rng(1);
    const auto [m0, s0] = moments(100000, [&] { return sample_shadowing(PropagationModel::UMa, false, rng); });
    CHECK(std::abs(m0) < 0.1);
    CHECK(std::abs(s0 - 6.0) < 0.1);
    const auto [m1, s1] = moments(100000, [&] { return sample_shadowing(PropagationModel::UMa, true, rng); });
    CHECK(std::abs(m1) < 0.1);
    CHECK(std::abs(s1 - 4.0) < 0.1);

    std::mt19937_64 a(99);
    std::mt19937_64 b(99);
    CHECK(sample_shadowing(PropagationModel::UMi, false, a) == sample_shadowing(PropagationModel::UMi, false, b));
}

TEST_CASE("O2I penetration")
{
    std::mt19937_64 rng(5);
    CHECK(o2i_penetration(10.0, rng, false) == 0.0);
    double high = 0.0;
    double low = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        const double a = o2i_penetration(10.0, rng, true);
        const double b = o2i_penetration(2.7, rng, true);
        CHECK(a >= 0.0);
        CHECK(b >= 0.0);
        high += a;
        low += b;
    }
    CHECK(high / n > low / n);
    // Deterministic wall part from the glass/concrete mix.
    const double glass = 2.0 + 0.2 * 2.0;
    const double concrete = 5.0 + 4.0 * 2.0;
    CHECK(o2i_wall_loss_db(2.0)
          == doctest::Approx(5.0 - 10.0 * std::log10(0.3 * std::pow(10.0, -glass / 10.0) + 0.7 * std::pow(10.0, -concrete / 10.0))));
}

TEST_CASE("Rician gains have unit mean power")
{
    std::mt19937_64 rng(17);
    const double inf = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 100; ++i)
        CHECK(std::abs(rician_gain(inf, 0.3 * i, rng)) == doctest::Approx(1.0).epsilon(1e-15));
    for (double k : {-inf, 9.0}) {
        double p = 0.0;
        const int n = 100000;
        for (int i = 0; i < n; ++i)
            p += std::norm(rician_gain(k, 0.7, rng));
        CHECK(std::abs(p / n - 1.0) < 0.01);
    }
    const auto grid = sample_fading(273, 9.0, rng);
    CHECK(grid.size() == 273);
}

TEST_CASE("counter-based fading is order independent and unit power")
{
    LinkGeometry g{PropagationModel::UMa, 3.5, 120.0, 25.0, 1.5, false};
    const auto link = make_link(3, 4, g, ChannelParams{}, 12345);
    const auto a = fading_gain(link, 1, 200);
    (void)fading_gain(link, 0, 5);
    CHECK(fading_gain(link, 1, 200) == a);
    double p = 0.0;
    int n = 0;
    for (int i = 0; i < 5000; ++i) {
        const auto l = make_link(i, 0, g, ChannelParams{}, derive_seed({7, static_cast<std::uint64_t>(i)}));
        for (int prb = 0; prb < 10; ++prb, ++n)
            p += std::norm(fading_gain(l, prb % 2, prb));
    }
    CHECK(std::abs(p / n - 1.0) < 0.02);
}

TEST_CASE("link state is reproducible and consistent")
{
    LinkGeometry g{PropagationModel::UMi, 10.0, 300.0, 10.0, 1.5, true};
    const auto a = make_link(1, 2, g, ChannelParams{}, 42);
    const auto b = make_link(1, 2, g, ChannelParams{}, 42);
    CHECK(a.los == b.los);
    CHECK(a.shadowing_db == b.shadowing_db);
    CHECK(a.o2i_loss_db == b.o2i_loss_db);
    CHECK(a.fading_seed == b.fading_seed);
    CHECK(a.o2i_loss_db >= 0.0);
    CHECK(std::isfinite(a.coupling_loss_db()));
    CHECK(a.rician_k_db == (a.los ? 9.0 : -std::numeric_limits<double>::infinity()));
    const auto out = make_link(1, 2, LinkGeometry{PropagationModel::UMi, 10.0, 300.0, 10.0, 1.5, false}, ChannelParams{}, 42);
    CHECK(out.o2i_loss_db == 0.0);
}
