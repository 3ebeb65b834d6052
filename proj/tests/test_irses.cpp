// SPDX-License-Identifier: Apache-2.0
//
// irsrelay - link-level simulator for IRS-aided multi-antenna relay networks
// Copyright (C) 2026 The irsrelay authors
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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include <irsrelay/beamforming.hpp>

#include "support/test_support.hpp"

using namespace irsrelay;
using Catch::Approx;
using test::noise_watt;
using test::p_watt;

TEST_CASE("irses_partition splits evenly")
{
    const auto p = irses_partition(4, 2, 1);
    CHECK(p.valid());
    const auto a = p.subset(0);
    const auto b = p.subset(1);
    CHECK(a.size() == 2u);
    CHECK(b.size() == 2u);
    std::set<std::size_t> all(a.begin(), a.end());
    all.insert(b.begin(), b.end());
    CHECK(all == std::set<std::size_t>{0, 1, 2, 3});

    CHECK_THROWS_AS(irses_partition(5, 2, 1), ConfigError);
    CHECK_THROWS_AS(irses_partition(4, 0, 1), ConfigError);
    CHECK(irses_partition(40, 8, 3).antenna_of == irses_partition(40, 8, 3).antenna_of);
    CHECK(irses_partition(40, 8, 3).antenna_of != irses_partition(40, 8, 4).antenna_of);
}

TEST_CASE("every element is equally likely to land on every antenna")
{
    const int trials = 8000;
    std::vector<int> count(4, 0);
    for (int s = 0; s < trials; ++s)
        ++count[irses_partition(12, 4, static_cast<std::uint64_t>(s)).antenna_of[5]];
    double chi2 = 0.0;
    for (int c : count)
        chi2 += std::pow(c - trials / 4.0, 2) / (trials / 4.0);
    CHECK(chi2 < 16.27); // 0.999 quantile, 3 degrees of freedom
}

TEST_CASE("real positive channels need no rotation")
{
    auto ch = test::constant_channels(2, 4, 1.0);
    ch.h_sr << 0.5, 2.0;
    ch.H_ir << 1, 2, 3, 4, 5, 6, 7, 8;
    const auto part = irses_partition(4, 2, 7);
    const auto theta = irses_phases(ch, part);
    for (Eigen::Index i = 0; i < 4; ++i)
        CHECK(circular_distance(theta[i], 0.0) < 1e-15);
    const CVector amp = irses_antenna_amplitudes(ch, part, theta, InterferenceMode::idealized);
    for (Eigen::Index m = 0; m < 2; ++m) {
        double expected = ch.h_sr(m).real();
        for (auto i : part.subset(static_cast<std::size_t>(m)))
            expected += ch.H_ir(m, static_cast<Eigen::Index>(i)).real();
        CHECK(std::abs(amp(m) - expected) < 1e-14);
    }
}

TEST_CASE("aligned antenna amplitude is the sum of constituent magnitudes")
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto ch = test::unit_channels(4, 12, seed);
        const auto part = irses_partition(12, 4, seed);
        const CVector amp = irses_antenna_amplitudes(ch, part, irses_phases(ch, part), InterferenceMode::idealized);
        for (Eigen::Index m = 0; m < 4; ++m) {
            double expected = std::abs(ch.h_sr(m));
            for (auto i : part.subset(static_cast<std::size_t>(m)))
                expected += std::abs(ch.H_ir(m, static_cast<Eigen::Index>(i))) * std::abs(ch.h_si(static_cast<Eigen::Index>(i)));
            CHECK(std::abs(std::abs(amp(m)) - expected) <= 1e-12 * expected);
        }
    }
}

TEST_CASE("combined rate matches a from-scratch evaluation")
{
    const auto ch = test::unit_channels(2, 4, 31);
    const auto part = irses_partition(4, 2, 31);
    const auto theta = irses_phases(ch, part);

    // Per-antenna amplitudes built element by element.
    double a[2];
    for (int m = 0; m < 2; ++m) {
        cplx sum = ch.h_sr(m);
        for (auto i : part.subset(static_cast<std::size_t>(m)))
            sum += ch.H_ir(m, static_cast<Eigen::Index>(i)) * std::polar(1.0, theta[static_cast<Eigen::Index>(i)])
                 * ch.h_si(static_cast<Eigen::Index>(i));
        a[m] = std::abs(sum);
    }

    const auto power_ratio = irses_max_rp_mrc(ch, p_watt, noise_watt, part, InterferenceMode::idealized,
                                              MrcRateRule::power_ratio);
    const double fourth = std::pow(a[0], 4) + std::pow(a[1], 4);
    const double second = (a[0] * a[0] + a[1] * a[1]) * noise_watt;
    CHECK(power_ratio.rate_r == Approx(std::log2(1.0 + fourth * p_watt / second)).epsilon(1e-12));

    const auto branch_sum = irses_max_rp_mrc(ch, p_watt, noise_watt, part);
    CHECK(branch_sum.rate_r == Approx(std::log2(1.0 + (a[0] * a[0] + a[1] * a[1]) * p_watt / noise_watt)).epsilon(1e-12));
}

TEST_CASE("per-antenna noise enters each branch separately")
{
    const auto ch = test::unit_channels(2, 4, 3);
    const auto part = irses_partition(4, 2, 3);
    RVector noise(2);
    noise << 0.01, 0.04;
    const auto sol = irses_max_rp_mrc(ch, p_watt, noise, part);
    const CVector amp = irses_antenna_amplitudes(ch, part, sol.theta1, InterferenceMode::idealized);
    const double snr = std::norm(amp(0)) * p_watt / 0.01 + std::norm(amp(1)) * p_watt / 0.04;
    CHECK(sol.rate_r == Approx(std::log2(1.0 + snr)).epsilon(1e-12));
    CHECK_THROWS_AS(irses_max_rp_mrc(ch, p_watt, RVector::Constant(3, 0.01), part), ConfigError);
}

TEST_CASE("full mode keeps the cross-subset reflections")
{
    const auto ch = test::unit_channels(3, 6, 17);
    const auto part = irses_partition(6, 3, 17);
    const auto theta = irses_phases(ch, part);
    const CVector full = irses_antenna_amplitudes(ch, part, theta, InterferenceMode::full);
    CHECK((full - (ch.h_sr + ch.H_ir * theta.coefficients().cwiseProduct(ch.h_si))).norm() < 1e-13);
}

TEST_CASE("MRC weights are unit-modulus co-phasing weights")
{
    const auto ch = test::unit_channels(4, 8, 2);
    const auto part = irses_partition(8, 4, 2);
    const auto sol = irses_max_rp_mrc(ch, p_watt, noise_watt, part);
    const CVector amp = irses_antenna_amplitudes(ch, part, sol.theta1, InterferenceMode::idealized);
    const CVector& w = std::get<MrcWeights>(sol.combiner).weights;
    for (Eigen::Index m = 0; m < 4; ++m) {
        CHECK(std::abs(std::abs(w(m)) - 1.0) < 1e-15);
        CHECK(std::abs((w(m) * amp(m)).imag()) < 1e-12 * std::abs(amp(m)));
    }
}

TEST_CASE("partition must match the channel")
{
    const auto ch = test::unit_channels(2, 4, 1);
    CHECK_THROWS_AS(irses_max_rp_mrc(ch, p_watt, noise_watt, irses_partition(6, 2, 1)), ConfigError);
    CHECK_THROWS_AS(irses_max_rp_mrc(ch, p_watt, noise_watt, irses_partition(4, 4, 1)), ConfigError);
}

TEST_CASE("IRSES is scale covariant")
{
    const auto ch = test::default_channels(4, 8, 5);
    const auto part = irses_partition(8, 4, 5);
    const auto a = irses_max_rp_mrc(ch, p_watt, noise_watt, part);
    const auto b = irses_max_rp_mrc(test::source_scaled(ch, 5.0), p_watt, noise_watt, part);
    for (Eigen::Index i = 0; i < 8; ++i)
        CHECK(circular_distance(a.theta1[i], b.theta1[i]) < 1e-12);
    CHECK(b.receive_power_watt == Approx(25.0 * a.receive_power_watt).epsilon(1e-12));

    // Scaling every block keeps the phases but not the power ratio: the cascade is bilinear.
    const auto all = irses_max_rp_mrc(ch.scaled(5.0), p_watt, noise_watt, part);
    for (Eigen::Index i = 0; i < 8; ++i)
        CHECK(circular_distance(a.theta1[i], all.theta1[i]) < 1e-12);
}
