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

#include <irsrelay/beamforming.hpp>

#include "support/test_support.hpp"

using namespace irsrelay;
using Catch::Approx;
using test::noise_watt;
using test::p_watt;

TEST_CASE("second slot with one antenna and one element is the scalar optimum")
{
    const auto ch = test::unit_channels(1, 1, 4);
    const auto sol = second_slot_optimize(ch, p_watt, noise_watt);
    const double amp = std::abs(ch.h_rd(0)) + std::abs(ch.h_id(0)) * std::abs(ch.H_ri(0, 0));
    CHECK(sol.rate_d == Approx(std::log2(1.0 + p_watt * amp * amp / noise_watt)).epsilon(1e-12));
}

TEST_CASE("second slot trace is non-decreasing")
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto sol = second_slot_optimize(test::default_channels(8, 16, seed), p_watt, noise_watt);
        for (std::size_t i = 1; i < sol.trace.size(); ++i)
            CHECK(sol.trace[i] >= sol.trace[i - 1] - 1e-12);
        CHECK(std::abs(sol.u_t.weights().norm() - 1.0) < 1e-12);
    }
}

TEST_CASE("second slot is the first-slot optimizer on the mirrored channel")
{
    // |r^T u_t| with r = conj(h_rd) + conj(H_ri) Theta conj(h_id) is a first-slot
    // amplitude with h_sr -> conj(h_rd), H_ir -> conj(H_ri), h_si -> conj(h_id).
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto ch = test::default_channels(5, 9, seed);
        ChannelSet mirror = ch;
        mirror.h_sr = ch.h_rd.conjugate();
        mirror.H_ir = ch.H_ri.conjugate();
        mirror.h_si = ch.h_id.conjugate();
        const auto second = second_slot_optimize(ch, p_watt, noise_watt);
        const auto first = ais_max_rp(mirror, p_watt, noise_watt);
        REQUIRE(second.trace.size() == first.trace.size());
        for (std::size_t i = 0; i < first.trace.size(); ++i)
            CHECK(second.trace[i] == Approx(first.trace[i]).epsilon(1e-12));
        for (Eigen::Index i = 0; i < 9; ++i)
            CHECK(circular_distance(second.theta2[i], first.theta1[i]) < 1e-9);
    }
}

TEST_CASE("second slot reaches the grid oracle")
{
    double sum_ratio = 0.0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto ch = test::default_channels(2, 2, seed);
        const auto sol = second_slot_optimize(ch, p_watt, noise_watt);
        const auto grid = brute_force_second_slot(ch, p_watt, noise_watt, 16);
        // The optimizer stops once the rate moves by less than epsilon, so it may trail the grid by that much.
        CHECK(grid.rate <= sol.rate_d + IterationControl{}.epsilon);
        CHECK(grid.receive_power_watt >= grid_power_slack(16) * sol.receive_power_watt);
        sum_ratio += grid.rate / sol.rate_d;
    }
    CHECK(sum_ratio / 100.0 >= 0.99);
}

TEST_CASE("fixed-phase second slot uses the matched filter")
{
    const auto ch = test::unit_channels(3, 5, 2);
    const auto sol = second_slot_fixed_phase(ch, p_watt, noise_watt);
    const CVector r = ch.h_rd.conjugate() + ch.H_ri.conjugate() * ch.h_id.conjugate();
    CHECK(sol.receive_power_watt == Approx(p_watt * r.squaredNorm()).epsilon(1e-12));
}
