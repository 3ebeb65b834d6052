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

#ifndef IRSRELAY_BEAMFORMING_ORACLE_HPP
#define IRSRELAY_BEAMFORMING_ORACLE_HPP

// Exhaustive search over a uniform phase grid. Only meant as a reference for
// small instances; the continuous optimizers must never do worse than it.

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "../channel.hpp"
#include "../metrics.hpp"
#include "types.hpp"

namespace irsrelay {

inline constexpr double max_grid_points = 1e7;

/// Lower bound on grid-optimal power relative to the continuous optimum: with
/// every phase within pi/L of its aligned value each term keeps at least
/// cos(pi/L) of its magnitude along the optimal direction.
inline double grid_power_slack(int grid_levels)
{
    const double c = std::cos(std::numbers::pi / grid_levels);
    return c * c;
}

struct OracleResult {
    PhaseShiftVector theta;
    Beamformer beamformer;
    double receive_power_watt = 0.0;
    double rate = 0.0;
};

namespace detail {

// Visits every grid index vector in lexicographic order (element 0 most significant)
// and keeps the first one with the largest ||base + sum_i columns_i * e^{j 2 pi k_i / L}||^2.
inline std::pair<std::vector<int>, CVector> grid_search(const CVector& base, const CMatrix& columns, int grid_levels)
{
    require_config(grid_levels >= 2, "brute force oracle: grid_levels must be >= 2");
    const auto n = columns.cols();
    require_config(std::pow(static_cast<double>(grid_levels), static_cast<double>(n)) <= max_grid_points,
                   "brute force oracle: grid_levels^N exceeds the enumeration limit of 1e7");

    std::vector<cplx> phasor(static_cast<std::size_t>(grid_levels));
    for (int k = 0; k < grid_levels; ++k)
        phasor[static_cast<std::size_t>(k)] = std::polar(1.0, two_pi * k / grid_levels);

    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    std::vector<int> best_digits = digits;
    CVector best_combined = base;
    double best = -1.0;
    while (true) {
        CVector combined = base;
        for (Eigen::Index i = 0; i < n; ++i)
            combined += columns.col(i) * phasor[static_cast<std::size_t>(digits[static_cast<std::size_t>(i)])];
        const double power = combined.squaredNorm();
        if (power > best) {
            best = power;
            best_digits = digits;
            best_combined = combined;
        }
        Eigen::Index pos = n - 1;
        while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == grid_levels) {
            digits[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0)
            break;
    }
    return {best_digits, best_combined};
}

inline PhaseShiftVector grid_phases(const std::vector<int>& digits, int grid_levels)
{
    RVector theta(static_cast<Eigen::Index>(digits.size()));
    for (std::size_t i = 0; i < digits.size(); ++i)
        theta(static_cast<Eigen::Index>(i)) = two_pi * digits[i] / grid_levels;
    return PhaseShiftVector(std::move(theta));
}

} // namespace detail

/// Best first-slot (theta_1, u_r) over the phase grid {2 pi k / L}, with u_r the matched filter.
inline OracleResult brute_force_max_rp(const ChannelSet& ch, double p_s, double noise_variance, int grid_levels)
{
    detail::require_config(ch.consistent(), "brute_force_max_rp: inconsistent channel dimensions");
    const CMatrix columns = ch.H_ir * ch.h_si.asDiagonal();
    auto [digits, combined] = detail::grid_search(ch.h_sr, columns, grid_levels);
    OracleResult out{detail::grid_phases(digits, grid_levels), Beamformer(combined), 0.0, 0.0};
    out.receive_power_watt = p_s * combined.squaredNorm();
    out.rate = rate_from_power(out.receive_power_watt, noise_variance);
    return out;
}

/// Best second-slot (theta_2, u_t) over the phase grid, with u_t the transmit matched filter.
inline OracleResult brute_force_second_slot(const ChannelSet& ch, double p_r, double noise_variance, int grid_levels)
{
    detail::require_config(ch.consistent(), "brute_force_second_slot: inconsistent channel dimensions");
    // r(theta) = conj(h_rd) + sum_i conj(H_ri(:,i)) conj(h_id,i) e^{j theta_i}
    const CMatrix columns = ch.H_ri.conjugate() * ch.h_id.conjugate().asDiagonal();
    auto [digits, combined] = detail::grid_search(ch.h_rd.conjugate(), columns, grid_levels);
    OracleResult out{detail::grid_phases(digits, grid_levels), Beamformer(combined.conjugate()), 0.0, 0.0};
    out.receive_power_watt = p_r * combined.squaredNorm();
    out.rate = rate_from_power(out.receive_power_watt, noise_variance);
    return out;
}

} // namespace irsrelay

#endif
