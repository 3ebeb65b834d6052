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

#ifndef IRSRELAY_METRICS_HPP
#define IRSRELAY_METRICS_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>
#include <initializer_list>

#include "beamforming/types.hpp"
#include "channel.hpp"
#include "error.hpp"

namespace irsrelay {

/// log2(1 + power / noise)
inline double rate_from_power(double power_watt, double noise_variance_watt)
{
    detail::require_domain(noise_variance_watt > 0.0, "rate_from_power: noise variance must be > 0");
    detail::require_domain(power_watt >= 0.0, "rate_from_power: power must be >= 0");
    return std::log2(1.0 + power_watt / noise_variance_watt);
}

/// Half-duplex two-hop DF rate: min(R_r, R_d) / 2.
inline double system_rate(double rate_r, double rate_d)
{
    return 0.5 * std::min(rate_r, rate_d);
}

/// Noise variance giving snr_db = (P_s + P_r) / sigma^2.
inline double noise_variance_for_snr(double snr_db, double p_s_watt, double p_r_watt)
{
    detail::require_domain(p_s_watt > 0.0 && p_r_watt > 0.0, "noise_variance_for_snr: powers must be > 0");
    return (p_s_watt + p_r_watt) / std::pow(10.0, snr_db / 10.0);
}

/// Received first-slot signal power P_s |u_r^H (h_sr + H_ir Theta_1 h_si)|^2.
inline double receive_power_ais(const ChannelSet& ch, const PhaseShiftVector& theta1, const Beamformer& u_r, double p_s)
{
    const CVector combined = ch.h_sr + ch.H_ir * theta1.coefficients().cwiseProduct(ch.h_si);
    return p_s * std::norm(u_r.apply(combined));
}

/// Received second-slot power P_r |(h_rd^H + h_id^H Theta_2 H_ri^H) u_t|^2.
inline double receive_power_second_slot(const ChannelSet& ch, const PhaseShiftVector& theta2, const Beamformer& u_t,
                                        double p_r)
{
    // (h_rd^H + h_id^H Theta H_ri^H) u = h_rd^H u + sum_i theta_i conj(h_id_i) (H_ri^H u)_i
    const CVector ri_u = ch.H_ri.adjoint() * u_t.weights();
    const cplx value = ch.h_rd.dot(u_t.weights()) + ch.h_id.conjugate().cwiseProduct(theta2.coefficients()).cwiseProduct(ri_u).sum();
    return p_r * std::norm(value);
}

// How MRC branch amplitudes turn into an output SNR.
enum class MrcRateRule {
    branch_sum,        // sum_k |a_k|^2 P / sigma_k^2, the SNR of ideal maximum ratio combining
    power_ratio,       // sum_k |a_k|^4 P / (norm-term * sigma^2), the fourth-power ratio form
};

inline constexpr std::string_view to_string(MrcRateRule r)
{
    return r == MrcRateRule::branch_sum ? "branch-sum" : "power-ratio";
}

struct RateResult {
    std::string method;
    double rate_r = 0.0;
    double rate_d = 0.0;
    double rate_s = 0.0;
    double pre_log = 0.5; // 0.5 for the two-hop relay, 1 for single-hop baselines
    std::size_t iterations_r = 0;
    std::size_t iterations_d = 0;
};

inline RateResult make_two_hop_result(std::string method, double rate_r, double rate_d, std::size_t it_r,
                                      std::size_t it_d)
{
    return {std::move(method), rate_r, rate_d, system_rate(rate_r, rate_d), 0.5, it_r, it_d};
}

// ---- computational complexity -------------------------------------------------

struct FlopsEstimate {
    std::string method;
    double antennas = 0;
    double elements = 0;
    std::vector<double> iterations;
    double flops = 0;
};

namespace detail {
inline void require_positive_counts(std::initializer_list<double> values, const char* who)
{
    for (double v : values)
        require_domain(v >= 1.0, std::string(who) + ": all arguments must be >= 1");
}
} // namespace detail

/// AIS complexity; L1, L2 are the alternating-iteration counts of slot one and two.
inline FlopsEstimate flops_ais(double m, double n, double l1, double l2)
{
    detail::require_positive_counts({m, n, l1, l2}, "flops_ais");
    const double f = l2 * (n * n * n * n + 8 * m * n * n * n + 5 * n * n * n + 24 * m * n * n - 2 * n * n)
        + (3 * l1 + 18 * l2) * m * n + (5 * l1 + 2 * l2) * m + (4 * l1 + 3 * l2) * n;
    return {"ais", m, n, {l1, l2}, f};
}

/// NSP + MRC complexity; L3, L4 are the iteration counts of slot one and two.
inline FlopsEstimate flops_nsp(double m, double n, double l3, double l4)
{
    detail::require_positive_counts({m, n, l3, l4}, "flops_nsp");
    const double f = n * n * n + 2 * (1 + l3) * m * m * m + 2 * (1 + l3) * m * m * n + (4 + 3 * l3) * m * n * n
        + (4 + 3 * l3) * m * m - l3 * n * n - (1 - 5 * l3 - 18 * l4) * m * n - (1 - 4 * l3 - 2 * l4) * m
        + (1 + 2 * l3 + 3 * l4) * n;
    return {"nsp", m, n, {l3, l4}, f};
}

/// IRSES + MRC complexity with K = N / M elements per subset.
inline FlopsEstimate flops_irses(double m, double k, double n, double l5)
{
    detail::require_positive_counts({m, k, n, l5}, "flops_irses");
    detail::require_domain(m * k == n, "flops_irses: K must equal N / M");
    const double f = 15 * m * k + 8 * m + 10 * k + l5 * (18 * m * n + 2 * m + 3 * n);
    return {"irses", m, n, {l5}, f};
}

} // namespace irsrelay

#endif
