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

#ifndef IRSRELAY_BEAMFORMING_IRSES_HPP
#define IRSRELAY_BEAMFORMING_IRSES_HPP

// IRS element selection: the N elements are split evenly into M subsets, subset
// m is phase-aligned to RS antenna m, and the antenna outputs are MRC-combined.
// No iterations and no matrix inversions.

#include <cmath>
#include <cstdint>
#include <string_view>

#include "../channel.hpp"
#include "../metrics.hpp"
#include "../random.hpp"
#include "types.hpp"

namespace irsrelay {

// Whether reflections from the other M-1 subsets reach antenna m.
//   idealized: dropped (they are assumed to add up to nothing).
//   full:      kept; they enter the antenna amplitude as extra, unaligned signal.
enum class InterferenceMode { idealized, full };

inline constexpr std::string_view to_string(InterferenceMode m)
{
    return m == InterferenceMode::idealized ? "idealized" : "full";
}

/// Uniformly random even split of N elements over M antennas.
inline Partition irses_partition(std::size_t elements, std::size_t antennas, std::uint64_t seed)
{
    detail::require_config(antennas >= 1, "irses_partition: M must be >= 1");
    detail::require_config(elements >= 1, "irses_partition: N must be >= 1");
    detail::require_config(elements % antennas == 0, "irses_partition: M must divide N (got N=" + std::to_string(elements)
                                                         + ", M=" + std::to_string(antennas) + ")");
    const std::size_t k = elements / antennas;
    const auto perm = random::random_permutation(elements, seed, 0x1E5E5u);
    Partition p;
    p.antennas = antennas;
    p.antenna_of.assign(elements, 0);
    for (std::size_t pos = 0; pos < elements; ++pos)
        p.antenna_of[perm[pos]] = pos / k;
    return p;
}

/// Per-antenna phase alignment: theta_i = arg(h_sr,m) - arg(H_ir(m,i)) - arg(h_si(i)) for i in subset m.
inline PhaseShiftVector irses_phases(const ChannelSet& ch, const Partition& partition)
{
    RVector theta(ch.elements());
    for (Eigen::Index i = 0; i < ch.elements(); ++i) {
        const auto m = static_cast<Eigen::Index>(partition.antenna_of[static_cast<std::size_t>(i)]);
        theta(i) = std::arg(ch.h_sr(m)) - std::arg(ch.H_ir(m, i)) - std::arg(ch.h_si(i));
    }
    return PhaseShiftVector(std::move(theta));
}

/// Amplitude at each RS antenna for the given phases.
inline CVector irses_antenna_amplitudes(const ChannelSet& ch, const Partition& partition,
                                        const PhaseShiftVector& theta, InterferenceMode mode)
{
    const CVector reflected = theta.coefficients().cwiseProduct(ch.h_si);
    if (mode == InterferenceMode::full)
        return ch.h_sr + ch.H_ir * reflected;
    CVector amp = ch.h_sr;
    for (Eigen::Index i = 0; i < ch.elements(); ++i) {
        const auto m = static_cast<Eigen::Index>(partition.antenna_of[static_cast<std::size_t>(i)]);
        amp(m) += ch.H_ir(m, i) * reflected(i);
    }
    return amp;
}

/// Output SNR of per-antenna MRC with branch amplitudes `amp` and branch noise variances `noise`.
inline double irses_combined_snr(const CVector& amp, const RVector& noise, double p_s, MrcRateRule rule)
{
    if (rule == MrcRateRule::branch_sum) {
        double snr = 0.0;
        for (Eigen::Index m = 0; m < amp.size(); ++m)
            snr += std::norm(amp(m)) * p_s / noise(m);
        return snr;
    }
    double num = 0.0;
    double den = 0.0;
    for (Eigen::Index m = 0; m < amp.size(); ++m) {
        num += std::pow(std::abs(amp(m)), 4);
        den += std::norm(amp(m)) * noise(m);
    }
    return num * p_s / den;
}

namespace detail {

inline void irses_check(const ChannelSet& ch, const RVector& noise_per_antenna, const Partition& partition)
{
    require_config(ch.consistent(), "irses_max_rp_mrc: inconsistent channel dimensions");
    require_config(partition.valid() && partition.antennas == static_cast<std::size_t>(ch.antennas())
                       && partition.elements() == static_cast<std::size_t>(ch.elements()),
                   "irses_max_rp_mrc: partition does not match M and N");
    require_config(noise_per_antenna.size() == ch.antennas() && (noise_per_antenna.array() > 0.0).all(),
                   "irses_max_rp_mrc: need one positive noise variance per antenna");
}

inline FirstSlotSolution irses_evaluate(const ChannelSet& ch, double p_s, const RVector& noise_per_antenna,
                                        const Partition& partition, PhaseShiftVector theta, InterferenceMode mode,
                                        MrcRateRule rule)
{
    FirstSlotSolution sol;
    sol.method = FirstSlotMethod::irses;
    sol.theta1 = std::move(theta);
    const CVector amp = irses_antenna_amplitudes(ch, partition, sol.theta1, mode);

    MrcWeights w{CVector(amp.size())};
    for (Eigen::Index m = 0; m < amp.size(); ++m)
        w.weights(m) = std::abs(amp(m)) > 0.0 ? std::conj(amp(m)) / std::abs(amp(m)) : cplx{1.0, 0.0};
    sol.combiner = std::move(w);

    const double snr = irses_combined_snr(amp, noise_per_antenna, p_s, rule);
    sol.receive_power_watt = snr * noise_per_antenna.mean();
    sol.rate_r = std::log2(1.0 + snr);
    sol.trace = {sol.rate_r};
    return sol;
}

} // namespace detail

/// IRSES with per-antenna noise variances.
inline FirstSlotSolution irses_max_rp_mrc(const ChannelSet& ch, double p_s, const RVector& noise_per_antenna,
                                          const Partition& partition,
                                          InterferenceMode mode = InterferenceMode::idealized,
                                          MrcRateRule rule = MrcRateRule::branch_sum)
{
    detail::irses_check(ch, noise_per_antenna, partition);
    return detail::irses_evaluate(ch, p_s, noise_per_antenna, partition, irses_phases(ch, partition), mode, rule);
}

/// IRSES with a common noise variance at every antenna.
inline FirstSlotSolution irses_max_rp_mrc(const ChannelSet& ch, double p_s, double noise_variance,
                                          const Partition& partition,
                                          InterferenceMode mode = InterferenceMode::idealized,
                                          MrcRateRule rule = MrcRateRule::branch_sum)
{
    return irses_max_rp_mrc(ch, p_s, RVector::Constant(ch.antennas(), noise_variance), partition, mode, rule);
}

/// Per-antenna MRC over the partition with Theta_1 = I.
inline FirstSlotSolution irses_fixed_phase(const ChannelSet& ch, double p_s, double noise_variance,
                                           const Partition& partition,
                                           InterferenceMode mode = InterferenceMode::idealized,
                                           MrcRateRule rule = MrcRateRule::branch_sum)
{
    const RVector noise = RVector::Constant(ch.antennas(), noise_variance);
    detail::irses_check(ch, noise, partition);
    return detail::irses_evaluate(ch, p_s, noise, partition, PhaseShiftVector::identity(ch.elements()), mode, rule);
}

} // namespace irsrelay

#endif
