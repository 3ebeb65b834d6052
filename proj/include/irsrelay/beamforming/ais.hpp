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

#ifndef IRSRELAY_BEAMFORMING_AIS_HPP
#define IRSRELAY_BEAMFORMING_AIS_HPP

// Max-RP by alternating between the IRS phases and the RS receive beamformer.
//
// For a fixed u_r the received amplitude is u_r^H h_sr + sum_i x_i e^{j theta_i}
// with x = (u_r^H H_ir diag(h_si))^T, maximized by rotating every cascaded term
// onto the direct term. For fixed phases the best u_r is the matched filter of
// the combined channel. Both steps are exact maximizers, so the received power
// never decreases.

#include <complex>
#include <vector>

#include "../channel.hpp"
#include "../metrics.hpp"
#include "types.hpp"

namespace irsrelay {

/// Cascaded per-element gains x_i = (u^H H diag(h))_i seen through beamformer u.
inline CVector cascade_through(const Beamformer& u, const CMatrix& H, const CVector& h)
{
    return (H.adjoint() * u.weights()).conjugate().cwiseProduct(h);
}

/// Phase alignment: theta_i = arg(u_r^H h_sr) - arg(x_i). Elements with x_i == 0 get 0 and are flagged.
inline PhaseShiftVector theta_update_ais(const ChannelSet& ch, const Beamformer& u_r)
{
    const CVector x = cascade_through(u_r, ch.H_ir, ch.h_si);
    const double reference = std::arg(u_r.apply(ch.h_sr));
    RVector theta(x.size());
    std::vector<std::size_t> degenerate;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (std::abs(x(i)) == 0.0) {
            theta(i) = 0.0;
            degenerate.push_back(static_cast<std::size_t>(i));
        } else {
            theta(i) = reference - std::arg(x(i));
        }
    }
    return PhaseShiftVector(std::move(theta), std::move(degenerate));
}

/// The same phase update through the Lagrangian stationarity condition: with
/// A = H_si^H H_ir^H u u^H H_ir H_si and b = H_si^H H_ir^H u u^H h_sr, the
/// maximizing coefficients point along A^+ b. A is rank one, so this reduces
/// to theta_update_ais; it is kept as an independent numerical route.
inline PhaseShiftVector theta_update_ais_pinv(const ChannelSet& ch, const Beamformer& u_r)
{
    const CVector v = cascade_through(u_r, ch.H_ir, ch.h_si).conjugate(); // H_si^H H_ir^H u
    const CMatrix a = v * v.adjoint();
    const CVector b = v * u_r.apply(ch.h_sr);
    const CVector direction = pseudo_inverse(a) * b;
    RVector theta(direction.size());
    std::vector<std::size_t> degenerate;
    for (Eigen::Index i = 0; i < direction.size(); ++i) {
        if (std::abs(v(i)) == 0.0) {
            theta(i) = 0.0;
            degenerate.push_back(static_cast<std::size_t>(i));
        } else {
            theta(i) = std::arg(direction(i));
        }
    }
    return PhaseShiftVector(std::move(theta), std::move(degenerate));
}

/// Combined first-slot channel h_sr + H_ir Theta_1 h_si.
inline CVector combined_first_slot(const ChannelSet& ch, const PhaseShiftVector& theta1)
{
    return ch.h_sr + ch.H_ir * theta1.coefficients().cwiseProduct(ch.h_si);
}

/// Matched filter to the combined channel; throws DegenerateChannelError when it vanishes.
inline Beamformer ur_update_ais(const ChannelSet& ch, const PhaseShiftVector& theta1)
{
    return Beamformer(combined_first_slot(ch, theta1));
}

/// Alternating optimization of (theta_1, u_r) starting from the direct-link matched filter.
inline FirstSlotSolution ais_max_rp(const ChannelSet& ch, double p_s, double noise_variance,
                                    const IterationControl& control = {})
{
    control.validate();
    detail::require_config(ch.consistent(), "ais_max_rp: inconsistent channel dimensions");

    FirstSlotSolution sol;
    sol.method = FirstSlotMethod::ais;
    Beamformer u_r(ch.h_sr);
    do {
        sol.theta1 = theta_update_ais(ch, u_r);
        u_r = ur_update_ais(ch, sol.theta1);
        sol.receive_power_watt = receive_power_ais(ch, sol.theta1, u_r, p_s);
        sol.trace.push_back(rate_from_power(sol.receive_power_watt, noise_variance));
    } while (!control.converged(sol.trace));

    sol.combiner = u_r;
    sol.rate_r = sol.trace.back();
    return sol;
}

/// Theta_1 = I with the matched-filter receiver.
inline FirstSlotSolution ais_fixed_phase(const ChannelSet& ch, double p_s, double noise_variance)
{
    detail::require_config(ch.consistent(), "ais_fixed_phase: inconsistent channel dimensions");
    FirstSlotSolution sol;
    sol.method = FirstSlotMethod::ais;
    sol.theta1 = PhaseShiftVector::identity(ch.elements());
    const Beamformer u_r = ur_update_ais(ch, sol.theta1);
    sol.receive_power_watt = receive_power_ais(ch, sol.theta1, u_r, p_s);
    sol.rate_r = rate_from_power(sol.receive_power_watt, noise_variance);
    sol.trace = {sol.rate_r};
    sol.combiner = u_r;
    return sol;
}

} // namespace irsrelay

#endif
