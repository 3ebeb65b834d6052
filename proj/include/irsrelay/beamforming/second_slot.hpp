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

#ifndef IRSRELAY_BEAMFORMING_SECOND_SLOT_HPP
#define IRSRELAY_BEAMFORMING_SECOND_SLOT_HPP

// RS -> {IRS, D} transmit side: the mirror image of the first-slot AIS with the
// RS transmitting through u_t to the single-antenna destination.

#include <complex>

#include "../channel.hpp"
#include "../metrics.hpp"
#include "types.hpp"

namespace irsrelay {

/// Row channel at D as an M-vector r, so that the received amplitude is r^T u_t.
inline CVector combined_second_slot(const ChannelSet& ch, const PhaseShiftVector& theta2)
{
    // r_m = conj(h_rd,m) + sum_i conj(H_ri(m,i)) theta_i conj(h_id,i)
    return ch.h_rd.conjugate() + ch.H_ri.conjugate() * theta2.coefficients().cwiseProduct(ch.h_id.conjugate());
}

/// theta_i = arg(h_rd^H u_t) - arg(conj(h_id,i) (H_ri^H u_t)_i)
inline PhaseShiftVector theta_update_second_slot(const ChannelSet& ch, const Beamformer& u_t)
{
    const CVector ri_u = ch.H_ri.adjoint() * u_t.weights();
    const double reference = std::arg(ch.h_rd.dot(u_t.weights()));
    RVector theta(ch.elements());
    std::vector<std::size_t> degenerate;
    for (Eigen::Index i = 0; i < ch.elements(); ++i) {
        const cplx g = std::conj(ch.h_id(i)) * ri_u(i);
        if (std::abs(g) == 0.0) {
            theta(i) = 0.0;
            degenerate.push_back(static_cast<std::size_t>(i));
        } else {
            theta(i) = reference - std::arg(g);
        }
    }
    return PhaseShiftVector(std::move(theta), std::move(degenerate));
}

/// u_t = conj(r) / ||r||, the transmit matched filter.
inline Beamformer ut_update_second_slot(const ChannelSet& ch, const PhaseShiftVector& theta2)
{
    return Beamformer(combined_second_slot(ch, theta2).conjugate());
}

inline SecondSlotSolution second_slot_optimize(const ChannelSet& ch, double p_r, double noise_variance,
                                               const IterationControl& control = {})
{
    control.validate();
    detail::require_config(ch.consistent(), "second_slot_optimize: inconsistent channel dimensions");

    SecondSlotSolution sol;
    sol.u_t = Beamformer(ch.h_rd);
    do {
        sol.theta2 = theta_update_second_slot(ch, sol.u_t);
        sol.u_t = ut_update_second_slot(ch, sol.theta2);
        sol.receive_power_watt = receive_power_second_slot(ch, sol.theta2, sol.u_t, p_r);
        sol.trace.push_back(rate_from_power(sol.receive_power_watt, noise_variance));
    } while (!control.converged(sol.trace));
    sol.rate_d = sol.trace.back();
    return sol;
}

/// Second slot with Theta_2 = I; only u_t is chosen.
inline SecondSlotSolution second_slot_fixed_phase(const ChannelSet& ch, double p_r, double noise_variance)
{
    SecondSlotSolution sol;
    sol.theta2 = PhaseShiftVector::identity(ch.elements());
    sol.u_t = ut_update_second_slot(ch, sol.theta2);
    sol.receive_power_watt = receive_power_second_slot(ch, sol.theta2, sol.u_t, p_r);
    sol.rate_d = rate_from_power(sol.receive_power_watt, noise_variance);
    sol.trace = {sol.rate_d};
    return sol;
}

} // namespace irsrelay

#endif
