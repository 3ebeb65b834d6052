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

#ifndef IRSRELAY_BEAMFORMING_NSP_HPP
#define IRSRELAY_BEAMFORMING_NSP_HPP

// Null-space projection receiver: two beamformers at the RS, one blind to the
// direct S->RS signal (u_ri) and one blind to the IRS-reflected signal (u_rs),
// whose outputs are combined by MRC.

#include <cmath>
#include <string_view>

#include "../channel.hpp"
#include "../metrics.hpp"
#include "ais.hpp"
#include "types.hpp"

namespace irsrelay {

/// Orthogonal projector onto the complement of span(A): I - A (A^H A)^+ A^H.
inline CMatrix nsp_projector(const CMatrix& a)
{
    const auto m = a.rows();
    return CMatrix::Identity(m, m) - a * pseudo_inverse(a.adjoint() * a) * a.adjoint();
}

inline CMatrix nsp_projector(const CVector& a)
{
    return nsp_projector(CMatrix(a));
}

// Which interference u_rs is made blind to.
//   literal:   every IRS->RS column (span of H_ir); needs M > N, otherwise the projector is zero.
//   effective: only the realized cascade direction H_ir Theta_1 h_si.
enum class NspMode { literal, effective };

inline constexpr std::string_view to_string(NspMode m)
{
    return m == NspMode::literal ? "literal" : "effective";
}

/// Output SNR of the two separated branches with amplitudes b_direct, b_irs.
inline double nsp_combined_snr(cplx b_direct, cplx b_irs, double p_s, double noise_variance, MrcRateRule rule)
{
    if (rule == MrcRateRule::branch_sum)
        return (std::norm(b_direct) + std::norm(b_irs)) * p_s / noise_variance;
    const double num = std::pow(std::abs(b_direct), 4) + std::pow(std::abs(b_irs), 4);
    const double den = std::norm(b_direct + b_irs) * noise_variance;
    return num * p_s / den;
}

namespace detail {

inline Beamformer projected_beamformer(const CMatrix& projector, const CVector& target, double reference_norm,
                                       const char* what)
{
    // The projector is applied twice, as in the closed form; P is idempotent so this is P * target.
    const CVector w = projector * (projector * target);
    if (!(w.norm() > 1e-10 * reference_norm))
        throw ProjectorDegenerateError(std::string("nsp: ") + what + " lies in the blocked subspace");
    return Beamformer(w);
}

inline void nsp_finish(const ChannelSet& ch, FirstSlotSolution& sol, const CVector& cascade, const Beamformer& u_ri,
                       double p_s, double noise_variance, NspMode mode, MrcRateRule rule)
{
    const CMatrix p_reflected = mode == NspMode::literal ? nsp_projector(ch.H_ir) : nsp_projector(cascade);
    const Beamformer u_rs = projected_beamformer(p_reflected, ch.h_sr, ch.h_sr.norm(), "direct channel");

    const double snr = nsp_combined_snr(u_rs.apply(ch.h_sr), u_ri.apply(cascade), p_s, noise_variance, rule);
    sol.receive_power_watt = snr * noise_variance;
    sol.rate_r = std::log2(1.0 + snr);
    sol.combiner = NspBeamformers{u_rs, u_ri};
}

inline void nsp_check(const ChannelSet& ch, NspMode mode)
{
    require_config(ch.consistent(), "nsp_max_rp_mrc: inconsistent channel dimensions");
    if (ch.antennas() < 2)
        throw UnsupportedConfiguration("nsp_max_rp_mrc: null-space separation needs M >= 2");
    if (mode == NspMode::literal && ch.elements() >= ch.antennas())
        throw ProjectorDegenerateError("nsp_max_rp_mrc: literal mode needs M > N (span of H_ir is the whole receive space)");
}

} // namespace detail

inline FirstSlotSolution nsp_max_rp_mrc(const ChannelSet& ch, double p_s, double noise_variance,
                                        const IterationControl& control = {}, NspMode mode = NspMode::effective,
                                        MrcRateRule rule = MrcRateRule::branch_sum)
{
    control.validate();
    detail::nsp_check(ch, mode);

    const CMatrix p_direct = nsp_projector(ch.h_sr);
    const double scale = ch.H_ir.norm() * ch.h_si.norm();

    FirstSlotSolution sol;
    sol.method = FirstSlotMethod::nsp;
    sol.theta1 = PhaseShiftVector::identity(ch.elements());
    CVector cascade = ch.H_ir * ch.h_si;
    Beamformer u_ri = detail::projected_beamformer(p_direct, cascade, scale, "cascade channel");
    do {
        const CVector x = cascade_through(u_ri, ch.H_ir, ch.h_si);
        RVector theta(x.size());
        std::vector<std::size_t> degenerate;
        for (Eigen::Index i = 0; i < x.size(); ++i) {
            theta(i) = -std::arg(x(i));
            if (std::abs(x(i)) == 0.0)
                degenerate.push_back(static_cast<std::size_t>(i));
        }
        sol.theta1 = PhaseShiftVector(std::move(theta), std::move(degenerate));
        cascade = ch.H_ir * sol.theta1.coefficients().cwiseProduct(ch.h_si);
        u_ri = detail::projected_beamformer(p_direct, cascade, scale, "cascade channel");
        sol.trace.push_back(rate_from_power(p_s * std::norm(u_ri.apply(cascade)), noise_variance));
    } while (!control.converged(sol.trace));

    detail::nsp_finish(ch, sol, cascade, u_ri, p_s, noise_variance, mode, rule);
    return sol;
}

/// NSP + MRC receiver with Theta_1 = I; only the two beamformers are chosen.
inline FirstSlotSolution nsp_fixed_phase(const ChannelSet& ch, double p_s, double noise_variance,
                                         NspMode mode = NspMode::effective, MrcRateRule rule = MrcRateRule::branch_sum)
{
    detail::nsp_check(ch, mode);
    FirstSlotSolution sol;
    sol.method = FirstSlotMethod::nsp;
    sol.theta1 = PhaseShiftVector::identity(ch.elements());
    const CVector cascade = ch.H_ir * ch.h_si;
    const Beamformer u_ri = detail::projected_beamformer(nsp_projector(ch.h_sr), cascade,
                                                         ch.H_ir.norm() * ch.h_si.norm(), "cascade channel");
    detail::nsp_finish(ch, sol, cascade, u_ri, p_s, noise_variance, mode, rule);
    sol.trace = {sol.rate_r};
    return sol;
}

} // namespace irsrelay

#endif
