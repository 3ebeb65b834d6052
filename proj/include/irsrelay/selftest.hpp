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

#ifndef IRSRELAY_SELFTEST_HPP
#define IRSRELAY_SELFTEST_HPP

// Invariant checks that should hold on every channel realization, run on a
// handful of random instances. Used by the `selftest` subcommand.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "beamforming.hpp"
#include "channel.hpp"
#include "harness.hpp"
#include "random.hpp"
#include "table.hpp"

namespace irsrelay {

struct CheckResult {
    std::string name;
    bool passed = false;
    double worst = 0.0;     // largest observed violation (0 if none)
    double tolerance = 0.0;
};

struct SelftestOptions {
    std::uint64_t seed = 1;
    int realizations = 20;
    unsigned parallel_workers = 8;
};

namespace detail {

struct Shape {
    int m;
    int n;
};

inline constexpr Shape selftest_shapes[] = {{2, 2}, {4, 8}, {8, 16}, {6, 12}, {16, 32}};

class Worst {
public:
    void see(double violation) { worst_ = std::max(worst_, std::isnan(violation) ? INFINITY : violation); }
    double value() const { return worst_; }

private:
    double worst_ = 0.0;
};

inline double modulus_violation(const PhaseShiftVector& t)
{
    return (t.coefficients().cwiseAbs().array() - 1.0).abs().maxCoeff();
}

inline double norm_violation(const Beamformer& u)
{
    return std::abs(u.weights().norm() - 1.0);
}

inline double trace_violation(const std::vector<double>& trace)
{
    double worst = 0.0;
    for (std::size_t i = 1; i < trace.size(); ++i)
        worst = std::max(worst, (trace[i - 1] - trace[i]) / std::max(1.0, std::abs(trace[i - 1])));
    return worst;
}

} // namespace detail

inline std::vector<CheckResult> run_selftest(const SelftestOptions& opt = {})
{
    const Geometry geometry;
    const LinkBudget budget;
    const double p = budget.p_s_watt;
    const double noise = budget.noise_variance_watt;

    detail::Worst modulus, norm, monotone, orthogonal, amplitude, two_form, projector;
    std::uint64_t counter = 0;
    for (const auto shape : detail::selftest_shapes) {
        for (int r = 0; r < opt.realizations; ++r) {
            const std::uint64_t seed = random::derive_seed(opt.seed, counter++);
            const ChannelSet ch = sample_channels(geometry, budget, shape.m, shape.n, seed);

            const auto ais = ais_max_rp(ch, p, noise);
            const auto second = second_slot_optimize(ch, p, noise);
            const auto irses = irses_max_rp_mrc(ch, p, noise, irses_partition(static_cast<std::size_t>(shape.n),
                                                                             static_cast<std::size_t>(shape.m), seed));
            modulus.see(detail::modulus_violation(ais.theta1));
            modulus.see(detail::modulus_violation(second.theta2));
            modulus.see(detail::modulus_violation(irses.theta1));
            norm.see(detail::norm_violation(std::get<Beamformer>(ais.combiner)));
            norm.see(detail::norm_violation(second.u_t));
            for (Eigen::Index m = 0; m < ch.antennas(); ++m)
                norm.see(std::abs(std::abs(std::get<MrcWeights>(irses.combiner).weights(m)) - 1.0));
            monotone.see(detail::trace_violation(ais.trace));
            monotone.see(detail::trace_violation(second.trace));

            if (shape.m >= 2) {
                const auto nsp = nsp_max_rp_mrc(ch, p, noise);
                const auto& bf = std::get<NspBeamformers>(nsp.combiner);
                const CVector cascade = ch.H_ir * nsp.theta1.coefficients().cwiseProduct(ch.h_si);
                modulus.see(detail::modulus_violation(nsp.theta1));
                norm.see(detail::norm_violation(bf.u_rs));
                norm.see(detail::norm_violation(bf.u_ri));
                monotone.see(detail::trace_violation(nsp.trace));
                orthogonal.see(std::abs(bf.u_rs.apply(cascade)) / cascade.norm());
                orthogonal.see(std::abs(bf.u_ri.apply(ch.h_sr)) / ch.h_sr.norm());
            }

            // Idealized IRSES: every subset adds in phase with its antenna's direct term.
            const Partition part = irses_partition(static_cast<std::size_t>(shape.n), static_cast<std::size_t>(shape.m), seed);
            const CVector amp = irses_antenna_amplitudes(ch, part, irses_phases(ch, part), InterferenceMode::idealized);
            for (Eigen::Index m = 0; m < ch.antennas(); ++m) {
                double expected = std::abs(ch.h_sr(m));
                for (auto i : part.subset(static_cast<std::size_t>(m)))
                    expected += std::abs(ch.H_ir(m, static_cast<Eigen::Index>(i))) * std::abs(ch.h_si(static_cast<Eigen::Index>(i)));
                amplitude.see(std::abs(std::abs(amp(m)) - expected) / expected);
            }

            // Both forms of the phase update, from a generic beamformer.
            const Beamformer u(ch.H_ir.col(0) + ch.h_sr);
            const auto a = theta_update_ais(ch, u);
            const auto b = theta_update_ais_pinv(ch, u);
            for (Eigen::Index i = 0; i < a.angles().size(); ++i)
                two_form.see(circular_distance(a[i], b[i]));

            const CMatrix blocked = ch.H_ir.leftCols(std::min<Eigen::Index>(shape.m - 1, shape.n));
            const CMatrix proj = nsp_projector(blocked);
            projector.see((proj * proj - proj).norm());
            projector.see((proj.adjoint() - proj).norm());
            if (blocked.cols() > 0)
                projector.see((proj * blocked).norm() / blocked.norm());
        }
    }

    std::vector<CheckResult> out{
        {"unit-modulus phase shifts", modulus.value() <= 1e-15, modulus.value(), 1e-15},
        {"unit-norm beamformers", norm.value() <= 1e-12, norm.value(), 1e-12},
        {"monotone objective traces", monotone.value() <= 1e-12, monotone.value(), 1e-12},
        {"nsp orthogonality", orthogonal.value() <= 1e-10, orthogonal.value(), 1e-10},
        {"irses amplitude sum", amplitude.value() <= 1e-12, amplitude.value(), 1e-12},
        {"phase update two-form agreement", two_form.value() <= 1e-9, two_form.value(), 1e-9},
        {"projector identities", projector.value() <= 1e-10, projector.value(), 1e-10},
    };

    // Sweep tables must not depend on the number of worker threads.
    SweepSpec spec;
    spec.base.antennas = 4;
    spec.base.elements = 8;
    spec.base.trials = 24;
    spec.base.base_seed = opt.seed;
    spec.axis = SweepAxis::snr_db;
    spec.values = {0.0, 10.0, 20.0, 30.0};
    spec.methods.clear();
    for (const auto& [m, name] : method_names)
        spec.methods.push_back(m);
    bool identical = true;
    for (TableFormat f : {TableFormat::csv, TableFormat::jsonl}) {
        const std::string serial = emit_table_string(sweep_to_table(sweep(spec, 1)), f);
        const std::string parallel = emit_table_string(sweep_to_table(sweep(spec, opt.parallel_workers)), f);
        identical = identical && serial == parallel;
    }
    out.push_back({"parallel determinism", identical, identical ? 0.0 : 1.0, 0.0});
    return out;
}

} // namespace irsrelay

#endif
