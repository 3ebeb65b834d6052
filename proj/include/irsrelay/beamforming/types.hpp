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

#ifndef IRSRELAY_BEAMFORMING_TYPES_HPP
#define IRSRELAY_BEAMFORMING_TYPES_HPP

#include <cstddef>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "../error.hpp"
#include "../linalg.hpp"

namespace irsrelay {

/// IRS reflection phases, stored in [0, 2*pi). Coefficients are e^{j*theta_i}.
class PhaseShiftVector {
public:
    PhaseShiftVector() = default;

    explicit PhaseShiftVector(RVector angles, std::vector<std::size_t> degenerate = {})
        : angles_(std::move(angles)), degenerate_(std::move(degenerate))
    {
        for (Eigen::Index i = 0; i < angles_.size(); ++i)
            angles_(i) = wrap_phase(angles_(i));
    }

    /// Theta = I.
    static PhaseShiftVector identity(Eigen::Index n) { return PhaseShiftVector(RVector::Zero(n)); }

    Eigen::Index size() const { return angles_.size(); }
    double operator[](Eigen::Index i) const { return angles_(i); }
    const RVector& angles() const { return angles_; }
    CVector coefficients() const { return unit_phasors(angles_); }

    // Elements whose cascaded gain was exactly zero; their phase was set to 0.
    const std::vector<std::size_t>& degenerate() const { return degenerate_; }

private:
    RVector angles_;
    std::vector<std::size_t> degenerate_;
};

/// Unit-norm complex weight vector (receive or transmit).
class Beamformer {
public:
    static constexpr double min_norm = 1e-30;

    Beamformer() = default;

    /// Normalizes `direction`; throws DegenerateChannelError when its norm is below min_norm.
    explicit Beamformer(const CVector& direction)
    {
        const double n = direction.norm();
        if (!(n >= min_norm))
            throw DegenerateChannelError("beamformer direction has (near-)zero norm");
        weights_ = direction / n;
    }

    const CVector& weights() const { return weights_; }
    Eigen::Index size() const { return weights_.size(); }

    /// u^H x
    cplx apply(const CVector& x) const { return weights_.dot(x); }

private:
    CVector weights_;
};

/// Assignment of IRS elements to RS antennas: element i serves antenna antenna_of[i].
struct Partition {
    std::vector<std::size_t> antenna_of;
    std::size_t antennas = 0;

    std::size_t elements() const { return antenna_of.size(); }
    std::size_t subset_size() const { return antennas == 0 ? 0 : antenna_of.size() / antennas; }

    /// Element indices serving antenna m, ascending.
    std::vector<std::size_t> subset(std::size_t m) const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < antenna_of.size(); ++i)
            if (antenna_of[i] == m)
                out.push_back(i);
        return out;
    }

    bool valid() const
    {
        if (antennas == 0 || antenna_of.empty() || antenna_of.size() % antennas != 0)
            return false;
        std::vector<std::size_t> counts(antennas, 0);
        for (auto m : antenna_of) {
            if (m >= antennas)
                return false;
            ++counts[m];
        }
        for (auto c : counts)
            if (c != subset_size())
                return false;
        return true;
    }
};

enum class FirstSlotMethod { ais, nsp, irses };

inline constexpr std::string_view to_string(FirstSlotMethod m)
{
    switch (m) {
    case FirstSlotMethod::ais: return "ais";
    case FirstSlotMethod::nsp: return "nsp";
    case FirstSlotMethod::irses: return "irses";
    }
    return "?";
}

/// u_rs separates the direct signal; u_ri the IRS-reflected one.
struct NspBeamformers {
    Beamformer u_rs;
    Beamformer u_ri;
};

/// Per-antenna combining weights, each of unit magnitude.
struct MrcWeights {
    CVector weights;
};

using ReceiveCombiner = std::variant<Beamformer, NspBeamformers, MrcWeights>;

struct FirstSlotSolution {
    FirstSlotMethod method = FirstSlotMethod::ais;
    PhaseShiftVector theta1;
    ReceiveCombiner combiner;
    double receive_power_watt = 0.0; // effective P_R: rate_r = log2(1 + P_R / sigma_r^2)
    double rate_r = 0.0;
    std::vector<double> trace;       // objective after each iteration, in bits/s/Hz

    std::size_t iterations() const { return trace.size(); }
};

struct SecondSlotSolution {
    PhaseShiftVector theta2;
    Beamformer u_t;
    double receive_power_watt = 0.0;
    double rate_d = 0.0;
    std::vector<double> trace;

    std::size_t iterations() const { return trace.size(); }
};

/// Stopping rule shared by every alternating optimizer.
struct IterationControl {
    double epsilon = 1e-4; // bits/s/Hz
    int max_iter = 50;

    void validate() const
    {
        detail::require_config(epsilon > 0.0, "epsilon must be > 0");
        detail::require_config(max_iter >= 1, "max_iter must be >= 1");
    }

    bool converged(const std::vector<double>& trace) const
    {
        const auto n = trace.size();
        if (n >= static_cast<std::size_t>(max_iter))
            return true;
        return n >= 2 && std::abs(trace[n - 1] - trace[n - 2]) <= epsilon;
    }
};

} // namespace irsrelay

#endif
