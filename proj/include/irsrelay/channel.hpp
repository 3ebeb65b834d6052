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

#ifndef IRSRELAY_CHANNEL_HPP
#define IRSRELAY_CHANNEL_HPP

#include <cmath>
#include <cstdint>
#include <string>

#include "error.hpp"
#include "linalg.hpp"
#include "random.hpp"

namespace irsrelay {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline double distance(Point a, Point b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

// Node positions in meters. The IRS is treated as a point for all of its links.
struct Geometry {
    Point source{0.0, 0.0};
    Point relay{50.0, 0.0};
    Point irs{50.0, 10.0};
    Point destination{100.0, 0.0};

    void validate() const
    {
        const auto positive = [](double d, const char* link) {
            detail::require_config(d > 0.0 && std::isfinite(d),
                                   std::string("geometry: ") + link + " distance must be strictly positive");
        };
        positive(distance(source, relay), "S-RS");
        positive(distance(irs, relay), "IRS-RS");
        positive(distance(source, irs), "S-IRS");
        positive(distance(relay, destination), "RS-D");
        positive(distance(irs, destination), "IRS-D");
    }
};

struct LinkBudget {
    double alpha = 2.4;           // path-loss exponent
    double gain_s_dbi = 5.0;
    double gain_rs_dbi = 5.0;
    double gain_d_dbi = 2.0;
    double gain_irs_dbi = 0.0;    // per reflecting element
    double p_s_watt = 10.0;
    double p_r_watt = 10.0;
    double noise_variance_watt = 0.02;

    void validate() const
    {
        detail::require_config(alpha > 0.0, "alpha must be > 0");
        detail::require_config(p_s_watt > 0.0, "p_s_watt must be > 0");
        detail::require_config(p_r_watt > 0.0, "p_r_watt must be > 0");
        detail::require_config(noise_variance_watt > 0.0, "noise_variance_watt must be > 0");
        for (double g : {gain_s_dbi, gain_rs_dbi, gain_d_dbi, gain_irs_dbi})
            detail::require_config(std::isfinite(g), "antenna gains must be finite");
    }
};

/// All six channel blocks of one network realization.
///
/// First slot:  h_sr (S->RS, M), H_ir (IRS->RS, MxN), h_si (S->IRS, N).
/// Second slot: h_rd (RS->D, M), h_id (IRS->D, N), H_ri (RS->IRS, MxN); the
/// received row channel at D is h_rd^H + h_id^H Theta_2 H_ri^H.
struct ChannelSet {
    CVector h_sr;
    CMatrix H_ir;
    CVector h_si;
    CVector h_rd;
    CVector h_id;
    CMatrix H_ri;

    Eigen::Index antennas() const { return h_sr.size(); }
    Eigen::Index elements() const { return h_si.size(); }

    bool consistent() const
    {
        const auto m = antennas();
        const auto n = elements();
        return m >= 1 && n >= 1 && H_ir.rows() == m && H_ir.cols() == n && h_rd.size() == m && h_id.size() == n
            && H_ri.rows() == m && H_ri.cols() == n;
    }

    bool finite() const
    {
        return h_sr.allFinite() && H_ir.allFinite() && h_si.allFinite() && h_rd.allFinite() && h_id.allFinite()
            && H_ri.allFinite();
    }

    /// Same realization with every block multiplied by `factor`.
    ChannelSet scaled(double factor) const
    {
        return {h_sr * factor, H_ir * factor, h_si * factor, h_rd * factor, h_id * factor, H_ri * factor};
    }
};

/// d^(-alpha/2)
inline double pathloss_amplitude(double d, double alpha)
{
    detail::require_domain(d > 0.0, "pathloss_amplitude: distance must be > 0");
    detail::require_domain(alpha > 0.0, "pathloss_amplitude: alpha must be > 0");
    return std::pow(d, -alpha / 2.0);
}

/// Amplitude multiplier of a link between antennas with the given gains.
inline double dbi_to_amplitude_gain(double g_tx_dbi, double g_rx_dbi)
{
    return std::sqrt(std::pow(10.0, g_tx_dbi / 10.0) * std::pow(10.0, g_rx_dbi / 10.0));
}

// Stream identifiers for each link. Entry (row, col) of link L under seed s is
// complex_gaussian(s, {row, col, L, 0}), so a realization with fewer antennas
// or elements is an exact sub-block of a larger one.
enum class Link : std::uint32_t { sr = 1, ir = 2, si = 3, rd = 4, id = 5, ri = 6 };

namespace detail {

inline CMatrix rayleigh_block(std::uint64_t seed, Link link, Eigen::Index rows, Eigen::Index cols, double scale)
{
    CMatrix out(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c)
            out(r, c) = scale
                * random::complex_gaussian(seed, {static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c),
                                                  static_cast<std::uint32_t>(link), 0u});
    return out;
}

} // namespace detail

/// Rayleigh-fading realization: i.i.d. CN(0,1) entries scaled by path loss and antenna gains.
inline ChannelSet sample_channels(const Geometry& geometry, const LinkBudget& budget, Eigen::Index antennas,
                                  Eigen::Index elements, std::uint64_t seed)
{
    detail::require_config(antennas >= 1, "sample_channels: M (RS antennas) must be >= 1");
    detail::require_config(elements >= 1, "sample_channels: N (IRS elements) must be >= 1");

    const auto& g = geometry;
    const auto& b = budget;
    const auto scale = [&](Point tx, Point rx, double gain_tx, double gain_rx) {
        return pathloss_amplitude(distance(tx, rx), b.alpha) * dbi_to_amplitude_gain(gain_tx, gain_rx);
    };

    ChannelSet ch;
    ch.h_sr = detail::rayleigh_block(seed, Link::sr, antennas, 1, scale(g.source, g.relay, b.gain_s_dbi, b.gain_rs_dbi));
    ch.H_ir = detail::rayleigh_block(seed, Link::ir, antennas, elements, scale(g.irs, g.relay, b.gain_irs_dbi, b.gain_rs_dbi));
    ch.h_si = detail::rayleigh_block(seed, Link::si, 1, elements, scale(g.source, g.irs, b.gain_s_dbi, b.gain_irs_dbi)).transpose();
    ch.h_rd = detail::rayleigh_block(seed, Link::rd, antennas, 1, scale(g.relay, g.destination, b.gain_rs_dbi, b.gain_d_dbi));
    ch.h_id = detail::rayleigh_block(seed, Link::id, 1, elements, scale(g.irs, g.destination, b.gain_irs_dbi, b.gain_d_dbi)).transpose();
    ch.H_ri = detail::rayleigh_block(seed, Link::ri, antennas, elements, scale(g.relay, g.irs, b.gain_rs_dbi, b.gain_irs_dbi));
    return ch;
}

} // namespace irsrelay

#endif
