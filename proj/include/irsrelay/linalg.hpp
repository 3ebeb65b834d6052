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

#ifndef IRSRELAY_LINALG_HPP
#define IRSRELAY_LINALG_HPP

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <complex>
#include <numbers>

namespace irsrelay {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Relative singular-value cutoff used for every Moore-Penrose inverse in the library.
inline constexpr double pinv_relative_cutoff = 1e-12;

/// Wraps an angle into [0, 2*pi).
inline double wrap_phase(double angle)
{
    double a = std::fmod(angle, two_pi);
    if (a < 0.0)
        a += two_pi;
    if (a >= two_pi) // fmod + add can round up to exactly 2*pi
        a = 0.0;
    return a;
}

/// Smallest absolute difference between two angles on the circle, in [0, pi].
inline double circular_distance(double a, double b)
{
    const double d = wrap_phase(a - b);
    return d > std::numbers::pi ? two_pi - d : d;
}

/// Moore-Penrose pseudo-inverse by SVD; singular values below
/// `relative_cutoff * sigma_max` are treated as zero.
inline CMatrix pseudo_inverse(const CMatrix& a, double relative_cutoff = pinv_relative_cutoff)
{
    if (a.size() == 0)
        return CMatrix::Zero(a.cols(), a.rows());
    Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RVector& s = svd.singularValues();
    const double cutoff = relative_cutoff * (s.size() > 0 ? s(0) : 0.0);
    RVector s_inv = RVector::Zero(s.size());
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > cutoff && s(i) > 0.0)
            s_inv(i) = 1.0 / s(i);
    return svd.matrixV() * s_inv.asDiagonal() * svd.matrixU().adjoint();
}

/// e^{j*angle_i} for each entry.
inline CVector unit_phasors(const RVector& angles)
{
    CVector out(angles.size());
    for (Eigen::Index i = 0; i < angles.size(); ++i)
        out(i) = std::polar(1.0, angles(i));
    return out;
}

} // namespace irsrelay

#endif
