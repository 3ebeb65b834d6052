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

#ifndef IRSRELAY_RANDOM_HPP
#define IRSRELAY_RANDOM_HPP

// Counter-based random numbers. Every random draw in the library is a pure
// function of (key, counter), so results never depend on evaluation order or
// on how trials are spread across threads.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "linalg.hpp"

namespace irsrelay::random {

using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

/// Philox4x32 with 10 rounds (Salmon et al., SC'11), bit-compatible with Random123.
inline Counter philox4x32_10(Counter ctr, Key key)
{
    constexpr std::uint32_t m0 = 0xD2511F53u;
    constexpr std::uint32_t m1 = 0xCD9E8D57u;
    constexpr std::uint32_t w0 = 0x9E3779B9u;
    constexpr std::uint32_t w1 = 0xBB67AE85u;

    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += w0;
            key[1] += w1;
        }
        const std::uint64_t p0 = std::uint64_t{m0} * ctr[0];
        const std::uint64_t p1 = std::uint64_t{m1} * ctr[2];
        const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
        const auto lo0 = static_cast<std::uint32_t>(p0);
        const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
        const auto lo1 = static_cast<std::uint32_t>(p1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

/// SplitMix64 finalizer; a bijective 64-bit mixer.
inline constexpr std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Child seed for a numbered sub-stream (trial index, partition stream, ...).
inline constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t stream)
{
    return splitmix64(parent ^ splitmix64(stream + 0x632BE59BD9B4E019ull));
}

inline constexpr Key key_from_seed(std::uint64_t seed)
{
    return {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
}

/// Uniform in (0, 1] with 53 random bits.
inline double uniform_open_closed(std::uint32_t hi, std::uint32_t lo)
{
    const std::uint64_t bits = ((std::uint64_t{hi} << 32) | lo) >> 11;
    return static_cast<double>(bits + 1) * 0x1.0p-53;
}

/// Uniform in [0, 1) with 53 random bits.
inline double uniform_closed_open(std::uint32_t hi, std::uint32_t lo)
{
    const std::uint64_t bits = ((std::uint64_t{hi} << 32) | lo) >> 11;
    return static_cast<double>(bits) * 0x1.0p-53;
}

/// Circularly-symmetric CN(0, 1) sample addressed by (seed, counter).
/// Magnitude^2 is Exp(1) by inversion and the phase is uniform on [0, 2*pi).
inline cplx complex_gaussian(std::uint64_t seed, const Counter& counter)
{
    const Counter r = philox4x32_10(counter, key_from_seed(seed));
    const double u = uniform_open_closed(r[0], r[1]);
    const double v = uniform_closed_open(r[2], r[3]);
    return std::polar(std::sqrt(-std::log(u)), two_pi * v);
}

/// Sequential 32-bit stream over a Philox key, usable as a UniformRandomBitGenerator.
class PhiloxStream {
public:
    using result_type = std::uint32_t;

    PhiloxStream(std::uint64_t seed, std::uint32_t stream_id)
        : key_(key_from_seed(seed)), stream_id_(stream_id)
    {
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()()
    {
        if (next_ == 4) {
            const Counter ctr{static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
                              stream_id_, 0x5EEDu};
            buffer_ = philox4x32_10(ctr, key_);
            ++block_;
            next_ = 0;
        }
        return buffer_[next_++];
    }

    /// Unbiased integer in [0, bound) by rejection; bound >= 1.
    std::uint32_t below(std::uint32_t bound)
    {
        const std::uint32_t limit = max() - (max() % bound + 1) % bound;
        std::uint32_t x = (*this)();
        while (x > limit)
            x = (*this)();
        return x % bound;
    }

private:
    Key key_;
    std::uint32_t stream_id_;
    std::uint64_t block_ = 0;
    Counter buffer_{};
    int next_ = 4;
};

/// Uniformly random permutation of 0..n-1 (Fisher-Yates), fully specified so the
/// result does not depend on the standard library implementation.
inline std::vector<std::size_t> random_permutation(std::size_t n, std::uint64_t seed, std::uint32_t stream_id = 0)
{
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    PhiloxStream gen(seed, stream_id);
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = gen.below(static_cast<std::uint32_t>(i));
        std::swap(perm[i - 1], perm[j]);
    }
    return perm;
}

} // namespace irsrelay::random

#endif
