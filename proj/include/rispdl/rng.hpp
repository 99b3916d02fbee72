// SPDX-License-Identifier: Apache-2.0
//
// rispdl: mean-SNR analysis and simulation of RIS-aided links with
// phase dependent reflection loss
// Copyright (C) 2026 rispdl authors
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

#ifndef RISPDL_RNG_HPP
#define RISPDL_RNG_HPP

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace rispdl {

// splitmix64 finalizer; mixes a base seed with a stream counter so that each
// trial owns a decorrelated engine regardless of how trials are partitioned
// across threads.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t x = seed + 0x9E3779B97F4A7C15ull * (stream + 1ull);
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline std::mt19937_64 make_trial_engine(std::uint64_t seed, std::uint64_t trial)
{
    return std::mt19937_64(mix_seed(seed, trial));
}

// n i.i.d. circularly symmetric complex Gaussians with unit variance per
// entry (real and imaginary parts each of variance 1/2).
inline Eigen::VectorXcd circular_gaussian(std::mt19937_64 &rng, Eigen::Index n)
{
    std::normal_distribution<double> normal(0.0, std::numbers::sqrt2 / 2.0);
    Eigen::VectorXcd v(n);
    for (Eigen::Index i = 0; i < n; ++i)
    {
        const double re = normal(rng);
        const double im = normal(rng);
        v[i] = std::complex<double>(re, im);
    }
    return v;
}

} // namespace rispdl

#endif
