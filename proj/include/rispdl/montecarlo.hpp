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

#ifndef RISPDL_MONTECARLO_HPP
#define RISPDL_MONTECARLO_HPP

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

#include "rispdl/channel.hpp"

namespace rispdl {

struct EstimateWithError
{
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

// Raised when the direct-channel projection onto the BS steering vector is
// numerically zero and the RIS phase alignment is undefined.
class DegenerateProjectionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Lossless-optimal RIS phases,
//   phi_r = arg(a_b^H h_d) + arg((a_r)_r) - arg(h_ru_r),
// reduced to [0, 2pi).
Eigen::VectorXd optimal_ris_phases(const Eigen::VectorXcd &h_d, const Eigen::VectorXcd &h_ru,
                                   const Eigen::VectorXcd &a_b, const Eigen::VectorXcd &a_r);

// Matched-filter SNR of one realization under the aligned phases. The rank-1
// RIS-BS channel is never formed: after alignment the reflected part
// collapses to sqrt(beta_br) psi a_b sum_r |h_ru_r| L(phi_r), so
//   snr = tau_bar (|h_d|^2 + 2 sqrt(beta_br) |a_b^H h_d| S + beta_br M S^2)
// with S the loss-weighted magnitude sum.
double instantaneous_snr(const ChannelSample &sample, const SteeringVectors &sv,
                         const LinkGains &gains, const LossParams &p, double tau_bar);

// Sample mean and standard error of the instantaneous SNR over seeded
// independent draws. Trial t derives its own engine from (seed, t), trials
// are grouped into fixed-size blocks accumulated independently and merged in
// block order, so the result is bit-identical for any number of threads.
EstimateWithError estimate_mean_snr(const Scenario &s, std::uint64_t trials,
                                    std::uint64_t seed);

// Reference implementation of the same reduction without the parallel loop.
EstimateWithError estimate_mean_snr_serial(const Scenario &s, std::uint64_t trials,
                                           std::uint64_t seed);

// Empirical E{L(phi_r) L(phi_s)} over draws of a correlated channel pair
// with correlation rho and steering phases (angle_r, angle_s), run through
// the same phase-alignment pipeline as the full simulator. Simulation oracle
// for loss_pair_expectation.
EstimateWithError estimate_pair_loss_moment(std::complex<double> rho, double angle_r,
                                            double angle_s, const LossParams &p,
                                            std::uint64_t draws, std::uint64_t seed);

} // namespace rispdl

#endif
