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

#ifndef RISPDL_ANALYTIC_HPP
#define RISPDL_ANALYTIC_HPP

#include <Eigen/Dense>

#include "rispdl/channel.hpp"
#include "rispdl/pdl.hpp"

namespace rispdl {

// Which evaluation path produced the element-coupling sum F.
enum class FRoute
{
    uncorrelated,
    general,
    fully_correlated,
};

const char *to_string(FRoute route);

// Closed-form mean SNR split into its three additive pieces:
//   total = tau_bar ( beta_d M
//                   + sqrt(beta_br beta_d beta_ru) |R_d^(1/2) a_b| N mu1 pi/2
//                   + beta_ru beta_br M (N mu2 + F) ).
struct MeanSnrBreakdown
{
    double term_direct = 0.0;
    double term_cross = 0.0;
    double term_ris = 0.0;
    double coupling_f = 0.0;
    double total = 0.0;
    FRoute route = FRoute::general;
};

struct AnalyticOptions
{
    // Verification negative-control hook; scales mu2 inside mean_snr.
    double mu2_scale = 1.0;
};

// E{|h_r| |h_s|} for unit-variance correlated circular Gaussians,
// (pi/4) (1 - q)^2 2F1(3/2, 3/2; 1; q) at q = |rho|^2. Rises from pi/4 at
// q = 0 to 1 at q = 1.
double pair_magnitude_moment(double rho_sq);

// F = sum over ordered pairs r != s of
//   pair_magnitude_moment(|rho_rs|^2) E{L(phi_r) L(phi_s)}
// with the pair loss expectation taken at the steering phases of the two
// elements. Requires every off-diagonal |rho_rs| <= 1 - kCorrelationCutoff.
double coupling_sum(const Eigen::MatrixXd &r_ru, const Eigen::VectorXcd &a_r,
                    const LossParams &p);

// Closed form of F for uncorrelated entries: mu1^2 N (N-1) pi / 4.
double coupling_sum_uncorrelated(int n, double mu1_value);

// Closed form of F for fully correlated entries,
//   sum over r != s of (1 / 2pi) loss_product_integral(angle_r, angle_s).
double coupling_sum_fully_correlated(const Eigen::VectorXcd &a_r, const LossParams &p);

// Mean SNR of the matched-filter uplink under the lossless-optimal RIS
// phases. The F path is routed on the scenario correlation level: exact
// uncorrelated and fully-correlated closed forms at the extremes, the
// general pair sum in between. theta never enters any formula here, so the
// result is bit-identical under changes of the loss phase offset.
MeanSnrBreakdown mean_snr(const Scenario &s, const AnalyticOptions &opt = {});

// Rule of thumb: the lossless mean SNR with the RIS-borne terms scaled as if
// every reflection were attenuated by the constant mu1 (cross term by mu1,
// quadratic term by mu1^2).
double mu1_scaling_approximation(const Scenario &s);

// Fractional mean-SNR reduction caused by the loss,
// 1 - total / total at l_min = 1.
double pdl_penalty(const Scenario &s);

} // namespace rispdl

#endif
