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

#ifndef RISPDL_PDL_HPP
#define RISPDL_PDL_HPP

#include <complex>
#include <utility>

#include <Eigen/Dense>

namespace rispdl {

// Phase dependent reflection loss
//   L(phi) = (1 - l_min) ((sin(phi + theta) + 1) / 2)^alpha + l_min
// with l_min the minimum reflection amplitude, alpha the steepness of the
// dip and theta its position. l_min = 1 or alpha = 0 gives a lossless
// element.
struct LossParams
{
    LossParams(double l_min, double alpha, double theta = 0.0);

    double l_min;
    double alpha;
    double theta; // stored reduced to [0, 2pi)
};

double loss(double phi, const LossParams &p);
Eigen::VectorXd loss_vector(const Eigen::VectorXd &phases, const LossParams &p);

// First and second moments of L under a phase uniform over a full period.
// Both are independent of theta and satisfy l_min <= mu1 <= 1 and
// mu1^2 <= mu2 <= mu1.
double mu1(const LossParams &p);
double mu2(const LossParams &p);

// The scaled beta factors (c1, c2) the moments are built from:
//   c1 = 4^alpha B((2a+1)/2, (2a+1)/2) / pi = B(1/2, alpha + 1/2) / pi,
//   c2 = the same with alpha doubled.
// Both decrease from 1 at alpha = 0 towards 0.
std::pair<double, double> c1_c2(double alpha);

// Joint density g(x) of the phase difference of two correlated circular
// Gaussian entries with complex correlation rho, |rho| < 1. The joint
// density of the two phases over [0, 2pi)^2 is g(t - s).
double phase_pair_density(double x, std::complex<double> rho);

// Correlation magnitudes this close to 1 are rejected on the quadrature
// path; the density develops a (1 + v)^-3/2 near-singularity there and the
// fully correlated closed form takes over.
inline constexpr double kCorrelationCutoff = 1e-3;

// E{L(phi_r) L(phi_s)} for the aligned phases of two elements whose channel
// entries have correlation rho and whose steering entries have the given
// phases. Tensor-product quadrature of the defining double integral,
// absolute tolerance 1e-7. Requires |rho| <= 1 - kCorrelationCutoff.
double loss_pair_expectation(double angle_r, double angle_s, std::complex<double> rho,
                             const LossParams &p);

// Full-period integral of L(x + a) L(x + b). Three of the four terms of the
// expanded product have closed beta-function forms; the quartic cross term
// uses the hypergeometric contour identity, replaced by direct quadrature
// where that identity is singular (sin(2 pi alpha) ~ 0 or cos((a-b)/2)
// at +-1). Symmetric in (a, b) and equal to 2 pi mu2 at a = b.
double loss_product_integral(double a, double b, const LossParams &p);

} // namespace rispdl

#endif
