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

#ifndef RISPDL_CHANNEL_HPP
#define RISPDL_CHANNEL_HPP

#include <random>
#include <utility>

#include <Eigen/Dense>

#include "rispdl/pdl.hpp"

namespace rispdl {

// Rectangular arrays in the y-z plane with equal spacing in both dimensions,
// indexed column major with the z index running fastest. Angles are the
// elevation/azimuth of arrival at the BS (theta_a, omega_a) and of departure
// at the RIS (theta_d, omega_d), in radians. Spacings are in wavelengths.
struct ArrayGeometry
{
    int m_y = 4;
    int m_z = 4;
    int n_y = 4;
    int n_z = 4;
    double d_b = 0.5;
    double d_r = 0.5;
    double theta_a = 0.0;
    double omega_a = 0.0;
    double theta_d = 0.0;
    double omega_d = 0.0;

    int bs_elements() const { return m_y * m_z; }
    int ris_elements() const { return n_y * n_z; }
    void validate() const;
};

// Nearest-neighbour correlation levels: exponential decay model at the BS,
// sinc model at the RIS.
struct CorrelationSpec
{
    double rho_d = 0.0;
    double rho_ru = 0.0;
    void validate() const;
};

// Linear power gains of the direct, RIS-user and RIS-BS links.
struct LinkGains
{
    double beta_d = 1.0;
    double beta_ru = 1.0;
    double beta_br = 1.0;
    void validate() const;
};

// One fading realization. The RIS-BS channel is deterministic rank-1 and
// never materialised; it is carried by the steering vectors and beta_br.
struct ChannelSample
{
    Eigen::VectorXcd h_d;
    Eigen::VectorXcd h_ru;
};

struct SteeringVectors
{
    Eigen::VectorXcd bs;
    Eigen::VectorXcd ris;
};

// Full experiment description. tau_bar is the transmit power to noise power
// ratio, linear.
struct Scenario
{
    ArrayGeometry geometry;
    CorrelationSpec correlation;
    LinkGains gains;
    LossParams loss{0.5, 1.2, 0.2};
    double tau_bar = 1.0;

    void validate() const;
};

double db_to_linear(double db);
double linear_to_db(double x);

// sin(pi x) / (pi x), 1 at x = 0. With this convention half-wavelength
// spacing gives zero nearest-neighbour correlation.
double normalized_sinc(double x);

// (R)_ik = sinc(2 d_ik) with d_ik the Euclidean inter-element distance on
// the y-z grid, in wavelengths.
Eigen::MatrixXd ris_correlation_matrix(int n_y, int n_z, double d_r);

// (R)_ik = rho_d^(d_ik / d_b), Euclidean distance over the BS grid.
Eigen::MatrixXd bs_correlation_matrix(int m_y, int m_z, double rho_d, double d_b);

// Spacing assigned to fully correlated elements, where sinc has no root.
inline constexpr double kMinSpacing = 1e-4;

// Smallest d_r > 0 with sinc(2 d_r) = rho_ru, by bisection on (0, 0.5];
// 0.5 for rho_ru = 0 and kMinSpacing for rho_ru = 1.
double spacing_from_correlation(double rho_ru);

// Steering vectors as Kronecker products of the per-axis factors,
// a = a_y (x) a_z, each entry of unit modulus.
SteeringVectors steering_vectors(const ArrayGeometry &g);

// Symmetric square root of a symmetric positive semidefinite matrix via
// eigendecomposition. Slightly negative eigenvalues from rounding are
// clamped to zero; an eigenvalue below -1e-6 max(lambda_max, 1) raises
// std::domain_error.
Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd &r);

// RIS correlation matrix used consistently by the analytic engine and the
// simulator: exact identity at rho_ru = 0, the exact all-ones matrix at
// rho_ru = 1, the sinc model in between.
Eigen::MatrixXd ris_correlation_for(const Scenario &s);

// h = sqrt(beta) R^(1/2) u with u of i.i.d. unit-variance circular
// Gaussians; u_d is drawn before u_ru. Deterministic for a fixed engine
// state.
ChannelSample sample_channels(const Scenario &s, const Eigen::MatrixXd &sqrt_rd,
                              const Eigen::MatrixXd &sqrt_rru, std::mt19937_64 &rng);

struct DeploymentDistances
{
    double d_ru;
    double d_d;
};

// Right-triangle deployment: the UE sits on a line parallel to the BS-RIS
// axis at offset d_v, at horizontal distance d from the BS; the RIS is d_br
// from the BS along the axis.
DeploymentDistances deployment_distances(double d, double d_v, double d_br);

// beta_br = d_br^-2 for the LOS link; beta_ru and beta_d from the
// distance-dependent model C0 dist^-exponent.
LinkGains link_gains_from_geometry(double d, double d_v, double d_br, double c0_db,
                                   double alpha_ru, double alpha_d);

// Near-square factorization n = n_y * n_z used when only the element count
// is specified.
std::pair<int, int> ris_grid(int n);

} // namespace rispdl

#endif
