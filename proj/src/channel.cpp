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

#include "rispdl/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "rispdl/rng.hpp"

namespace rispdl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Eigen::VectorXcd axis_factor(int count, double phase_step)
{
    Eigen::VectorXcd v(count);
    for (int i = 0; i < count; ++i)
        v[i] = std::polar(1.0, i * phase_step);
    return v;
}

} // namespace

void ArrayGeometry::validate() const
{
    if (m_y < 1 || m_z < 1 || n_y < 1 || n_z < 1)
        throw std::invalid_argument("ArrayGeometry: element counts must be positive");
    if (!(d_b > 0.0) || !(d_r > 0.0))
        throw std::invalid_argument("ArrayGeometry: spacings must be positive");
    for (double ang : {theta_a, omega_a, theta_d, omega_d})
        if (!std::isfinite(ang))
            throw std::invalid_argument("ArrayGeometry: angles must be finite");
}

void CorrelationSpec::validate() const
{
    if (!(rho_d >= 0.0) || !(rho_d <= 1.0) || !(rho_ru >= 0.0) || !(rho_ru <= 1.0))
        throw std::invalid_argument("CorrelationSpec: correlations must lie in [0, 1]");
}

void LinkGains::validate() const
{
    if (!(beta_d > 0.0) || !(beta_ru > 0.0) || !(beta_br > 0.0))
        throw std::invalid_argument("LinkGains: gains must be positive");
}

void Scenario::validate() const
{
    geometry.validate();
    correlation.validate();
    gains.validate();
    if (!(tau_bar > 0.0))
        throw std::invalid_argument("Scenario: tau_bar must be positive");
    // On the sinc branch the stored spacing must reproduce the requested
    // nearest-neighbour correlation.
    if (correlation.rho_ru > 0.0 && correlation.rho_ru < 1.0)
    {
        const double implied = normalized_sinc(2.0 * geometry.d_r);
        if (std::abs(implied - correlation.rho_ru) > 1e-6)
            throw std::invalid_argument(
                "Scenario: geometry.d_r is inconsistent with correlation.rho_ru");
    }
}

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

double linear_to_db(double x)
{
    return 10.0 * std::log10(x);
}

double normalized_sinc(double x)
{
    if (x == 0.0)
        return 1.0;
    const double px = kPi * x;
    return std::sin(px) / px;
}

Eigen::MatrixXd ris_correlation_matrix(int n_y, int n_z, double d_r)
{
    if (n_y < 1 || n_z < 1 || !(d_r > 0.0))
        throw std::invalid_argument("ris_correlation_matrix: invalid grid");
    const int n = n_y * n_z;
    Eigen::MatrixXd r(n, n);
    for (int i = 0; i < n; ++i)
    {
        const int pi_ = i / n_z;
        const int qi = i % n_z;
        for (int k = 0; k <= i; ++k)
        {
            const int pk = k / n_z;
            const int qk = k % n_z;
            const double dist = std::hypot((pi_ - pk) * d_r, (qi - qk) * d_r);
            const double val = normalized_sinc(2.0 * dist);
            r(i, k) = val;
            r(k, i) = val;
        }
    }
    return r;
}

Eigen::MatrixXd bs_correlation_matrix(int m_y, int m_z, double rho_d, double d_b)
{
    if (m_y < 1 || m_z < 1 || !(d_b > 0.0))
        throw std::invalid_argument("bs_correlation_matrix: invalid grid");
    if (!(rho_d >= 0.0) || !(rho_d <= 1.0))
        throw std::invalid_argument("bs_correlation_matrix: rho_d must lie in [0, 1]");
    const int m = m_y * m_z;
    Eigen::MatrixXd r(m, m);
    for (int i = 0; i < m; ++i)
    {
        const int pi_ = i / m_z;
        const int qi = i % m_z;
        for (int k = 0; k <= i; ++k)
        {
            const int pk = k / m_z;
            const int qk = k % m_z;
            double val;
            if (i == k)
                val = 1.0;
            else
            {
                const double dist = std::hypot((pi_ - pk) * d_b, (qi - qk) * d_b);
                val = std::pow(rho_d, dist / d_b);
            }
            r(i, k) = val;
            r(k, i) = val;
        }
    }
    return r;
}

double spacing_from_correlation(double rho_ru)
{
    if (!(rho_ru >= 0.0) || !(rho_ru <= 1.0))
        throw std::domain_error("spacing_from_correlation: rho_ru must lie in [0, 1]");
    if (rho_ru == 0.0)
        return 0.5;
    if (rho_ru == 1.0)
        return kMinSpacing;
    // sinc(2d) falls monotonically from 1 to 0 on (0, 0.5].
    double lo = 1e-12;
    double hi = 0.5;
    while (hi - lo > 1e-15)
    {
        const double mid = 0.5 * (lo + hi);
        if (normalized_sinc(2.0 * mid) > rho_ru)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

SteeringVectors steering_vectors(const ArrayGeometry &g)
{
    g.validate();
    const double by = kTwoPi * g.d_b * std::sin(g.theta_a) * std::sin(g.omega_a);
    const double bz = kTwoPi * g.d_b * std::cos(g.theta_a);
    const double ry = kTwoPi * g.d_r * std::sin(g.theta_d) * std::sin(g.omega_d);
    const double rz = kTwoPi * g.d_r * std::cos(g.theta_d);

    const Eigen::VectorXcd aby = axis_factor(g.m_y, by);
    const Eigen::VectorXcd abz = axis_factor(g.m_z, bz);
    const Eigen::VectorXcd ary = axis_factor(g.n_y, ry);
    const Eigen::VectorXcd arz = axis_factor(g.n_z, rz);

    SteeringVectors sv;
    sv.bs.resize(g.bs_elements());
    for (int p = 0; p < g.m_y; ++p)
        for (int q = 0; q < g.m_z; ++q)
            sv.bs[p * g.m_z + q] = aby[p] * abz[q];
    sv.ris.resize(g.ris_elements());
    for (int p = 0; p < g.n_y; ++p)
        for (int q = 0; q < g.n_z; ++q)
            sv.ris[p * g.n_z + q] = ary[p] * arz[q];
    return sv;
}

Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd &r)
{
    if (r.rows() != r.cols())
        throw std::invalid_argument("psd_sqrt: matrix must be square");
    if ((r - r.transpose()).cwiseAbs().maxCoeff() > 1e-10 * std::max(1.0, r.cwiseAbs().maxCoeff()))
        throw std::invalid_argument("psd_sqrt: matrix must be symmetric");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(r);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("psd_sqrt: eigendecomposition failed");
    Eigen::VectorXd lambda = es.eigenvalues();
    const double lambda_max = std::max(lambda.maxCoeff(), 0.0);
    const double threshold = -1e-6 * std::max(lambda_max, 1.0);
    for (Eigen::Index i = 0; i < lambda.size(); ++i)
    {
        if (lambda[i] < threshold)
            throw std::domain_error("psd_sqrt: matrix is not approximately positive semidefinite");
        lambda[i] = std::sqrt(std::max(lambda[i], 0.0));
    }
    Eigen::MatrixXd s =
        es.eigenvectors() * lambda.asDiagonal() * es.eigenvectors().transpose();
    return 0.5 * (s + s.transpose().eval());
}

Eigen::MatrixXd ris_correlation_for(const Scenario &s)
{
    const int n = s.geometry.ris_elements();
    if (s.correlation.rho_ru == 0.0)
        return Eigen::MatrixXd::Identity(n, n);
    if (s.correlation.rho_ru == 1.0)
        return Eigen::MatrixXd::Ones(n, n);
    return ris_correlation_matrix(s.geometry.n_y, s.geometry.n_z, s.geometry.d_r);
}

ChannelSample sample_channels(const Scenario &s, const Eigen::MatrixXd &sqrt_rd,
                              const Eigen::MatrixXd &sqrt_rru, std::mt19937_64 &rng)
{
    const int m = s.geometry.bs_elements();
    const int n = s.geometry.ris_elements();
    if (sqrt_rd.rows() != m || sqrt_rd.cols() != m || sqrt_rru.rows() != n ||
        sqrt_rru.cols() != n)
        throw std::invalid_argument("sample_channels: square-root factor dimensions mismatch");

    const Eigen::VectorXcd u_d = circular_gaussian(rng, m);
    const Eigen::VectorXcd u_ru = circular_gaussian(rng, n);
    ChannelSample cs;
    cs.h_d = std::sqrt(s.gains.beta_d) * (sqrt_rd * u_d);
    cs.h_ru = std::sqrt(s.gains.beta_ru) * (sqrt_rru * u_ru);
    return cs;
}

DeploymentDistances deployment_distances(double d, double d_v, double d_br)
{
    if (!(d > 0.0) || !(d_v > 0.0) || !(d_br > 0.0))
        throw std::invalid_argument("deployment_distances: distances must be positive");
    return {std::hypot(d_br - d, d_v), std::hypot(d, d_v)};
}

LinkGains link_gains_from_geometry(double d, double d_v, double d_br, double c0_db,
                                   double alpha_ru, double alpha_d)
{
    const DeploymentDistances dist = deployment_distances(d, d_v, d_br);
    const double c0 = db_to_linear(c0_db);
    LinkGains g;
    g.beta_ru = c0 * std::pow(dist.d_ru, -alpha_ru);
    g.beta_d = c0 * std::pow(dist.d_d, -alpha_d);
    g.beta_br = std::pow(d_br, -2.0);
    return g;
}

std::pair<int, int> ris_grid(int n)
{
    if (n < 1)
        throw std::invalid_argument("ris_grid: element count must be positive");
    int n_z = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n))));
    while (n % n_z != 0)
        --n_z;
    return {n / n_z, n_z};
}

} // namespace rispdl
