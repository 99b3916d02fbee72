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

#include "rispdl/pdl.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rispdl/quadrature.hpp"
#include "rispdl/specfun.hpp"

namespace rispdl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_to_period(double x)
{
    double y = std::fmod(x, kTwoPi);
    if (y < 0.0)
        y += kTwoPi;
    return y;
}

// (1/(1-v^2)) (1 - v acos(v) / sqrt(1-v^2)) for v in (-1, 1), written as
// (sin t - t cos t) / sin^3 t with t = acos v. The numerator cancels near
// t = 0, where its power series takes over.
double phase_kernel(double v)
{
    const double t = std::acos(v);
    const double st = std::sqrt((1.0 - v) * (1.0 + v));
    double num;
    if (v > 0.995)
    {
        const double t2 = t * t;
        num = t * t2 *
              (1.0 / 3.0 + t2 * (-1.0 / 30.0 + t2 * (1.0 / 840.0 - t2 / 45360.0)));
    }
    else
    {
        num = st - t * v;
    }
    return num / (st * st * st);
}

// Quartic cross term of the expanded loss product, integrated over a full
// period. Closed form through the contour moment
//   I = 2 pi (g^2-1)^alpha 2F1(-2 alpha, 2 alpha + 1; 1; (1 - g1)/2),
// g = cos((a-b)/2), g1 = g / sqrt(g^2 - 1); splitting I into the
// contributions of positive and negative base gives the real integral as
//   4^-alpha A1^2 [Re I + Im I (1 - cos 2 pi alpha) / sin 2 pi alpha].
// Where the split is singular the defining integrand is integrated directly.
double loss_product_quartic_term(double a, double b, const LossParams &p)
{
    const double a1 = 1.0 - p.l_min;
    if (a1 == 0.0)
        return 0.0;
    if (p.alpha == 0.0)
        return a1 * a1 * kTwoPi;

    const double g = std::cos(0.5 * (a - b));
    const double sin2pa = std::sin(kTwoPi * p.alpha);
    if (std::abs(sin2pa) < 1e-6 || std::abs(g) > 1.0 - 1e-6)
    {
        QuadratureOptions opt;
        opt.abs_tol = 1e-9;
        opt.max_panels = 20000;
        // theta shifts the integrand by part of a period and drops out.
        return a1 * a1 *
               integrate(
                   [=](double x) {
                       const double u = 0.5 * (1.0 + std::sin(x + a));
                       const double w = 0.5 * (1.0 + std::sin(x + b));
                       return std::pow(u * w, p.alpha);
                   },
                   0.0, kTwoPi, opt);
    }

    const double one_minus_g2 = (1.0 - g) * (1.0 + g);
    const std::complex<double> prefactor = principal_power(g * g - 1.0, p.alpha);
    const std::complex<double> g1(0.0, -g / std::sqrt(one_minus_g2));
    const std::complex<double> z = 0.5 * (1.0 - g1);
    const std::complex<double> contour =
        kTwoPi * prefactor * gauss_2f1_complex(-2.0 * p.alpha, 2.0 * p.alpha + 1.0, 1.0, z);
    const double abs_integral =
        contour.real() + contour.imag() * (1.0 - std::cos(kTwoPi * p.alpha)) / sin2pa;
    return a1 * a1 * std::exp2(-2.0 * p.alpha) * abs_integral;
}

} // namespace

LossParams::LossParams(double l_min_in, double alpha_in, double theta_in)
    : l_min(l_min_in), alpha(alpha_in), theta(reduce_to_period(theta_in))
{
    if (!(l_min >= 0.0) || !(l_min <= 1.0))
        throw std::invalid_argument("LossParams: l_min must lie in [0, 1]");
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("LossParams: alpha must be finite and nonnegative");
    if (!std::isfinite(theta_in))
        throw std::invalid_argument("LossParams: theta must be finite");
}

double loss(double phi, const LossParams &p)
{
    if (p.alpha == 0.0 || p.l_min == 1.0)
        return 1.0;
    const double s = 0.5 * (1.0 + std::sin(phi + p.theta));
    return (1.0 - p.l_min) * std::pow(s, p.alpha) + p.l_min;
}

Eigen::VectorXd loss_vector(const Eigen::VectorXd &phases, const LossParams &p)
{
    Eigen::VectorXd out(phases.size());
    for (Eigen::Index i = 0; i < phases.size(); ++i)
        out[i] = loss(phases[i], p);
    return out;
}

double mu1(const LossParams &p)
{
    const auto [c1, c2] = c1_c2(p.alpha);
    (void)c2;
    return (1.0 - p.l_min) * c1 + p.l_min;
}

double mu2(const LossParams &p)
{
    const auto [c1, c2] = c1_c2(p.alpha);
    const double a1 = 1.0 - p.l_min;
    return 2.0 * p.l_min * a1 * c1 + p.l_min * p.l_min + a1 * a1 * c2;
}

std::pair<double, double> c1_c2(double alpha)
{
    if (!(alpha >= 0.0))
        throw std::domain_error("c1_c2: alpha must be nonnegative");
    // 4^a B(a+1/2, a+1/2) equals B(1/2, a+1/2) by the duplication formula;
    // this form stays finite for arbitrarily large alpha.
    const double c1 = std::exp(ln_beta(0.5, alpha + 0.5)) / kPi;
    const double c2 = std::exp(ln_beta(0.5, 2.0 * alpha + 0.5)) / kPi;
    return {c1, c2};
}

double phase_pair_density(double x, std::complex<double> rho)
{
    const double r = std::abs(rho);
    if (!(r < 1.0))
        throw std::domain_error("phase_pair_density: |rho| must be < 1");
    if (r == 0.0)
        return 1.0 / (4.0 * kPi * kPi);
    const double v = r * std::cos(x - std::arg(-rho));
    return (1.0 - r * r) / (4.0 * kPi * kPi) * phase_kernel(v);
}

double loss_pair_expectation(double angle_r, double angle_s, std::complex<double> rho,
                             const LossParams &p)
{
    const double r = std::abs(rho);
    if (r > 1.0 - kCorrelationCutoff)
        throw std::domain_error(
            "loss_pair_expectation: |rho| too close to 1 for the quadrature path");
    // Shifting both integration variables by the loss offset and the
    // steering phases moves all of them into the density argument, where
    // only the angle difference survives. The value is exactly invariant
    // under theta and under common rotations of the two steering phases.
    const LossParams p0(p.l_min, p.alpha, 0.0);
    const double delta = angle_s - angle_r;
    const double ang = (r == 0.0) ? 0.0 : std::arg(-rho);
    const double scale = (1.0 - r * r) / (4.0 * kPi * kPi);
    return integrate_2d(
        [&](double u, double w) {
            const double v = r * std::cos(w - u - delta - ang);
            return loss(u, p0) * loss(w, p0) * scale * phase_kernel(v);
        },
        0.0, kTwoPi, 0.0, kTwoPi, 1e-7);
}

double loss_product_integral(double a, double b, const LossParams &p)
{
    const double a1 = 1.0 - p.l_min;
    const double a2 = p.l_min;
    if (p.alpha == 0.0 || a1 == 0.0)
        return kTwoPi;
    // 2^(2a+1) B((2a+1)/2, (2a+1)/2), shared by the two linear cross terms.
    const double b1 = std::exp((2.0 * p.alpha + 1.0) * std::numbers::ln2 +
                               ln_beta(p.alpha + 0.5, p.alpha + 0.5));
    const double linear_terms = 2.0 * a1 * a2 * b1;
    const double constant_term = kTwoPi * a2 * a2;
    return linear_terms + constant_term + loss_product_quartic_term(a, b, p);
}

} // namespace rispdl
