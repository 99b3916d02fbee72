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

#include "rispdl/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "rispdl/quadrature.hpp"

namespace rispdl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

using cplx = std::complex<double>;

// Nearest nonnegative integer m with x ~ -m, or -1 if x is not close to a
// nonpositive integer.
int nonpositive_integer(double x)
{
    if (x > 0.5)
        return -1;
    const double r = std::round(x);
    if (std::abs(x - r) > 1e-12)
        return -1;
    return static_cast<int>(-r);
}

struct SeriesResult
{
    cplx value;
    double tail;
    bool converged;
};

// Sum of the hypergeometric series at (a, b, c, z). For |z| away from 1 the
// tail is bounded geometrically; on |z| ~ 1 the coefficient decay
// k^-(c+1-a-b) gives the algebraic estimate tail ~ |t_k| k / (p - 1) with
// p = c + 1 - a - b.
SeriesResult hyp_series(double a, double b, double c, cplx z, double tol, int max_terms)
{
    const double az = std::abs(z);
    const double decay_p = c + 1.0 - a - b;
    cplx term = 1.0;
    cplx sum = 1.0;
    double tail = std::numeric_limits<double>::infinity();
    double prev_mag = 1.0;
    for (int k = 0; k < max_terms; ++k)
    {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        const double mag = std::abs(term);
        if (az < 0.95)
            tail = mag * az / (1.0 - az);
        else
            tail = mag * (k + 2.0) / std::max(decay_p - 1.0, 0.05);
        if (k >= 2 && mag <= prev_mag && tail < tol * std::max(1.0, std::abs(sum)))
            return {sum, tail, true};
        prev_mag = mag;
    }
    return {sum, tail, false};
}

cplx hyp_terminating(int m, double a, double b, double c, cplx z)
{
    cplx term = 1.0;
    cplx sum = 1.0;
    for (int k = 0; k < m; ++k)
    {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
    }
    return sum;
}

// Connection formula for argument near 1; valid when c - a - b is not an
// integer.
cplx hyp_via_one_minus_z(double a, double b, double c, cplx z, double tol)
{
    const double d = c - a - b;
    const cplx w = 1.0 - z;
    const double g1 = std::tgamma(c) * std::tgamma(d) / (std::tgamma(c - a) * std::tgamma(c - b));
    const double g2 = std::tgamma(c) * std::tgamma(-d) / (std::tgamma(a) * std::tgamma(b));
    SeriesResult s1 = hyp_series(a, b, a + b - c + 1.0, w, tol, 200000);
    SeriesResult s2 = hyp_series(c - a, c - b, c - a - b + 1.0, w, tol, 200000);
    if (!s1.converged || !s2.converged)
        throw ConvergenceError("gauss_2f1_complex: 1-z connection did not converge",
                               std::max(s1.tail, s2.tail));
    return g1 * s1.value + g2 * std::pow(w, cplx(d, 0.0)) * s2.value;
}

} // namespace

double ln_gamma(double x)
{
    if (!(x > 0.0))
        throw std::domain_error("ln_gamma: argument must be positive");
    return std::lgamma(x);
}

double ln_beta(double z, double w)
{
    if (!(z > 0.0) || !(w > 0.0))
        throw std::domain_error("beta: arguments must be positive");
    return std::lgamma(z) + std::lgamma(w) - std::lgamma(z + w);
}

double beta(double z, double w)
{
    return std::exp(ln_beta(z, w));
}

double gauss_2f1_pair_moment(double z)
{
    if (!(z >= 0.0) || z > 1.0)
        throw std::domain_error("gauss_2f1_pair_moment: argument must lie in [0, 1]");
    // Near z = 1 the series decays only algebraically; the function is C^1
    // there with F(1) = 4/pi and F'(1) = 1/pi, and the next correction is
    // O((1-z)^2 log(1-z)), below 2e-13 inside this window.
    if (z > 1.0 - 1e-7)
        return (4.0 - (1.0 - z)) / kPi;

    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < 2000000; ++k)
    {
        const double r = k - 0.5;
        term *= r * r / ((k + 1.0) * (k + 1.0)) * z;
        sum += term;
        // Positive terms; coefficients decay like k^-3, so the remainder is
        // below term * (k+2)/2, and below the geometric bound as well.
        const double tail =
            term * std::min(0.5 * (k + 2.0), z < 1.0 ? z / (1.0 - z) : 1e300);
        if (tail < 1e-15 * sum)
            break;
    }
    return sum;
}

std::complex<double> gauss_2f1_complex(double a, double b, double c, std::complex<double> z)
{
    const int m_a = nonpositive_integer(a);
    const int m_b = nonpositive_integer(b);
    const int m_c = nonpositive_integer(c);
    if (m_c >= 0)
    {
        const bool saved_by_a = m_a >= 0 && m_a <= m_c;
        const bool saved_by_b = m_b >= 0 && m_b <= m_c;
        if (!saved_by_a && !saved_by_b)
            throw std::domain_error("gauss_2f1_complex: c is a nonpositive integer");
    }
    if (m_a >= 0 && (m_b < 0 || m_a <= m_b))
        return hyp_terminating(m_a, a, b, c, z);
    if (m_b >= 0)
        return hyp_terminating(m_b, b, a, c, z);

    const double tol = 1e-13;
    if (std::abs(z) < 1e-300)
        return 1.0;
    if (std::abs(z) <= 0.7)
    {
        SeriesResult s = hyp_series(a, b, c, z, tol, 200000);
        if (!s.converged)
            throw ConvergenceError("gauss_2f1_complex: series did not converge", s.tail);
        return s.value;
    }

    const cplx w = z / (z - 1.0);
    const double aw = std::abs(w);
    if (aw <= 0.7)
    {
        SeriesResult s = hyp_series(a, c - b, c, w, tol, 200000);
        if (!s.converged)
            throw ConvergenceError("gauss_2f1_complex: Pfaff series did not converge", s.tail);
        return std::pow(1.0 - z, cplx(-a, 0.0)) * s.value;
    }

    const double d = c - a - b;
    if (std::abs(1.0 - z) <= 0.7 && std::abs(d - std::round(d)) > 1e-8)
        return hyp_via_one_minus_z(a, b, c, z, tol);

    if (aw <= 1.0 + 1e-12)
    {
        // Pfaff transform on whichever parameter leaves the faster
        // coefficient decay; on the unit circle the series converges
        // absolutely when the decay exponent exceeds 1.
        const double p_a = 1.0 + b - a;
        const double p_b = 1.0 + a - b;
        const bool use_a = p_a >= p_b;
        const double p = use_a ? p_a : p_b;
        if (p > 1.05)
        {
            SeriesResult s = use_a ? hyp_series(a, c - b, c, w, tol, 500000)
                                   : hyp_series(b, c - a, c, w, tol, 500000);
            if (!s.converged)
                throw ConvergenceError("gauss_2f1_complex: unit-circle series did not converge",
                                       s.tail);
            const double expo = use_a ? -a : -b;
            return std::pow(1.0 - z, cplx(expo, 0.0)) * s.value;
        }
    }

    if (std::abs(z) < 1.0)
    {
        SeriesResult s = hyp_series(a, b, c, z, tol, 500000);
        if (s.converged)
            return s.value;
        throw ConvergenceError("gauss_2f1_complex: series did not converge", s.tail);
    }

    throw ConvergenceError("gauss_2f1_complex: argument outside the validated region",
                           std::numeric_limits<double>::infinity());
}

double sine_power_integral(double a, double b)
{
    (void)a; // a shifts the integrand by a full-period phase only
    if (!(b >= 0.0))
        throw std::domain_error("sine_power_integral: exponent must be nonnegative");
    if (b == 0.0)
        return kTwoPi;
    return std::exp((3.0 * b + 1.0) * kLn2 + ln_beta(b + 0.5, b + 0.5));
}

std::complex<double> principal_power(double base, double exponent)
{
    if (exponent == 0.0)
        return 1.0;
    if (base > 0.0)
        return std::pow(base, exponent);
    if (base == 0.0)
        return 0.0;
    const double m = std::pow(-base, exponent);
    return {m * std::cos(kPi * exponent), m * std::sin(kPi * exponent)};
}

std::complex<double> cos_power_integral(double gamma, double alpha)
{
    if (!(std::abs(gamma) <= 1.0))
        throw std::domain_error("cos_power_integral: |gamma| must be <= 1");
    if (!(alpha >= 0.0))
        throw std::domain_error("cos_power_integral: alpha must be nonnegative");
    if (alpha == 0.0)
        return kTwoPi;
    const double p = 2.0 * alpha;
    QuadratureOptions opt;
    opt.abs_tol = 1e-9;
    opt.max_panels = 20000;
    return integrate_complex(
        [gamma, p](double u) { return principal_power(gamma - std::cos(u), p); }, 0.0, kTwoPi,
        opt);
}

} // namespace rispdl
