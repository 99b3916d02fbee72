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

#ifndef RISPDL_SPECFUN_HPP
#define RISPDL_SPECFUN_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace rispdl {

// Raised when a hypergeometric series or continuation fails to reach its
// internal tolerance. Carries the residual estimate at the point it gave up.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string &what, double residual)
        : std::runtime_error(what), residual_(residual)
    {
    }
    double residual() const { return residual_; }

  private:
    double residual_;
};

// log Gamma(x) for x > 0.
double ln_gamma(double x);

// Beta function B(z, w) = Gamma(z) Gamma(w) / Gamma(z + w), z, w > 0.
double ln_beta(double z, double w);
double beta(double z, double w);

// The moment factor (1 - z)^2 2F1(3/2, 3/2; 1; z) for z in [0, 1], evaluated
// through its Euler transform 2F1(-1/2, -1/2; 1; z). The transformed series
// has positive terms, so the product is computed without touching the
// (1 - z)^-2 blow-up of the raw hypergeometric factor. Monotone
// nondecreasing, equal to 1 at z = 0 and 4/pi at z = 1.
double gauss_2f1_pair_moment(double z);

// Gauss hypergeometric function with real parameters and complex argument.
// Power series inside |z| <= 0.7, otherwise the standard linear
// transformations z -> z/(z-1) and z -> 1-z; the Pfaff-transformed series is
// also summed on |z/(z-1)| <= 1 when it converges absolutely there.
std::complex<double> gauss_2f1_complex(double a, double b, double c, std::complex<double> z);

// Closed form of the full-period integral of (1 + sin(x + a))^b, b >= 0:
//   2^(3b+1) B((2b+1)/2, (2b+1)/2).
// Independent of the phase a by periodicity.
double sine_power_integral(double a, double b);

// base^exponent on the principal branch, with base a real number that may be
// negative: (-r)^p = r^p exp(i pi p). 0^0 is taken as 1.
std::complex<double> principal_power(double base, double exponent);

// I(gamma, alpha) = integral over [0, 2pi] of (gamma - cos u)^(2 alpha) du
// under the principal branch, by adaptive quadrature to 1e-9 absolute.
// Serves as the test oracle for the hypergeometric closed form of the same
// quantity and as the runtime fallback near its singular parameter sets.
std::complex<double> cos_power_integral(double gamma, double alpha);

} // namespace rispdl

#endif
