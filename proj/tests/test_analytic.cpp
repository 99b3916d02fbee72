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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "rispdl/analytic.hpp"
#include "rispdl/montecarlo.hpp"
#include "rispdl/quadrature.hpp"
#include "rispdl/sweep.hpp"

using namespace rispdl;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Scenario scenario_with(int n, double rho_ru, const LossParams &p)
{
    Scenario s = default_scenario();
    const auto [n_y, n_z] = ris_grid(n);
    s.geometry.n_y = n_y;
    s.geometry.n_z = n_z;
    s.correlation.rho_ru = rho_ru;
    s.geometry.d_r = spacing_from_correlation(rho_ru);
    s.loss = p;
    return s;
}

double loss_product_by_quadrature(double a, double b, const LossParams &p)
{
    QuadratureOptions opt;
    opt.abs_tol = 1e-10;
    opt.max_panels = 20000;
    return integrate([&](double x) { return loss(x + a, p) * loss(x + b, p); }, 0.0, kTwoPi,
                     opt);
}

} // namespace

TEST_CASE("pair magnitude moment endpoints and shape")
{
    CHECK(pair_magnitude_moment(0.0) == doctest::Approx(kPi / 4.0).epsilon(1e-14));
    CHECK(pair_magnitude_moment(1.0) == doctest::Approx(1.0).epsilon(1e-13));
    double prev = 0.0;
    for (int i = 0; i <= 100; ++i)
    {
        const double q = i / 100.0;
        const double v = pair_magnitude_moment(q);
        CHECK(v >= kPi / 4.0 - 1e-12);
        CHECK(v <= 1.0 + 1e-12);
        CHECK(v >= prev - 1e-12);
        prev = v;
    }
    CHECK_THROWS_AS(pair_magnitude_moment(-0.01), std::domain_error);
    CHECK_THROWS_AS(pair_magnitude_moment(1.01), std::domain_error);
}

TEST_CASE("coupling sum edge cases")
{
    const LossParams p(0.5, 1.2, 0.2);
    CHECK(coupling_sum(Eigen::MatrixXd::Identity(1, 1), Eigen::VectorXcd::Ones(1), p) == 0.0);
    CHECK(coupling_sum_fully_correlated(Eigen::VectorXcd::Ones(1), p) == 0.0);
    CHECK(coupling_sum_uncorrelated(1, mu1(p)) == 0.0);

    Eigen::MatrixXd near_unit = Eigen::MatrixXd::Identity(2, 2);
    near_unit(0, 1) = near_unit(1, 0) = 0.9995;
    CHECK_THROWS_AS(coupling_sum(near_unit, Eigen::VectorXcd::Ones(2), p), std::domain_error);
}

TEST_CASE("coupling sum with identity correlation reduces to the closed form")
{
    const LossParams p(0.5, 1.2, 0.2);
    for (int n : {2, 4, 16})
    {
        const Scenario s = scenario_with(n, 0.95, p);
        const SteeringVectors sv = steering_vectors(s.geometry);
        const double general =
            coupling_sum(Eigen::MatrixXd::Identity(n, n), sv.ris, p);
        const double closed = coupling_sum_uncorrelated(n, mu1(p));
        CHECK(general == doctest::Approx(closed).epsilon(1e-6));
    }
}

TEST_CASE("coupling sum at unit loss keeps only the magnitude moments")
{
    const LossParams lossless(1.0, 1.2, 0.2);
    const Scenario s = scenario_with(9, 0.7, lossless);
    const Eigen::MatrixXd r = ris_correlation_for(s);
    const SteeringVectors sv = steering_vectors(s.geometry);
    const double general = coupling_sum(r, sv.ris, lossless);
    double expected = 0.0;
    for (int a = 0; a < 9; ++a)
        for (int b = a + 1; b < 9; ++b)
            expected += 2.0 * pair_magnitude_moment(r(a, b) * r(a, b));
    CHECK(general == doctest::Approx(expected).epsilon(1e-6));
}

TEST_CASE("fully correlated coupling against the per-pair quadrature oracle")
{
    for (double alpha : {0.3, 1.2, 1.6, 0.5, 1.0})
    {
        const LossParams p(0.2, alpha, 0.0);
        for (int n : {2, 4})
        {
            const Scenario s = scenario_with(n, 1.0, p);
            const SteeringVectors sv = steering_vectors(s.geometry);
            const double closed = coupling_sum_fully_correlated(sv.ris, p);
            double oracle = 0.0;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    oracle += 2.0 *
                              loss_product_by_quadrature(std::arg(sv.ris[a]),
                                                         std::arg(sv.ris[b]), p) /
                              kTwoPi;
            CHECK(closed == doctest::Approx(oracle).epsilon(1e-6));
        }
    }
}

TEST_CASE("fully correlated coupling reductions")
{
    const LossParams lossless(1.0, 1.6, 0.1);
    Eigen::VectorXcd a_r(4);
    a_r << std::polar(1.0, 0.1), std::polar(1.0, 1.4), std::polar(1.0, 2.2),
        std::polar(1.0, 5.0);
    CHECK(coupling_sum_fully_correlated(a_r, lossless) ==
          doctest::Approx(12.0).epsilon(1e-9));

    const LossParams p(0.2, 1.6, 0.0);
    Eigen::VectorXcd two(2);
    two << std::polar(1.0, 0.3), std::polar(1.0, 1.1);
    CHECK(coupling_sum_fully_correlated(two, p) ==
          doctest::Approx(2.0 * loss_product_integral(0.3, 1.1, p) / kTwoPi).epsilon(1e-9));
}

TEST_CASE("general coupling approaches the fully correlated value near the cutoff")
{
    const LossParams p(0.5, 1.2, 0.0);
    const Scenario s = scenario_with(4, 1.0, p);
    const SteeringVectors sv = steering_vectors(s.geometry);
    Eigen::MatrixXd near = Eigen::MatrixXd::Ones(4, 4) * (1.0 - 1e-3);
    near.diagonal().setOnes();
    const double general = coupling_sum(near, sv.ris, p);
    const double closed = coupling_sum_fully_correlated(sv.ris, p);
    CHECK(general == doctest::Approx(closed).epsilon(0.02));
}

TEST_CASE("mean snr routing and breakdown structure")
{
    const LossParams p(0.5, 1.2, 0.2);

    const MeanSnrBreakdown uncorr = mean_snr(scenario_with(16, 0.0, p));
    CHECK(uncorr.route == FRoute::uncorrelated);
    const MeanSnrBreakdown general = mean_snr(scenario_with(16, 0.95, p));
    CHECK(general.route == FRoute::general);
    const MeanSnrBreakdown full = mean_snr(scenario_with(16, 1.0, p));
    CHECK(full.route == FRoute::fully_correlated);

    for (const MeanSnrBreakdown &b : {uncorr, general, full})
    {
        CHECK(b.total == b.term_direct + b.term_cross + b.term_ris);
        CHECK(b.term_direct > 0.0);
        CHECK(b.term_cross > 0.0);
        CHECK(b.term_ris > 0.0);
        CHECK(b.coupling_f >= 0.0);
    }
    // more correlation at the RIS concentrates the pair sum
    CHECK(full.coupling_f > general.coupling_f);
    CHECK(general.coupling_f > uncorr.coupling_f);
}

TEST_CASE("mean snr is exactly linear in tau_bar")
{
    const Scenario s = scenario_with(16, 0.95, LossParams(0.5, 1.2, 0.2));
    Scenario doubled = s;
    doubled.tau_bar *= 2.0;
    const MeanSnrBreakdown b1 = mean_snr(s);
    const MeanSnrBreakdown b2 = mean_snr(doubled);
    CHECK(b2.total == 2.0 * b1.total);
    CHECK(b2.term_direct == 2.0 * b1.term_direct);
    CHECK(b2.term_cross == 2.0 * b1.term_cross);
    CHECK(b2.term_ris == 2.0 * b1.term_ris);
}

TEST_CASE("mean snr is bit-identical under theta changes")
{
    for (double rho_ru : {0.0, 0.7, 1.0})
    {
        const MeanSnrBreakdown a = mean_snr(scenario_with(16, rho_ru, LossParams(0.5, 1.2, 0.2)));
        const MeanSnrBreakdown b =
            mean_snr(scenario_with(16, rho_ru, LossParams(0.5, 1.2, 0.42)));
        CHECK(a.total == b.total);
        CHECK(a.coupling_f == b.coupling_f);
    }
}

TEST_CASE("lossless reduction reproduces the unit-moment formulas")
{
    const Scenario s = scenario_with(16, 0.95, LossParams(1.0, 1.2, 0.2));
    const MeanSnrBreakdown b = mean_snr(s);

    const SteeringVectors sv = steering_vectors(s.geometry);
    const Eigen::MatrixXd sqrt_rd = psd_sqrt(bs_correlation_matrix(
        s.geometry.m_y, s.geometry.m_z, s.correlation.rho_d, s.geometry.d_b));
    const double norm = (sqrt_rd * sv.bs).norm();
    const int m = s.geometry.bs_elements();
    const int n = s.geometry.ris_elements();
    const LinkGains &g = s.gains;

    CHECK(b.term_cross ==
          doctest::Approx(s.tau_bar * std::sqrt(g.beta_br * g.beta_d * g.beta_ru) * norm * n *
                          kPi / 2.0)
              .epsilon(1e-12));
    const Eigen::MatrixXd r = ris_correlation_for(s);
    double f_lossless = 0.0;
    for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c)
            f_lossless += 2.0 * pair_magnitude_moment(r(a, c) * r(a, c));
    CHECK(b.term_ris ==
          doctest::Approx(s.tau_bar * g.beta_ru * g.beta_br * m * (n + f_lossless))
              .epsilon(1e-6));
}

TEST_CASE("mean snr against the simulator on the reference configuration")
{
    const Scenario s = scenario_with(16, 0.95, LossParams(0.5, 1.2, 0.2));
    const MeanSnrBreakdown b = mean_snr(s);
    const EstimateWithError est = estimate_mean_snr(s, 100000, 314159);
    CHECK(std::abs(est.mean - b.total) <= 3.0 * est.std_error);
}

TEST_CASE("quadratic growth in the ris size")
{
    const LossParams p(0.5, 1.2, 0.2);
    const double t64 = mean_snr(scenario_with(64, 0.0, p)).total;
    const double t128 = mean_snr(scenario_with(128, 0.0, p)).total;
    const double ratio = t128 / t64;
    CHECK(ratio >= 3.5);
    CHECK(ratio <= 4.5);
}

TEST_CASE("analytic total is monotone in alpha and l_min")
{
    double prev = std::numeric_limits<double>::infinity();
    for (double alpha : {0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0})
    {
        const double total = mean_snr(scenario_with(16, 0.7, LossParams(0.5, alpha, 0.2))).total;
        CHECK(total <= prev * (1.0 + 1e-9));
        prev = total;
    }
    prev = -1.0;
    for (double l_min : {0.0, 0.25, 0.5, 0.75, 1.0})
    {
        const double total = mean_snr(scenario_with(16, 0.7, LossParams(l_min, 1.6, 0.2))).total;
        CHECK(total >= prev * (1.0 - 1e-9));
        prev = total;
    }
}

TEST_CASE("mu2 scale hook shifts only the ris term")
{
    const Scenario s = scenario_with(16, 0.0, LossParams(0.5, 1.2, 0.2));
    const MeanSnrBreakdown plain = mean_snr(s);
    AnalyticOptions opt;
    opt.mu2_scale = 1.1;
    const MeanSnrBreakdown scaled = mean_snr(s, opt);
    CHECK(scaled.term_direct == plain.term_direct);
    CHECK(scaled.term_cross == plain.term_cross);
    CHECK(scaled.term_ris > plain.term_ris);
}

TEST_CASE("mu1 scaling rule of thumb")
{
    const Scenario lossless = scenario_with(16, 0.95, LossParams(1.0, 1.2, 0.2));
    CHECK(mu1_scaling_approximation(lossless) ==
          doctest::Approx(mean_snr(lossless).total).epsilon(1e-12));

    // definitional: term-wise scaling of the lossless breakdown
    const Scenario s = scenario_with(16, 0.95, LossParams(0.5, 1.2, 0.2));
    Scenario ref = s;
    ref.loss = LossParams(1.0, 1.2, 0.2);
    const MeanSnrBreakdown b = mean_snr(ref);
    const double m1 = mu1(s.loss);
    CHECK(mu1_scaling_approximation(s) ==
          doctest::Approx(b.term_direct + m1 * b.term_cross + m1 * m1 * b.term_ris)
              .epsilon(1e-12));

    // lower bound on the reference configuration
    CHECK(mu1_scaling_approximation(s) <= mean_snr(s).total);
}

TEST_CASE("pdl penalty reductions")
{
    const Scenario lossless = scenario_with(16, 0.95, LossParams(1.0, 1.2, 0.2));
    CHECK(pdl_penalty(lossless) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    const Scenario flat = scenario_with(16, 0.95, LossParams(0.3, 0.0, 0.2));
    CHECK(pdl_penalty(flat) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    const Scenario s = scenario_with(16, 0.95, LossParams(0.5, 1.2, 0.2));
    const double penalty = pdl_penalty(s);
    CHECK(penalty > 0.0);
    CHECK(penalty < 1.0);
}
