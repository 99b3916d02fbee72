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

#include "rispdl/analytic.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <exception>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "rispdl/specfun.hpp"

namespace rispdl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct ElementPair
{
    int r;
    int s;
};

std::vector<ElementPair> unordered_pairs(int n)
{
    std::vector<ElementPair> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s)
            pairs.push_back({r, s});
    return pairs;
}

// Evaluates fn over every unordered pair into a fixed slot, then reduces in
// index order, so the sum does not depend on the thread schedule.
template <typename Fn>
double pair_sum(const std::vector<ElementPair> &pairs, Fn &&fn)
{
    std::vector<double> contrib(pairs.size(), 0.0);
    std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(pairs.size()); ++i)
    {
        try
        {
            contrib[i] = fn(pairs[i]);
        }
        catch (...)
        {
#pragma omp critical
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    double total = 0.0;
    for (double c : contrib)
        total += c;
    return total;
}

} // namespace

const char *to_string(FRoute route)
{
    switch (route)
    {
    case FRoute::uncorrelated:
        return "uncorrelated";
    case FRoute::general:
        return "general";
    case FRoute::fully_correlated:
        return "fully_correlated";
    }
    return "unknown";
}

double pair_magnitude_moment(double rho_sq)
{
    if (!(rho_sq >= 0.0) || rho_sq > 1.0)
        throw std::domain_error("pair_magnitude_moment: argument must lie in [0, 1]");
    return 0.25 * kPi * gauss_2f1_pair_moment(rho_sq);
}

double coupling_sum(const Eigen::MatrixXd &r_ru, const Eigen::VectorXcd &a_r,
                    const LossParams &p)
{
    const int n = static_cast<int>(r_ru.rows());
    if (r_ru.cols() != n || a_r.size() != n)
        throw std::invalid_argument("coupling_sum: dimension mismatch");
    if (n == 1)
        return 0.0;
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
            if (r != s && std::abs(r_ru(r, s)) > 1.0 - kCorrelationCutoff)
                throw std::domain_error(
                    "coupling_sum: off-diagonal correlation too close to 1");

    const auto pairs = unordered_pairs(n);
    // Each unordered pair appears twice in the ordered sum.
    return pair_sum(pairs, [&](const ElementPair &pr) {
        const double rho = r_ru(pr.r, pr.s);
        const double moment = pair_magnitude_moment(rho * rho);
        const double lrs = loss_pair_expectation(std::arg(a_r[pr.r]), std::arg(a_r[pr.s]),
                                                 std::complex<double>(rho, 0.0), p);
        return 2.0 * moment * lrs;
    });
}

double coupling_sum_uncorrelated(int n, double mu1_value)
{
    if (n < 1)
        throw std::invalid_argument("coupling_sum_uncorrelated: n must be positive");
    return mu1_value * mu1_value * static_cast<double>(n) * (n - 1.0) * kPi / 4.0;
}

double coupling_sum_fully_correlated(const Eigen::VectorXcd &a_r, const LossParams &p)
{
    const int n = static_cast<int>(a_r.size());
    if (n < 1)
        throw std::invalid_argument("coupling_sum_fully_correlated: empty steering vector");
    if (n == 1)
        return 0.0;
    const auto pairs = unordered_pairs(n);
    // The pair magnitude moment is exactly 1 at |rho| = 1, so each ordered
    // pair contributes its normalized loss-product integral.
    return pair_sum(pairs, [&](const ElementPair &pr) {
        return 2.0 *
               loss_product_integral(std::arg(a_r[pr.r]), std::arg(a_r[pr.s]), p) / kTwoPi;
    });
}

MeanSnrBreakdown mean_snr(const Scenario &s, const AnalyticOptions &opt)
{
    s.validate();
    const int m = s.geometry.bs_elements();
    const int n = s.geometry.ris_elements();
    const SteeringVectors sv = steering_vectors(s.geometry);
    const Eigen::MatrixXd rd =
        bs_correlation_matrix(s.geometry.m_y, s.geometry.m_z, s.correlation.rho_d,
                              s.geometry.d_b);
    const Eigen::MatrixXd sqrt_rd = psd_sqrt(rd);
    const double rd_norm = (sqrt_rd * sv.bs).norm();

    // All mean formulas average the loss over full periods, so the phase
    // offset drops out exactly; evaluating at theta = 0 keeps the result
    // bit-identical across offsets.
    const LossParams p0(s.loss.l_min, s.loss.alpha, 0.0);
    const double m1 = mu1(p0);
    const double m2 = mu2(p0) * opt.mu2_scale;

    MeanSnrBreakdown out;
    if (s.correlation.rho_ru == 0.0)
    {
        out.coupling_f = coupling_sum_uncorrelated(n, m1);
        out.route = FRoute::uncorrelated;
    }
    else if (s.correlation.rho_ru > 1.0 - kCorrelationCutoff)
    {
        out.coupling_f = coupling_sum_fully_correlated(sv.ris, p0);
        out.route = FRoute::fully_correlated;
    }
    else
    {
        out.coupling_f = coupling_sum(ris_correlation_for(s), sv.ris, p0);
        out.route = FRoute::general;
    }

    const LinkGains &g = s.gains;
    out.term_direct = s.tau_bar * g.beta_d * m;
    out.term_cross = s.tau_bar * std::sqrt(g.beta_br * g.beta_d * g.beta_ru) * rd_norm * n *
                     m1 * kPi / 2.0;
    out.term_ris = s.tau_bar * g.beta_ru * g.beta_br * m * (n * m2 + out.coupling_f);
    out.total = out.term_direct + out.term_cross + out.term_ris;
    return out;
}

double mu1_scaling_approximation(const Scenario &s)
{
    Scenario lossless = s;
    lossless.loss = LossParams(1.0, s.loss.alpha, s.loss.theta);
    const MeanSnrBreakdown b = mean_snr(lossless);
    const double m1 = mu1(s.loss);
    return b.term_direct + m1 * b.term_cross + m1 * m1 * b.term_ris;
}

double pdl_penalty(const Scenario &s)
{
    Scenario lossless = s;
    lossless.loss = LossParams(1.0, s.loss.alpha, s.loss.theta);
    const double with_loss = mean_snr(s).total;
    const double without_loss = mean_snr(lossless).total;
    return 1.0 - with_loss / without_loss;
}

} // namespace rispdl
