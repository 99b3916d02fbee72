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

#include "rispdl/montecarlo.hpp"

#include <cmath>
#include <exception>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "rispdl/rng.hpp"

namespace rispdl {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Trials per reduction block. The block layout is part of the estimator
// definition: blocks are accumulated independently and merged in block
// order, which makes the result independent of the thread partition.
constexpr std::uint64_t kTrialBlock = 4096;

double reduce_to_period(double x)
{
    double y = std::fmod(x, kTwoPi);
    if (y < 0.0)
        y += kTwoPi;
    return y;
}

struct RunningMoments
{
    std::uint64_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void push(double x)
    {
        ++count;
        const double delta = x - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (x - mean);
    }

    void merge(const RunningMoments &other)
    {
        if (other.count == 0)
            return;
        if (count == 0)
        {
            *this = other;
            return;
        }
        const double n1 = static_cast<double>(count);
        const double n2 = static_cast<double>(other.count);
        const double delta = other.mean - mean;
        const double n = n1 + n2;
        mean += delta * n2 / n;
        m2 += other.m2 + delta * delta * n1 * n2 / n;
        count += other.count;
    }
};

EstimateWithError finish(const RunningMoments &acc, std::uint64_t trials, std::uint64_t seed)
{
    EstimateWithError e;
    e.mean = acc.mean;
    e.std_error = std::sqrt(acc.m2 / (static_cast<double>(acc.count) - 1.0) /
                            static_cast<double>(acc.count));
    e.trials = trials;
    e.seed = seed;
    return e;
}

// Blocked estimator shared by the SNR and pair-loss estimators. The trial
// functor maps (engine) -> one sample; trial t always uses the engine
// derived from (seed, t).
template <typename TrialFn>
EstimateWithError block_estimate(std::uint64_t trials, std::uint64_t seed, bool parallel,
                                 TrialFn &&trial_fn)
{
    if (trials < 2)
        throw std::invalid_argument("estimate: at least two trials required");
    const std::uint64_t nblocks = (trials + kTrialBlock - 1) / kTrialBlock;
    std::vector<RunningMoments> blocks(nblocks);
    std::exception_ptr failure = nullptr;

    if (parallel)
    {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nblocks); ++b)
        {
            try
            {
                const std::uint64_t begin = static_cast<std::uint64_t>(b) * kTrialBlock;
                const std::uint64_t end = std::min(begin + kTrialBlock, trials);
                for (std::uint64_t t = begin; t < end; ++t)
                {
                    std::mt19937_64 engine = make_trial_engine(seed, t);
                    blocks[b].push(trial_fn(engine));
                }
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
    }
    else
    {
        for (std::uint64_t b = 0; b < nblocks; ++b)
        {
            const std::uint64_t begin = b * kTrialBlock;
            const std::uint64_t end = std::min(begin + kTrialBlock, trials);
            for (std::uint64_t t = begin; t < end; ++t)
            {
                std::mt19937_64 engine = make_trial_engine(seed, t);
                blocks[b].push(trial_fn(engine));
            }
        }
    }

    RunningMoments acc;
    for (const RunningMoments &blk : blocks)
        acc.merge(blk);
    return finish(acc, trials, seed);
}

struct SimulationContext
{
    SteeringVectors sv;
    Eigen::MatrixXd sqrt_rd;
    Eigen::MatrixXd sqrt_rru;
};

SimulationContext make_context(const Scenario &s)
{
    s.validate();
    SimulationContext ctx;
    ctx.sv = steering_vectors(s.geometry);
    ctx.sqrt_rd = psd_sqrt(bs_correlation_matrix(s.geometry.m_y, s.geometry.m_z,
                                                 s.correlation.rho_d, s.geometry.d_b));
    ctx.sqrt_rru = psd_sqrt(ris_correlation_for(s));
    return ctx;
}

EstimateWithError estimate_impl(const Scenario &s, std::uint64_t trials, std::uint64_t seed,
                                bool parallel)
{
    const SimulationContext ctx = make_context(s);
    return block_estimate(trials, seed, parallel, [&](std::mt19937_64 &engine) {
        const ChannelSample cs = sample_channels(s, ctx.sqrt_rd, ctx.sqrt_rru, engine);
        return instantaneous_snr(cs, ctx.sv, s.gains, s.loss, s.tau_bar);
    });
}

} // namespace

Eigen::VectorXd optimal_ris_phases(const Eigen::VectorXcd &h_d, const Eigen::VectorXcd &h_ru,
                                   const Eigen::VectorXcd &a_b, const Eigen::VectorXcd &a_r)
{
    if (h_d.size() != a_b.size() || h_ru.size() != a_r.size())
        throw std::invalid_argument("optimal_ris_phases: dimension mismatch");
    const std::complex<double> proj = a_b.dot(h_d); // a_b^H h_d
    if (std::abs(proj) < 1e-300)
        throw DegenerateProjectionError("optimal_ris_phases: a_b^H h_d is numerically zero");
    const double base = std::arg(proj);
    Eigen::VectorXd phases(h_ru.size());
    for (Eigen::Index r = 0; r < h_ru.size(); ++r)
        phases[r] = reduce_to_period(base + std::arg(a_r[r]) - std::arg(h_ru[r]));
    return phases;
}

double instantaneous_snr(const ChannelSample &sample, const SteeringVectors &sv,
                         const LinkGains &gains, const LossParams &p, double tau_bar)
{
    if (sample.h_d.size() != sv.bs.size() || sample.h_ru.size() != sv.ris.size())
        throw std::invalid_argument("instantaneous_snr: dimension mismatch");
    const Eigen::VectorXd phases = optimal_ris_phases(sample.h_d, sample.h_ru, sv.bs, sv.ris);
    const double proj = std::abs(sv.bs.dot(sample.h_d));
    double weighted_sum = 0.0;
    for (Eigen::Index r = 0; r < sample.h_ru.size(); ++r)
        weighted_sum += std::abs(sample.h_ru[r]) * loss(phases[r], p);
    const double m = static_cast<double>(sv.bs.size());
    return tau_bar * (sample.h_d.squaredNorm() +
                      2.0 * std::sqrt(gains.beta_br) * proj * weighted_sum +
                      gains.beta_br * m * weighted_sum * weighted_sum);
}

EstimateWithError estimate_mean_snr(const Scenario &s, std::uint64_t trials,
                                    std::uint64_t seed)
{
    return estimate_impl(s, trials, seed, true);
}

EstimateWithError estimate_mean_snr_serial(const Scenario &s, std::uint64_t trials,
                                           std::uint64_t seed)
{
    return estimate_impl(s, trials, seed, false);
}

EstimateWithError estimate_pair_loss_moment(std::complex<double> rho, double angle_r,
                                            double angle_s, const LossParams &p,
                                            std::uint64_t draws, std::uint64_t seed)
{
    const double r = std::abs(rho);
    if (!(r <= 1.0))
        throw std::domain_error("estimate_pair_loss_moment: |rho| must be <= 1");
    const double residual = std::sqrt(std::max(0.0, 1.0 - r * r));
    const std::complex<double> cross = std::conj(rho);
    return block_estimate(draws, seed, true, [&](std::mt19937_64 &engine) {
        const Eigen::VectorXcd u = circular_gaussian(engine, 3);
        const std::complex<double> h_r = u[0];
        const std::complex<double> h_s = cross * u[0] + residual * u[1];
        // u[2] plays the common projection phase of the full pipeline.
        const double base = std::arg(u[2]);
        const double phi_r = reduce_to_period(base + angle_r - std::arg(h_r));
        const double phi_s = reduce_to_period(base + angle_s - std::arg(h_s));
        return loss(phi_r, p) * loss(phi_s, p);
    });
}

} // namespace rispdl
