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
//
// Serial reference vs OpenMP kernels. The two Monte Carlo paths share the
// block reduction, so their results are bit-identical; only the wall time
// should differ.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "rispdl/analytic.hpp"
#include "rispdl/montecarlo.hpp"
#include "rispdl/sweep.hpp"

namespace {

rispdl::Scenario bench_scenario(int n, double rho_ru)
{
    rispdl::Scenario s = rispdl::default_scenario();
    const auto [n_y, n_z] = rispdl::ris_grid(n);
    s.geometry.n_y = n_y;
    s.geometry.n_z = n_z;
    s.correlation.rho_ru = rho_ru;
    s.geometry.d_r = rispdl::spacing_from_correlation(rho_ru);
    return s;
}

void BM_estimate_serial(benchmark::State &state)
{
    const rispdl::Scenario s = bench_scenario(static_cast<int>(state.range(0)), 0.95);
    for (auto _ : state)
    {
        auto est = rispdl::estimate_mean_snr_serial(s, 20000, 1);
        benchmark::DoNotOptimize(est.mean);
    }
}

void BM_estimate_parallel(benchmark::State &state)
{
    const rispdl::Scenario s = bench_scenario(static_cast<int>(state.range(0)), 0.95);
    for (auto _ : state)
    {
        auto est = rispdl::estimate_mean_snr(s, 20000, 1);
        benchmark::DoNotOptimize(est.mean);
    }
}

void BM_coupling_sum(benchmark::State &state)
{
    const rispdl::Scenario s = bench_scenario(36, 0.7);
    const rispdl::SteeringVectors sv = rispdl::steering_vectors(s.geometry);
    const Eigen::MatrixXd r = rispdl::ris_correlation_for(s);
    // 0 selects the full machine
    const int threads =
        state.range(0) == 0 ? omp_get_num_procs() : static_cast<int>(state.range(0));
    const int saved = omp_get_max_threads();
    omp_set_num_threads(threads);
    for (auto _ : state)
    {
        const double f = rispdl::coupling_sum(r, sv.ris, s.loss);
        benchmark::DoNotOptimize(f);
    }
    omp_set_num_threads(saved);
}

} // namespace

BENCHMARK(BM_estimate_serial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_estimate_parallel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_coupling_sum)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
