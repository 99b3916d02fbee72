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

#ifndef RISPDL_SWEEP_HPP
#define RISPDL_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rispdl/analytic.hpp"
#include "rispdl/channel.hpp"
#include "rispdl/montecarlo.hpp"

namespace rispdl {

enum class SweepAxis
{
    ris_elements,
    alpha,
    l_min,
    rho_ru,
    theta,
};

enum class OutputKind
{
    analytic,
    simulated,
    mu1_approx,
    penalty,
};

const char *to_string(SweepAxis axis);
const char *to_string(OutputKind kind);

struct SweepSpec
{
    Scenario base;
    SweepAxis axis = SweepAxis::ris_elements;
    std::vector<double> values;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    std::vector<OutputKind> outputs;

    void validate() const; // throws std::invalid_argument
};

// The base scenario with the axis value applied. Element counts refactor the
// RIS grid near-square; correlation changes recompute the element spacing.
Scenario scenario_at(const SweepSpec &spec, double axis_value);

struct SweepRow
{
    double axis_value = 0.0;
    OutputKind kind = OutputKind::analytic;
    double value_linear = 0.0;
    double value_db = 0.0;
    double std_error = 0.0;
    bool has_std_error = false;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    bool has_trials = false;
    std::string route;
};

struct SweepTable
{
    std::string axis;
    std::vector<SweepRow> rows;
};

// One row per (axis value, requested output), ordered by axis value then
// output kind regardless of evaluation order. Simulated rows carry the
// derived per-point seed actually used.
SweepTable run_sweep(const SweepSpec &spec, const AnalyticOptions &opt = {});

// CSV with a header row; the leading timestamp comment is only written on
// request so that equal runs produce byte-identical files.
std::string table_to_csv(const SweepTable &table, bool timestamp_header);
SweepTable table_from_csv(const std::string &csv);

// Two-column x/y series per output kind, for external plotting tools.
std::vector<std::pair<std::string, std::string>> plot_series(const SweepTable &table);

struct VerifyPoint
{
    double axis_value = 0.0;
    double analytic = 0.0;
    double simulated = 0.0;
    double std_error = 0.0;
    double z = 0.0;
};

struct VerifySummary
{
    std::string axis;
    std::vector<VerifyPoint> points;
    double max_abs_z = 0.0;
    bool pass = false;
};

// Analytic-vs-simulation comparison under the 3 sigma policy.
VerifySummary verify_report(const SweepSpec &spec, const AnalyticOptions &opt = {});
std::string verify_to_text(const VerifySummary &summary);
std::string verify_to_json(const VerifySummary &summary);

std::string estimate_to_csv(const EstimateWithError &estimate, bool timestamp_header);

// Deployment defaults shared by the presets: 4x4 BS and RIS grids, the fixed
// angle sample, link gains from the 51 m / 30 m / 1 m geometry, unit
// transmit power over -65 dBm noise.
Scenario default_scenario();

struct NamedSweep
{
    std::string name;
    SweepSpec spec;
};

// Mean SNR against RIS size for nearest-neighbour RIS correlations
// 0, 0.95 and 1.
std::vector<NamedSweep> fig3_sweeps(std::uint64_t trials, std::uint64_t seed);

// Mean SNR against loss steepness for three loss floors, two RIS sizes and
// two phase offsets.
std::vector<NamedSweep> fig4_sweeps(std::uint64_t trials, std::uint64_t seed);

} // namespace rispdl

#endif
