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

#include "rispdl/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rispdl/rng.hpp"

namespace rispdl {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

std::string format_double(double x)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string timestamp_line()
{
    std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buf[64];
    std::strftime(buf, sizeof buf, "# generated %Y-%m-%dT%H:%M:%SZ\n", &tm_utc);
    return buf;
}

double parse_number(const std::string &cell)
{
    return std::strtod(cell.c_str(), nullptr);
}

std::vector<std::string> split_csv_line(const std::string &line)
{
    std::vector<std::string> cells;
    std::size_t pos = 0;
    while (true)
    {
        std::size_t next = line.find(',', pos);
        if (next == std::string::npos)
        {
            cells.push_back(line.substr(pos));
            break;
        }
        cells.push_back(line.substr(pos, next - pos));
        pos = next + 1;
    }
    return cells;
}

int kind_order(OutputKind kind)
{
    return static_cast<int>(kind);
}

OutputKind kind_from_string(const std::string &name)
{
    if (name == "analytic")
        return OutputKind::analytic;
    if (name == "simulated")
        return OutputKind::simulated;
    if (name == "mu1_approx")
        return OutputKind::mu1_approx;
    if (name == "penalty")
        return OutputKind::penalty;
    throw std::invalid_argument("unknown output kind '" + name + "'");
}

} // namespace

const char *to_string(SweepAxis axis)
{
    switch (axis)
    {
    case SweepAxis::ris_elements:
        return "n";
    case SweepAxis::alpha:
        return "alpha";
    case SweepAxis::l_min:
        return "l_min";
    case SweepAxis::rho_ru:
        return "rho_ru";
    case SweepAxis::theta:
        return "theta";
    }
    return "unknown";
}

const char *to_string(OutputKind kind)
{
    switch (kind)
    {
    case OutputKind::analytic:
        return "analytic";
    case OutputKind::simulated:
        return "simulated";
    case OutputKind::mu1_approx:
        return "mu1_approx";
    case OutputKind::penalty:
        return "penalty";
    }
    return "unknown";
}

void SweepSpec::validate() const
{
    base.validate();
    if (values.empty())
        throw std::invalid_argument("sweep: values must not be empty");
    if (outputs.empty())
        throw std::invalid_argument("sweep: outputs must not be empty");
    if (trials < 2)
        throw std::invalid_argument("sweep: trials must be at least 2");
    for (double v : values)
    {
        switch (axis)
        {
        case SweepAxis::ris_elements:
            if (v < 1 || v != std::round(v))
                throw std::invalid_argument("sweep: element counts must be positive integers");
            break;
        case SweepAxis::alpha:
            if (!(v >= 0.0))
                throw std::invalid_argument("sweep: alpha values must be nonnegative");
            break;
        case SweepAxis::l_min:
            if (!(v >= 0.0) || !(v <= 1.0))
                throw std::invalid_argument("sweep: l_min values must lie in [0, 1]");
            break;
        case SweepAxis::rho_ru:
            if (!(v >= 0.0) || !(v <= 1.0))
                throw std::invalid_argument("sweep: rho_ru values must lie in [0, 1]");
            break;
        case SweepAxis::theta:
            if (!std::isfinite(v))
                throw std::invalid_argument("sweep: theta values must be finite");
            break;
        }
    }
}

Scenario scenario_at(const SweepSpec &spec, double axis_value)
{
    Scenario s = spec.base;
    switch (spec.axis)
    {
    case SweepAxis::ris_elements:
    {
        const auto [n_y, n_z] = ris_grid(static_cast<int>(axis_value));
        s.geometry.n_y = n_y;
        s.geometry.n_z = n_z;
        break;
    }
    case SweepAxis::alpha:
        s.loss = LossParams(s.loss.l_min, axis_value, s.loss.theta);
        break;
    case SweepAxis::l_min:
        s.loss = LossParams(axis_value, s.loss.alpha, s.loss.theta);
        break;
    case SweepAxis::rho_ru:
        s.correlation.rho_ru = axis_value;
        s.geometry.d_r = spacing_from_correlation(axis_value);
        break;
    case SweepAxis::theta:
        s.loss = LossParams(s.loss.l_min, s.loss.alpha, axis_value);
        break;
    }
    return s;
}

SweepTable run_sweep(const SweepSpec &spec, const AnalyticOptions &opt)
{
    spec.validate();
    SweepTable table;
    table.axis = to_string(spec.axis);

    const bool wants_analytic =
        std::any_of(spec.outputs.begin(), spec.outputs.end(), [](OutputKind k) {
            return k == OutputKind::analytic || k == OutputKind::mu1_approx ||
                   k == OutputKind::penalty;
        });

    for (std::size_t i = 0; i < spec.values.size(); ++i)
    {
        const double v = spec.values[i];
        const Scenario s = scenario_at(spec, v);
        MeanSnrBreakdown breakdown;
        if (wants_analytic)
            breakdown = mean_snr(s, opt);
        for (OutputKind kind : spec.outputs)
        {
            SweepRow row;
            row.axis_value = v;
            row.kind = kind;
            switch (kind)
            {
            case OutputKind::analytic:
                row.value_linear = breakdown.total;
                row.route = to_string(breakdown.route);
                break;
            case OutputKind::simulated:
            {
                const std::uint64_t point_seed = mix_seed(spec.seed, i);
                const EstimateWithError est = estimate_mean_snr(s, spec.trials, point_seed);
                row.value_linear = est.mean;
                row.std_error = est.std_error;
                row.has_std_error = true;
                row.trials = est.trials;
                row.seed = est.seed;
                row.has_trials = true;
                break;
            }
            case OutputKind::mu1_approx:
                row.value_linear = mu1_scaling_approximation(s);
                row.route = to_string(breakdown.route);
                break;
            case OutputKind::penalty:
                row.value_linear = pdl_penalty(s);
                row.route = to_string(breakdown.route);
                break;
            }
            row.value_db = linear_to_db(row.value_linear);
            table.rows.push_back(row);
        }
    }

    std::stable_sort(table.rows.begin(), table.rows.end(),
                     [](const SweepRow &a, const SweepRow &b) {
                         if (a.axis_value != b.axis_value)
                             return a.axis_value < b.axis_value;
                         return kind_order(a.kind) < kind_order(b.kind);
                     });
    return table;
}

std::string table_to_csv(const SweepTable &table, bool timestamp_header)
{
    std::ostringstream out;
    if (timestamp_header)
        out << timestamp_line();
    out << "axis,axis_value,output,value_linear,value_db,std_error,trials,seed,route\n";
    for (const SweepRow &row : table.rows)
    {
        out << table.axis << ',' << format_double(row.axis_value) << ','
            << to_string(row.kind) << ',' << format_double(row.value_linear) << ','
            << format_double(row.value_db) << ',';
        if (row.has_std_error)
            out << format_double(row.std_error);
        out << ',';
        if (row.has_trials)
            out << row.trials;
        out << ',';
        if (row.has_trials)
            out << row.seed;
        out << ',' << row.route << '\n';
    }
    return out.str();
}

SweepTable table_from_csv(const std::string &csv)
{
    SweepTable table;
    std::istringstream in(csv);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line))
    {
        if (line.empty() || line.front() == '#')
            continue;
        if (!header_seen)
        {
            header_seen = true;
            continue;
        }
        const auto cells = split_csv_line(line);
        if (cells.size() != 9)
            throw std::invalid_argument("table_from_csv: expected 9 columns");
        table.axis = cells[0];
        SweepRow row;
        row.axis_value = parse_number(cells[1]);
        row.kind = kind_from_string(cells[2]);
        row.value_linear = parse_number(cells[3]);
        row.value_db = parse_number(cells[4]);
        row.has_std_error = !cells[5].empty();
        row.std_error = row.has_std_error ? parse_number(cells[5]) : 0.0;
        row.has_trials = !cells[6].empty();
        row.trials = row.has_trials ? std::strtoull(cells[6].c_str(), nullptr, 10) : 0;
        row.seed = cells[7].empty() ? 0 : std::strtoull(cells[7].c_str(), nullptr, 10);
        row.route = cells[8];
        table.rows.push_back(row);
    }
    return table;
}

std::vector<std::pair<std::string, std::string>> plot_series(const SweepTable &table)
{
    std::vector<std::pair<std::string, std::string>> series;
    for (OutputKind kind : {OutputKind::analytic, OutputKind::simulated, OutputKind::mu1_approx,
                            OutputKind::penalty})
    {
        std::ostringstream out;
        for (const SweepRow &row : table.rows)
            if (row.kind == kind)
                out << format_double(row.axis_value) << ' ' << format_double(row.value_linear)
                    << '\n';
        if (!out.str().empty())
            series.emplace_back(to_string(kind), out.str());
    }
    return series;
}

VerifySummary verify_report(const SweepSpec &spec, const AnalyticOptions &opt)
{
    const bool has_analytic = std::count(spec.outputs.begin(), spec.outputs.end(),
                                         OutputKind::analytic) > 0;
    const bool has_simulated = std::count(spec.outputs.begin(), spec.outputs.end(),
                                          OutputKind::simulated) > 0;
    if (!has_analytic || !has_simulated)
        throw std::invalid_argument(
            "verify_report: spec must request both analytic and simulated outputs");

    const SweepTable table = run_sweep(spec, opt);
    VerifySummary summary;
    summary.axis = table.axis;
    for (const SweepRow &row : table.rows)
    {
        if (row.kind != OutputKind::analytic)
            continue;
        const auto sim = std::find_if(table.rows.begin(), table.rows.end(),
                                      [&](const SweepRow &r) {
                                          return r.kind == OutputKind::simulated &&
                                                 r.axis_value == row.axis_value;
                                      });
        if (sim == table.rows.end())
            continue;
        VerifyPoint pt;
        pt.axis_value = row.axis_value;
        pt.analytic = row.value_linear;
        pt.simulated = sim->value_linear;
        pt.std_error = sim->std_error;
        pt.z = (sim->value_linear - row.value_linear) / sim->std_error;
        summary.points.push_back(pt);
        summary.max_abs_z = std::max(summary.max_abs_z, std::abs(pt.z));
    }
    summary.pass = summary.max_abs_z <= 3.0;
    return summary;
}

std::string verify_to_text(const VerifySummary &summary)
{
    std::ostringstream out;
    out << "analytic vs simulated, 3 sigma policy, axis " << summary.axis << "\n";
    for (const VerifyPoint &pt : summary.points)
    {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "  %s = %-10.6g analytic %-14.8g simulated %-14.8g se %-12.6g z %+.3f\n",
                      summary.axis.c_str(), pt.axis_value, pt.analytic, pt.simulated,
                      pt.std_error, pt.z);
        out << buf;
    }
    out << (summary.pass ? "PASS" : "FAIL") << " max |z| = " << format_double(summary.max_abs_z)
        << "\n";
    return out.str();
}

std::string verify_to_json(const VerifySummary &summary)
{
    nlohmann::json j;
    j["policy"] = "3sigma";
    j["axis"] = summary.axis;
    j["max_abs_z"] = summary.max_abs_z;
    j["pass"] = summary.pass;
    j["points"] = nlohmann::json::array();
    for (const VerifyPoint &pt : summary.points)
    {
        j["points"].push_back({{"axis_value", pt.axis_value},
                               {"analytic", pt.analytic},
                               {"simulated", pt.simulated},
                               {"std_error", pt.std_error},
                               {"z", pt.z}});
    }
    return j.dump(2) + "\n";
}

std::string estimate_to_csv(const EstimateWithError &estimate, bool timestamp_header)
{
    std::ostringstream out;
    if (timestamp_header)
        out << timestamp_line();
    out << "mean,mean_db,std_error,trials,seed\n";
    out << format_double(estimate.mean) << ',' << format_double(linear_to_db(estimate.mean))
        << ',' << format_double(estimate.std_error) << ',' << estimate.trials << ','
        << estimate.seed << '\n';
    return out.str();
}

Scenario default_scenario()
{
    Scenario s;
    s.geometry.m_y = 4;
    s.geometry.m_z = 4;
    s.geometry.n_y = 4;
    s.geometry.n_z = 4;
    s.geometry.d_b = 0.5;
    s.geometry.theta_d = 77.1 * kDegToRad;
    s.geometry.omega_d = 19.95 * kDegToRad;
    s.geometry.theta_a = 109.9 * kDegToRad;
    s.geometry.omega_a = -29.9 * kDegToRad;
    s.correlation.rho_d = 0.7;
    s.correlation.rho_ru = 0.95;
    s.geometry.d_r = spacing_from_correlation(s.correlation.rho_ru);
    s.gains = link_gains_from_geometry(30.0, 1.0, 51.0, -30.0, 2.8, 3.5);
    s.loss = LossParams(0.5, 1.2, 0.2);
    // Unit transmit power over -65 dBm noise.
    s.tau_bar = 1.0 / db_to_linear(-65.0);
    return s;
}

std::vector<NamedSweep> fig3_sweeps(std::uint64_t trials, std::uint64_t seed)
{
    std::vector<NamedSweep> sweeps;
    int index = 0;
    for (double rho_ru : {0.0, 0.95, 1.0})
    {
        SweepSpec spec;
        spec.base = default_scenario();
        spec.base.correlation.rho_ru = rho_ru;
        spec.base.geometry.d_r = spacing_from_correlation(rho_ru);
        spec.axis = SweepAxis::ris_elements;
        spec.values = {4, 16, 36, 64, 100};
        spec.trials = trials;
        spec.seed = mix_seed(seed, 1000 + index++);
        spec.outputs = {OutputKind::analytic, OutputKind::simulated, OutputKind::mu1_approx};
        std::ostringstream name;
        name << "fig3_rho_ru_" << rho_ru;
        sweeps.push_back({name.str(), spec});
    }
    return sweeps;
}

std::vector<NamedSweep> fig4_sweeps(std::uint64_t trials, std::uint64_t seed)
{
    std::vector<NamedSweep> sweeps;
    int index = 0;
    for (int n : {16, 64})
        for (double l_min : {0.1, 0.5, 0.95})
            for (double theta : {0.2, 0.42})
            {
                SweepSpec spec;
                spec.base = default_scenario();
                spec.base.correlation.rho_d = 0.7;
                spec.base.correlation.rho_ru = 0.7;
                spec.base.geometry.d_r = spacing_from_correlation(0.7);
                const auto [n_y, n_z] = ris_grid(n);
                spec.base.geometry.n_y = n_y;
                spec.base.geometry.n_z = n_z;
                spec.base.loss = LossParams(l_min, 1.2, theta);
                spec.axis = SweepAxis::alpha;
                spec.values = {0.0, 0.2, 0.4, 0.6, 0.8, 1.0, 1.2, 1.4, 1.6,
                               1.8, 2.0, 2.2, 2.4, 2.6, 2.8, 3.0};
                spec.trials = trials;
                spec.seed = mix_seed(seed, 2000 + index++);
                spec.outputs = {OutputKind::analytic, OutputKind::simulated};
                std::ostringstream name;
                name << "fig4_n_" << n << "_lmin_" << l_min << "_theta_" << theta;
                sweeps.push_back({name.str(), spec});
            }
    return sweeps;
}

} // namespace rispdl
