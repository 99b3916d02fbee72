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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rispdl/analytic.hpp"
#include "rispdl/config.hpp"
#include "rispdl/montecarlo.hpp"
#include "rispdl/quadrature.hpp"
#include "rispdl/specfun.hpp"
#include "rispdl/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitVerification = 2;
constexpr int kExitNumerical = 3;

void write_file(const std::string &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw rispdl::ConfigError("cannot write to '" + path + "'");
    out << content;
}

void print_breakdown(const rispdl::MeanSnrBreakdown &b)
{
    std::printf("mean SNR breakdown (linear / dB)\n");
    std::printf("  direct   %.10g / %.4f dB\n", b.term_direct,
                rispdl::linear_to_db(b.term_direct));
    std::printf("  cross    %.10g / %.4f dB\n", b.term_cross,
                rispdl::linear_to_db(b.term_cross));
    std::printf("  ris      %.10g / %.4f dB\n", b.term_ris, rispdl::linear_to_db(b.term_ris));
    std::printf("  F        %.10g  (route: %s)\n", b.coupling_f, rispdl::to_string(b.route));
    std::printf("  total    %.10g / %.4f dB\n", b.total, rispdl::linear_to_db(b.total));
}

void emit_plot_data(const rispdl::SweepTable &table, const std::string &stem)
{
    for (const auto &[kind, content] : rispdl::plot_series(table))
        write_file(stem + "." + kind + ".dat", content);
}

int run(int argc, char **argv)
{
    CLI::App app{"Mean-SNR analysis and Monte Carlo simulation of a RIS-aided SIMO uplink "
                 "with phase dependent reflection loss"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string json_path;
    std::string preset_name;
    std::string out_dir = ".";
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    bool no_timestamp = false;
    bool plot_data = false;
    bool json_to_stdout = false;

    CLI::App *cmd_mean = app.add_subcommand("mean-snr", "Closed-form mean SNR of a scenario");
    cmd_mean->add_option("config", config_path, "scenario config file")->required();
    cmd_mean->add_flag("--json", json_to_stdout, "emit the breakdown as JSON");

    CLI::App *cmd_sim = app.add_subcommand("simulate", "Monte Carlo mean-SNR estimate");
    cmd_sim->add_option("config", config_path, "scenario config file")->required();
    cmd_sim->add_option("--trials", trials, "number of trials")->default_val(100000);
    cmd_sim->add_option("--seed", seed, "base seed")->default_val(1);
    cmd_sim->add_option("--out", out_path, "write the estimate as CSV");
    cmd_sim->add_flag("--no-timestamp", no_timestamp, "suppress the timestamp header line");

    CLI::App *cmd_sweep = app.add_subcommand("sweep", "Run the sweep described by the config");
    cmd_sweep->add_option("config", config_path, "sweep config file")->required();
    cmd_sweep->add_option("--out", out_path, "write the result table as CSV");
    cmd_sweep->add_option("--json-summary", json_path, "also write a verification JSON summary");
    cmd_sweep->add_flag("--no-timestamp", no_timestamp, "suppress the timestamp header line");
    cmd_sweep->add_flag("--plot-data", plot_data, "emit x/y series files next to the CSV");

    CLI::App *cmd_preset = app.add_subcommand("preset", "Run a named sweep preset");
    cmd_preset->add_option("name", preset_name, "fig3 or fig4")->required();
    cmd_preset->add_option("--out", out_dir, "output directory")->default_val(".");
    cmd_preset->add_option("--trials", trials, "trials per simulated point")
        ->default_val(100000);
    cmd_preset->add_option("--seed", seed, "base seed")->default_val(1);
    cmd_preset->add_flag("--no-timestamp", no_timestamp, "suppress the timestamp header line");
    cmd_preset->add_flag("--plot-data", plot_data, "emit x/y series files next to each CSV");

    CLI::App *cmd_verify =
        app.add_subcommand("verify", "Analytic vs simulated comparison at 3 sigma");
    cmd_verify->add_option("config", config_path, "sweep config file")->required();
    cmd_verify->add_option("--json", json_path, "write the JSON summary to this file");

    CLI11_PARSE(app, argc, argv);

    if (cmd_mean->parsed())
    {
        const rispdl::Scenario s =
            rispdl::scenario_from_config(rispdl::parse_config_file(config_path));
        const rispdl::MeanSnrBreakdown b = rispdl::mean_snr(s);
        if (json_to_stdout)
        {
            nlohmann::json j{{"term_direct", b.term_direct},
                             {"term_cross", b.term_cross},
                             {"term_ris", b.term_ris},
                             {"coupling_f", b.coupling_f},
                             {"total", b.total},
                             {"total_db", rispdl::linear_to_db(b.total)},
                             {"route", rispdl::to_string(b.route)}};
            std::cout << j.dump(2) << "\n";
        }
        else
        {
            print_breakdown(b);
        }
        return kExitOk;
    }

    if (cmd_sim->parsed())
    {
        const rispdl::Scenario s =
            rispdl::scenario_from_config(rispdl::parse_config_file(config_path));
        const rispdl::EstimateWithError est = rispdl::estimate_mean_snr(s, trials, seed);
        std::printf("mean %.10g / %.4f dB, std error %.4g, trials %llu, seed %llu\n", est.mean,
                    rispdl::linear_to_db(est.mean), est.std_error,
                    static_cast<unsigned long long>(est.trials),
                    static_cast<unsigned long long>(est.seed));
        if (!out_path.empty())
            write_file(out_path, rispdl::estimate_to_csv(est, !no_timestamp));
        return kExitOk;
    }

    if (cmd_sweep->parsed())
    {
        const rispdl::SweepSpec spec =
            rispdl::sweep_from_config(rispdl::parse_config_file(config_path));
        const rispdl::SweepTable table = rispdl::run_sweep(spec);
        const std::string csv = rispdl::table_to_csv(table, !no_timestamp);
        if (out_path.empty())
            std::cout << csv;
        else
            write_file(out_path, csv);
        if (plot_data)
            emit_plot_data(table, out_path.empty() ? "sweep" : out_path);
        if (!json_path.empty())
        {
            const rispdl::VerifySummary summary = rispdl::verify_report(spec);
            write_file(json_path, rispdl::verify_to_json(summary));
        }
        return kExitOk;
    }

    if (cmd_preset->parsed())
    {
        std::vector<rispdl::NamedSweep> sweeps;
        if (preset_name == "fig3")
            sweeps = rispdl::fig3_sweeps(trials, seed);
        else if (preset_name == "fig4")
            sweeps = rispdl::fig4_sweeps(trials, seed);
        else
            throw rispdl::ConfigError("unknown preset '" + preset_name + "'");
        std::filesystem::create_directories(out_dir);
        for (const rispdl::NamedSweep &named : sweeps)
        {
            const rispdl::SweepTable table = rispdl::run_sweep(named.spec);
            const std::string path = out_dir + "/" + named.name + ".csv";
            write_file(path, rispdl::table_to_csv(table, !no_timestamp));
            if (plot_data)
                emit_plot_data(table, out_dir + "/" + named.name);
            std::printf("wrote %s\n", path.c_str());
        }
        return kExitOk;
    }

    if (cmd_verify->parsed())
    {
        const rispdl::SweepSpec spec =
            rispdl::sweep_from_config(rispdl::parse_config_file(config_path));
        const rispdl::VerifySummary summary = rispdl::verify_report(spec);
        std::cout << rispdl::verify_to_text(summary);
        if (!json_path.empty())
            write_file(json_path, rispdl::verify_to_json(summary));
        return summary.pass ? kExitOk : kExitVerification;
    }

    return kExitValidation;
}

} // namespace

int main(int argc, char **argv)
{
    try
    {
        return run(argc, argv);
    }
    catch (const rispdl::ToleranceError &err)
    {
        std::cerr << "numerical tolerance failure: " << err.what() << "\n";
        return kExitNumerical;
    }
    catch (const rispdl::ConvergenceError &err)
    {
        std::cerr << "numerical convergence failure: " << err.what() << "\n";
        return kExitNumerical;
    }
    catch (const rispdl::ConfigError &err)
    {
        std::cerr << "config error: " << err.what() << "\n";
        return kExitValidation;
    }
    catch (const std::exception &err)
    {
        std::cerr << "error: " << err.what() << "\n";
        return kExitValidation;
    }
}
