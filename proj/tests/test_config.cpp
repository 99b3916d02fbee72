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
#include <numbers>
#include <string>

#include "rispdl/config.hpp"
#include "rispdl/sweep.hpp"

using namespace rispdl;

namespace {

bool error_mentions(const std::string &needle, const std::function<void()> &fn)
{
    try
    {
        fn();
    }
    catch (const ConfigError &err)
    {
        return std::string(err.what()).find(needle) != std::string::npos;
    }
    return false;
}

} // namespace

TEST_CASE("parser handles sections, scalars, arrays and comments")
{
    const ConfigMap map = parse_config_text("top = 1.5\n"
                                            "# a comment line\n"
                                            "[scenario]\n"
                                            "n = 16  # trailing comment\n"
                                            "label = \"hello # not a comment\"\n"
                                            "flag = true\n"
                                            "[sweep]\n"
                                            "values = [1, 2.5, 3]\n");
    CHECK(map.at("top").number == 1.5);
    CHECK(map.at("scenario.n").number == 16.0);
    CHECK(map.at("scenario.label").text == "hello # not a comment");
    CHECK(map.at("scenario.flag").boolean == true);
    const auto &values = map.at("sweep.values").array;
    REQUIRE(values.size() == 3);
    CHECK(values[1].number == 2.5);
}

TEST_CASE("parser rejects malformed input with line numbers")
{
    CHECK(error_mentions("line 1", [] { parse_config_text("not a key value"); }));
    CHECK(error_mentions("line 2", [] { parse_config_text("a = 1\n[unterminated\n"); }));
    CHECK(error_mentions("duplicate", [] { parse_config_text("a = 1\na = 2\n"); }));
    CHECK(error_mentions("array", [] { parse_config_text("a = [1, 2\n"); }));
    CHECK(error_mentions("cannot parse", [] { parse_config_text("a = 12abc\n"); }));
}

TEST_CASE("empty scenario section produces the deployment defaults")
{
    const Scenario s = scenario_from_config(parse_config_text(""));
    const Scenario d = default_scenario();
    CHECK(s.geometry.bs_elements() == 16);
    CHECK(s.geometry.ris_elements() == 16);
    CHECK(s.correlation.rho_d == d.correlation.rho_d);
    CHECK(s.correlation.rho_ru == d.correlation.rho_ru);
    CHECK(s.tau_bar == doctest::Approx(std::pow(10.0, 6.5)).epsilon(1e-12));
    CHECK(linear_to_db(s.gains.beta_d) == doctest::Approx(-81.7077).epsilon(1e-5));
    CHECK(s.loss.l_min == 0.5);
    CHECK(s.loss.alpha == 1.2);
}

TEST_CASE("scenario fields override the defaults")
{
    const Scenario s = scenario_from_config(parse_config_text("[scenario]\n"
                                                              "n = 64\n"
                                                              "rho_ru = 0.7\n"
                                                              "l_min = 0.2\n"
                                                              "alpha = 1.6\n"
                                                              "theta = 0.42\n"
                                                              "[scenario.power]\n"
                                                              "tau_bar_db = 60\n"));
    CHECK(s.geometry.n_y == 8);
    CHECK(s.geometry.n_z == 8);
    CHECK(s.correlation.rho_ru == 0.7);
    CHECK(normalized_sinc(2.0 * s.geometry.d_r) == doctest::Approx(0.7).epsilon(1e-9));
    CHECK(s.loss.l_min == 0.2);
    CHECK(s.tau_bar == doctest::Approx(1e6).epsilon(1e-12));
}

TEST_CASE("direct gains section")
{
    const Scenario s = scenario_from_config(parse_config_text("[scenario.gains]\n"
                                                              "beta_d_db = -80\n"
                                                              "beta_ru = 1e-7\n"
                                                              "beta_br_db = -34\n"));
    CHECK(linear_to_db(s.gains.beta_d) == doctest::Approx(-80.0).epsilon(1e-12));
    CHECK(s.gains.beta_ru == doctest::Approx(1e-7).epsilon(1e-12));
    CHECK(linear_to_db(s.gains.beta_br) == doctest::Approx(-34.0).epsilon(1e-12));
}

TEST_CASE("mutually exclusive fields are rejected")
{
    CHECK(error_mentions("mutually exclusive", [] {
        scenario_from_config(parse_config_text("[scenario.power]\ntau_bar = 10\ntau_bar_db = 10\n"));
    }));
    CHECK(error_mentions("cannot mix", [] {
        scenario_from_config(parse_config_text("[scenario.power]\ntau_bar = 10\nes = 1\n"));
    }));
    CHECK(error_mentions("mutually exclusive", [] {
        scenario_from_config(
            parse_config_text("[scenario.power]\nsigma2 = 1e-7\nsigma2_dbm = -65\n"));
    }));
    CHECK(error_mentions("mutually exclusive", [] {
        scenario_from_config(
            parse_config_text("[scenario.pathloss]\nd = 30\n[scenario.gains]\nbeta_d = 1\n"
                              "beta_ru = 1\nbeta_br = 1\n"));
    }));
    CHECK(error_mentions("mutually exclusive", [] {
        scenario_from_config(parse_config_text("[scenario]\nn = 16\nn_y = 4\n"));
    }));
    CHECK(error_mentions("beta_d", [] {
        scenario_from_config(
            parse_config_text("[scenario.gains]\nbeta_d = 1\nbeta_d_db = 0\n"
                              "beta_ru = 1\nbeta_br = 1\n"));
    }));
}

TEST_CASE("unknown keys are reported by name")
{
    CHECK(error_mentions("scenario.typo_field", [] {
        scenario_from_config(parse_config_text("[scenario]\ntypo_field = 3\n"));
    }));
    CHECK(error_mentions("sweep.bogus", [] {
        sweep_from_config(parse_config_text("[sweep]\nvalues = [4]\nbogus = 1\n"));
    }));
}

TEST_CASE("field range validation")
{
    CHECK(error_mentions("rho_ru", [] {
        scenario_from_config(parse_config_text("[scenario]\nrho_ru = 1.5\n"));
    }));
    CHECK(error_mentions("l_min", [] {
        scenario_from_config(parse_config_text("[scenario]\nl_min = -0.2\n"));
    }));
    CHECK(error_mentions("scenario.n", [] {
        scenario_from_config(parse_config_text("[scenario]\nn = 0\n"));
    }));
    CHECK(error_mentions("expected an integer", [] {
        scenario_from_config(parse_config_text("[scenario]\nm_y = 2.5\n"));
    }));
}

TEST_CASE("sweep section parsing")
{
    const SweepSpec spec = sweep_from_config(parse_config_text("[sweep]\n"
                                                               "axis = \"alpha\"\n"
                                                               "values = [0, 0.4, 1.2]\n"
                                                               "trials = 5000\n"
                                                               "seed = 99\n"
                                                               "outputs = [\"analytic\"]\n"));
    CHECK(spec.axis == SweepAxis::alpha);
    REQUIRE(spec.values.size() == 3);
    CHECK(spec.values[2] == 1.2);
    CHECK(spec.trials == 5000);
    CHECK(spec.seed == 99);
    REQUIRE(spec.outputs.size() == 1);
    CHECK(spec.outputs[0] == OutputKind::analytic);

    // defaults: both outputs, n axis
    const SweepSpec def = sweep_from_config(parse_config_text("[sweep]\nvalues = [4, 16]\n"));
    CHECK(def.axis == SweepAxis::ris_elements);
    CHECK(def.outputs.size() == 2);
}

TEST_CASE("sweep validation failures")
{
    CHECK(error_mentions("sweep.values", [] { sweep_from_config(parse_config_text("")); }));
    CHECK(error_mentions("non-empty", [] {
        sweep_from_config(parse_config_text("[sweep]\nvalues = []\n"));
    }));
    CHECK(error_mentions("must not be empty", [] {
        sweep_from_config(parse_config_text("[sweep]\nvalues = [4]\noutputs = []\n"));
    }));
    CHECK(error_mentions("unknown output", [] {
        sweep_from_config(parse_config_text("[sweep]\nvalues = [4]\noutputs = [\"bad\"]\n"));
    }));
    CHECK(error_mentions("unknown axis", [] {
        sweep_from_config(parse_config_text("[sweep]\naxis = \"m\"\nvalues = [4]\n"));
    }));
    CHECK(error_mentions("trials", [] {
        sweep_from_config(parse_config_text("[sweep]\nvalues = [4]\ntrials = 1\n"));
    }));
    CHECK(error_mentions("positive integers", [] {
        sweep_from_config(parse_config_text("[sweep]\naxis = \"n\"\nvalues = [4.5]\n"));
    }));
}
