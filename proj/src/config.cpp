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

#include "rispdl/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace rispdl {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

std::string trim(const std::string &s)
{
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Strips a trailing comment, respecting quoted strings.
std::string strip_comment(const std::string &line)
{
    bool in_string = false;
    for (std::size_t i = 0; i < line.size(); ++i)
    {
        if (line[i] == '"')
            in_string = !in_string;
        else if (line[i] == '#' && !in_string)
            return line.substr(0, i);
    }
    return line;
}

bool valid_key(const std::string &key)
{
    if (key.empty())
        return false;
    for (char ch : key)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '.')
            return false;
    return true;
}

ConfigValue parse_scalar(const std::string &token, int line)
{
    ConfigValue v;
    v.line = line;
    if (token.size() >= 2 && token.front() == '"' && token.back() == '"')
    {
        v.kind = ConfigValue::Kind::string;
        v.text = token.substr(1, token.size() - 2);
        return v;
    }
    if (token == "true" || token == "false")
    {
        v.kind = ConfigValue::Kind::boolean;
        v.boolean = token == "true";
        return v;
    }
    const char *begin = token.c_str();
    char *end = nullptr;
    const double num = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw ConfigError("line " + std::to_string(line) + ": cannot parse value '" + token +
                          "'");
    v.kind = ConfigValue::Kind::number;
    v.number = num;
    return v;
}

ConfigValue parse_value(const std::string &token, int line)
{
    if (!token.empty() && token.front() == '[')
    {
        if (token.back() != ']')
            throw ConfigError("line " + std::to_string(line) + ": unterminated array");
        ConfigValue v;
        v.kind = ConfigValue::Kind::array;
        v.line = line;
        const std::string inner = trim(token.substr(1, token.size() - 2));
        if (inner.empty())
            return v;
        std::size_t pos = 0;
        while (pos <= inner.size())
        {
            std::size_t next = inner.find(',', pos);
            const std::string elem =
                trim(next == std::string::npos ? inner.substr(pos) : inner.substr(pos, next - pos));
            if (elem.empty())
                throw ConfigError("line " + std::to_string(line) + ": empty array element");
            v.array.push_back(parse_scalar(elem, line));
            if (next == std::string::npos)
                break;
            pos = next + 1;
        }
        return v;
    }
    return parse_scalar(token, line);
}

// Tracks which keys the builders consumed so leftovers can be reported.
// Readers for nested sections share one consumed set.
class KeyReader {
  public:
    KeyReader(const ConfigMap &config, std::string prefix, std::set<std::string> &consumed)
        : config_(config), prefix_(std::move(prefix)), consumed_(consumed)
    {
    }

    bool has(const std::string &key) const { return config_.count(prefix_ + key) > 0; }

    const ConfigValue *get(const std::string &key)
    {
        auto it = config_.find(prefix_ + key);
        if (it == config_.end())
            return nullptr;
        consumed_.insert(prefix_ + key);
        return &it->second;
    }

    double number(const std::string &key, double fallback)
    {
        const ConfigValue *v = get(key);
        if (!v)
            return fallback;
        if (v->kind != ConfigValue::Kind::number)
            throw ConfigError("field '" + prefix_ + key + "': expected a number");
        return v->number;
    }

    int integer(const std::string &key, int fallback)
    {
        const double x = number(key, fallback);
        if (x != std::round(x))
            throw ConfigError("field '" + prefix_ + key + "': expected an integer");
        return static_cast<int>(x);
    }

    std::string text(const std::string &key, const std::string &fallback)
    {
        const ConfigValue *v = get(key);
        if (!v)
            return fallback;
        if (v->kind != ConfigValue::Kind::string)
            throw ConfigError("field '" + prefix_ + key + "': expected a string");
        return v->text;
    }

    void reject_both(const std::string &a, const std::string &b) const
    {
        if (has(a) && has(b))
            throw ConfigError("fields '" + prefix_ + a + "' and '" + prefix_ + b +
                              "' are mutually exclusive");
    }

    void check_consumed() const
    {
        for (const auto &[key, value] : config_)
        {
            if (key.rfind(prefix_, 0) == 0 && consumed_.count(key) == 0)
                throw ConfigError("unknown field '" + key + "' (line " +
                                  std::to_string(value.line) + ")");
        }
    }

  private:
    const ConfigMap &config_;
    std::string prefix_;
    std::set<std::string> &consumed_;
};

LinkGains gains_from_config(const ConfigMap &config, std::set<std::string> &consumed)
{
    const bool has_pathloss =
        std::any_of(config.begin(), config.end(), [](const auto &kv) {
            return kv.first.rfind("scenario.pathloss.", 0) == 0;
        });
    const bool has_gains = std::any_of(config.begin(), config.end(), [](const auto &kv) {
        return kv.first.rfind("scenario.gains.", 0) == 0;
    });
    if (has_pathloss && has_gains)
        throw ConfigError("sections [scenario.pathloss] and [scenario.gains] are mutually "
                          "exclusive");

    if (has_gains)
    {
        KeyReader keys(config, "scenario.gains.", consumed);
        auto pick = [&keys](const std::string &name) {
            keys.reject_both(name, name + "_db");
            if (keys.has(name + "_db"))
                return db_to_linear(keys.number(name + "_db", 0.0));
            if (keys.has(name))
                return keys.number(name, 0.0);
            throw ConfigError("section [scenario.gains] must set '" + name + "' or '" + name +
                              "_db'");
        };
        LinkGains g;
        g.beta_d = pick("beta_d");
        g.beta_ru = pick("beta_ru");
        g.beta_br = pick("beta_br");
        g.validate();
        return g;
    }

    KeyReader keys(config, "scenario.pathloss.", consumed);
    keys.reject_both("c0", "c0_db");
    const double c0_db = keys.has("c0") ? linear_to_db(keys.number("c0", 1.0))
                                        : keys.number("c0_db", -30.0);
    const double d = keys.number("d", 30.0);
    const double d_v = keys.number("d_v", 1.0);
    const double d_br = keys.number("d_br", 51.0);
    const double alpha_ru = keys.number("alpha_ru", 2.8);
    const double alpha_d = keys.number("alpha_d", 3.5);
    return link_gains_from_geometry(d, d_v, d_br, c0_db, alpha_ru, alpha_d);
}

double tau_bar_from_config(const ConfigMap &config, std::set<std::string> &consumed)
{
    KeyReader keys(config, "scenario.power.", consumed);
    keys.reject_both("tau_bar", "tau_bar_db");
    keys.reject_both("sigma2", "sigma2_dbm");
    const bool direct = keys.has("tau_bar") || keys.has("tau_bar_db");
    if (direct && (keys.has("es") || keys.has("sigma2") || keys.has("sigma2_dbm")))
        throw ConfigError("section [scenario.power] cannot mix tau_bar with es/sigma2");
    double tau;
    if (keys.has("tau_bar_db"))
        tau = db_to_linear(keys.number("tau_bar_db", 0.0));
    else if (keys.has("tau_bar"))
        tau = keys.number("tau_bar", 1.0);
    else
    {
        const double es = keys.number("es", 1.0);
        const double sigma2 = keys.has("sigma2") ? keys.number("sigma2", 1.0)
                                                 : db_to_linear(keys.number("sigma2_dbm", -65.0));
        if (!(sigma2 > 0.0))
            throw ConfigError("field 'scenario.power.sigma2': must be positive");
        tau = es / sigma2;
    }
    if (!(tau > 0.0))
        throw ConfigError("field 'scenario.power.tau_bar': must be positive");
    return tau;
}

} // namespace

ConfigMap parse_config_text(const std::string &text)
{
    ConfigMap map;
    std::istringstream stream(text);
    std::string raw;
    std::string section;
    int line_no = 0;
    while (std::getline(stream, raw))
    {
        ++line_no;
        const std::string line = trim(strip_comment(raw));
        if (line.empty())
            continue;
        if (line.front() == '[')
        {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(line_no) +
                                  ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (!valid_key(section))
                throw ConfigError("line " + std::to_string(line_no) + ": bad section name '" +
                                  section + "'");
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        if (!valid_key(key) || key.find('.') != std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": bad key '" + key + "'");
        const std::string full = section.empty() ? key : section + "." + key;
        if (map.count(full))
            throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + full +
                              "'");
        map[full] = parse_value(trim(line.substr(eq + 1)), line_no);
    }
    return map;
}

ConfigMap parse_config_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

Scenario scenario_from_config(const ConfigMap &config)
{
    std::set<std::string> consumed;
    KeyReader keys(config, "scenario.", consumed);

    Scenario s = default_scenario();
    s.geometry.m_y = keys.integer("m_y", s.geometry.m_y);
    s.geometry.m_z = keys.integer("m_z", s.geometry.m_z);

    if (keys.has("n") && (keys.has("n_y") || keys.has("n_z")))
        throw ConfigError("fields 'scenario.n' and 'scenario.n_y'/'scenario.n_z' are mutually "
                          "exclusive");
    if (keys.has("n"))
    {
        const int n = keys.integer("n", s.geometry.ris_elements());
        if (n < 1)
            throw ConfigError("field 'scenario.n': must be a positive integer");
        const auto [n_y, n_z] = ris_grid(n);
        s.geometry.n_y = n_y;
        s.geometry.n_z = n_z;
    }
    else
    {
        s.geometry.n_y = keys.integer("n_y", s.geometry.n_y);
        s.geometry.n_z = keys.integer("n_z", s.geometry.n_z);
    }

    s.geometry.d_b = keys.number("d_b", s.geometry.d_b);
    s.geometry.theta_d = keys.number("theta_d_deg", s.geometry.theta_d / kDegToRad) * kDegToRad;
    s.geometry.omega_d = keys.number("omega_d_deg", s.geometry.omega_d / kDegToRad) * kDegToRad;
    s.geometry.theta_a = keys.number("theta_a_deg", s.geometry.theta_a / kDegToRad) * kDegToRad;
    s.geometry.omega_a = keys.number("omega_a_deg", s.geometry.omega_a / kDegToRad) * kDegToRad;

    s.correlation.rho_d = keys.number("rho_d", s.correlation.rho_d);
    s.correlation.rho_ru = keys.number("rho_ru", s.correlation.rho_ru);
    if (!(s.correlation.rho_ru >= 0.0) || !(s.correlation.rho_ru <= 1.0))
        throw ConfigError("field 'scenario.rho_ru': must lie in [0, 1]");
    if (!(s.correlation.rho_d >= 0.0) || !(s.correlation.rho_d <= 1.0))
        throw ConfigError("field 'scenario.rho_d': must lie in [0, 1]");
    s.geometry.d_r = spacing_from_correlation(s.correlation.rho_ru);

    const double l_min = keys.number("l_min", s.loss.l_min);
    const double alpha = keys.number("alpha", s.loss.alpha);
    const double theta = keys.number("theta", s.loss.theta);
    try
    {
        s.loss = LossParams(l_min, alpha, theta);
    }
    catch (const std::invalid_argument &err)
    {
        throw ConfigError(std::string("fields 'scenario.l_min/alpha/theta': ") + err.what());
    }

    s.gains = gains_from_config(config, consumed);
    s.tau_bar = tau_bar_from_config(config, consumed);

    keys.check_consumed();
    try
    {
        s.validate();
    }
    catch (const std::invalid_argument &err)
    {
        throw ConfigError(std::string("invalid scenario: ") + err.what());
    }
    return s;
}

SweepSpec sweep_from_config(const ConfigMap &config)
{
    SweepSpec spec;
    spec.base = scenario_from_config(config);

    std::set<std::string> consumed;
    KeyReader keys(config, "sweep.", consumed);
    const std::string axis = keys.text("axis", "n");
    if (axis == "n" || axis == "N")
        spec.axis = SweepAxis::ris_elements;
    else if (axis == "alpha")
        spec.axis = SweepAxis::alpha;
    else if (axis == "l_min")
        spec.axis = SweepAxis::l_min;
    else if (axis == "rho_ru")
        spec.axis = SweepAxis::rho_ru;
    else if (axis == "theta")
        spec.axis = SweepAxis::theta;
    else
        throw ConfigError("field 'sweep.axis': unknown axis '" + axis + "'");

    const ConfigValue *values = keys.get("values");
    if (!values)
        throw ConfigError("field 'sweep.values' is required");
    if (values->kind != ConfigValue::Kind::array || values->array.empty())
        throw ConfigError("field 'sweep.values': expected a non-empty array");
    for (const ConfigValue &v : values->array)
    {
        if (v.kind != ConfigValue::Kind::number)
            throw ConfigError("field 'sweep.values': expected numbers");
        spec.values.push_back(v.number);
    }

    const double trials = keys.number("trials", static_cast<double>(spec.trials));
    if (trials < 2 || trials != std::round(trials))
        throw ConfigError("field 'sweep.trials': must be an integer >= 2");
    spec.trials = static_cast<std::uint64_t>(trials);
    const double seed = keys.number("seed", static_cast<double>(spec.seed));
    if (seed < 0 || seed != std::round(seed))
        throw ConfigError("field 'sweep.seed': must be a nonnegative integer");
    spec.seed = static_cast<std::uint64_t>(seed);

    const ConfigValue *outputs = keys.get("outputs");
    if (outputs)
    {
        if (outputs->kind != ConfigValue::Kind::array)
            throw ConfigError("field 'sweep.outputs': expected an array of strings");
        for (const ConfigValue &v : outputs->array)
        {
            if (v.kind != ConfigValue::Kind::string)
                throw ConfigError("field 'sweep.outputs': expected strings");
            if (v.text == "analytic")
                spec.outputs.push_back(OutputKind::analytic);
            else if (v.text == "simulated")
                spec.outputs.push_back(OutputKind::simulated);
            else if (v.text == "mu1_approx")
                spec.outputs.push_back(OutputKind::mu1_approx);
            else if (v.text == "penalty")
                spec.outputs.push_back(OutputKind::penalty);
            else
                throw ConfigError("field 'sweep.outputs': unknown output '" + v.text + "'");
        }
        if (spec.outputs.empty())
            throw ConfigError("field 'sweep.outputs': must not be empty");
    }
    else
    {
        spec.outputs = {OutputKind::analytic, OutputKind::simulated};
    }

    keys.check_consumed();
    try
    {
        spec.validate();
    }
    catch (const std::invalid_argument &err)
    {
        throw ConfigError(std::string("invalid sweep: ") + err.what());
    }
    return spec;
}

} // namespace rispdl
