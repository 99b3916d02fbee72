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

#ifndef RISPDL_CONFIG_HPP
#define RISPDL_CONFIG_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rispdl/channel.hpp"
#include "rispdl/sweep.hpp"

namespace rispdl {

// Configuration problem with a field-level message.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Value of one key in the key-value config file. Arrays hold numbers or
// strings only.
struct ConfigValue
{
    enum class Kind
    {
        number,
        boolean,
        string,
        array,
    };
    Kind kind = Kind::number;
    double number = 0.0;
    bool boolean = false;
    std::string text;
    std::vector<ConfigValue> array;
    int line = 0;
};

// Keys are flattened as "section.key". Supports [section] and
// [section.subsection] headers, numbers, booleans, quoted strings,
// single-line arrays and # comments.
using ConfigMap = std::map<std::string, ConfigValue>;

ConfigMap parse_config_text(const std::string &text);
ConfigMap parse_config_file(const std::string &path);

// Scenario from the [scenario] tables, field-validated. Power accepts either
// (es, sigma2 | sigma2_dbm) or a direct tau_bar | tau_bar_db; link gains
// accept either the [scenario.pathloss] deployment or direct
// [scenario.gains] values; setting both members of any such pair is an
// error, as is an unknown key.
Scenario scenario_from_config(const ConfigMap &config);

// Sweep description from [sweep] on top of the scenario.
SweepSpec sweep_from_config(const ConfigMap &config);

} // namespace rispdl

#endif
