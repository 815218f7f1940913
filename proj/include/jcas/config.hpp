// SPDX-License-Identifier: Apache-2.0
//
// jcas-sim: link-level simulator for bistatic JCAS satellite downlinks
// Copyright (C) 2026 The jcas-sim Authors
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

#pragma once

#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "jcas/sweep.hpp"

namespace jcas::config {

enum class Source { default_value, file, override_value };

std::string_view to_string(Source s);

/// A parsed configuration: the sweep spec (whose `base` is the scenario)
/// plus where each key's value came from.
struct Config {
    sweep::SweepSpec spec;
    std::map<std::string, Source> sources;
};

/// Every accepted key, in canonical order.
const std::vector<std::string>& known_keys();

/// Parses flat `key = value` text. `#` starts a comment; blank lines are
/// ignored. Unknown keys, repeated keys and malformed or out-of-range values
/// raise config_error with the 1-based line number. Keys left out keep their
/// defaults.
Config parse(std::istream& in);
Config parse(std::string_view text);

/// Applies one `key=value` override on top of `cfg`. Errors carry line 0 and
/// name the override.
void apply_override(Config& cfg, std::string_view assignment);

/// Sets one key from its textual value; `line` is only used for messages.
void set_value(Config& cfg, std::string_view key, std::string_view value, Source source,
               std::size_t line);

/// Textual value of every key under `cfg`, in known_keys() order.
std::vector<std::pair<std::string, std::string>> effective_values(const Config& cfg);

} // namespace jcas::config
