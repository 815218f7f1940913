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

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "jcas/config.hpp"
#include "jcas/spectrum.hpp"

namespace jcas::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain_error = 1;
inline constexpr int exit_config_error = 2;

/// Prints the effective configuration and the full link budget ledger,
/// one `name = value` per line.
void cmd_simulate(const config::Config& cfg, std::ostream& out);

/// Runs the sweep, writes the CSV and prints a one-line summary.
void cmd_sweep(const config::Config& cfg, const std::string& out_path, std::ostream& out,
               unsigned threads = 0);

/// `query` is a frequency in GHz or a band letter. Throws domain_error for an
/// unknown letter or a non-positive frequency.
void cmd_bands(std::string_view query, double bandwidth_mhz, const spectrum::Registry& registry,
               std::ostream& out);

/// Full command-line entry point. Errors print a single line starting with
/// `error[config]:` or `error[domain]:` to `err` and map to exit codes 2 and 1.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace jcas::cli
