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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "jcas/linkbudget.hpp"
#include "jcas/performance.hpp"

namespace jcas::sweep {

/// Which radar geometry fills the sensing columns. `comm` leaves them blank;
/// `all` reports the bistatic figures (the monostatic SNR is always kept in
/// LinkResult).
enum class Mode { comm, radar_bistatic, radar_monostatic, all };

std::string_view to_string(Mode m);
std::optional<Mode> mode_from_string(std::string_view s);

struct PointResult {
    linkbudget::LinkResult link;
    performance::PerformanceResult perf;

    friend bool operator==(const PointResult&, const PointResult&) = default;
};

/// geometry -> waveform -> link budget -> performance for one scenario.
/// Component errors are rethrown as domain_error labelled with the
/// offending parameter.
PointResult run_point(const linkbudget::Scenario& s, Mode mode = Mode::all);

struct SweepSpec {
    linkbudget::Scenario base;
    std::vector<double> power_axis_dbw{1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::vector<std::int64_t> element_axis{1, 2, 4, 8, 16};
    Mode mode = Mode::all;

    friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

struct ResultRow {
    double tx_power_dbw = 0.0;
    std::int64_t n_elements = 0;
    Mode mode = Mode::all;
    linkbudget::LinkResult link;
    performance::PerformanceResult perf;

    friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

struct ResultTable {
    /// Sorted by (n_elements, tx_power_dbw).
    std::vector<ResultRow> rows;
    std::string fingerprint;
    std::string constants_version;

    friend bool operator==(const ResultTable&, const ResultTable&) = default;
};

/// Canonical text of every scenario field and pinned constant. Two inputs
/// share a fingerprint exactly when their canonical texts match.
std::string canonical_text(const linkbudget::Scenario& s);
std::string canonical_text(const SweepSpec& spec);

/// 64-bit FNV-1a of the canonical text, as 16 hex digits.
std::string fingerprint(const linkbudget::Scenario& s);
std::string fingerprint(const SweepSpec& spec);

struct RunOptions {
    /// Worker threads for grid evaluation; 0 picks hardware concurrency,
    /// 1 evaluates inline.
    unsigned threads = 1;
};

/// Evaluates every (power, elements) grid point. Errors carry the grid
/// coordinates of the failing point.
ResultTable run_sweep(const SweepSpec& spec, RunOptions options = {});

/// Column order of the CSV output.
inline constexpr std::string_view csv_header =
    "n_elements,tx_power_dbw,comm_snr_db,shannon_rate_bps,qpsk_capped_rate_bps,"
    "radar_snr_single_db,radar_snr_integrated_db,range_mse_m2,range_rmse_m,"
    "detection_feasible,mode";

inline constexpr std::string_view tool_version = "jcas-sim 0.1.0";

/// `#`-prefixed metadata lines, the header, then one line per row. Floats use
/// 9 significant digits.
void write_csv(const ResultTable& t, std::ostream& out);

/// Writes the CSV to `destination`; throws std::runtime_error naming the path
/// and the cause on I/O failure.
void emit_csv(const ResultTable& t, const std::filesystem::path& destination);

} // namespace jcas::sweep
