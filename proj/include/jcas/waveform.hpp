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
#include <string_view>
#include <vector>

namespace jcas::waveform {

/// Derived timing of a cyclic-prefix OFDM waveform.
struct OfdmNumerology {
    double bandwidth_hz = 0.0;
    std::int64_t n_subcarriers = 0;
    std::int64_t n_cp_samples = 0;
    double subcarrier_spacing_hz = 0.0;
    double t_useful_s = 0.0;
    double t_cp_s = 0.0;
    double t_symbol_s = 0.0;
    /// Useful fraction of each symbol, t_useful / t_symbol.
    double cp_overhead = 0.0;
};

OfdmNumerology numerology(double bandwidth_hz, std::int64_t n_subcarriers, std::int64_t n_cp);

struct SubcarrierPlan {
    std::int64_t n_total = 0;
    std::int64_t n_data = 0;
    std::int64_t n_sense = 0;
    std::int64_t n_unused = 0;
    double data_fraction = 0.0;
    double sense_fraction = 0.0;

    double unused_fraction() const {
        return static_cast<double>(n_unused) / static_cast<double>(n_total);
    }
};

/// Throws domain_error("n_data + n_sense", ...) when the partition overflows.
SubcarrierPlan partition(std::int64_t n_total, std::int64_t n_data, std::int64_t n_sense);

enum class TonePlacement {
    /// Sensing tones evenly spread over the occupied band, first and last
    /// tone on the band edges.
    comb_uniform,
    /// Sensing tones packed in two blocks at the band edges on the
    /// subcarrier grid.
    block_edge,
};

std::string_view to_string(TonePlacement p);

/// Offsets of the sensing tones from band centre in Hz, ascending.
std::vector<double> sensing_tone_offsets(const SubcarrierPlan& plan, const OfdmNumerology& num,
                                         TonePlacement placement = TonePlacement::comb_uniform);

/// sqrt(mean(f_i^2)) over the sensing tone offsets. Needs at least two tones.
double sensing_rms_bandwidth(const SubcarrierPlan& plan, const OfdmNumerology& num,
                             TonePlacement placement = TonePlacement::comb_uniform);

/// RMS of an arbitrary offset list; exposed for callers with custom layouts.
double rms_of_offsets(const std::vector<double>& offsets_hz);

/// Whole OFDM symbols that fit in an integration window.
std::int64_t symbols_in(double t_integration_s, const OfdmNumerology& num);

} // namespace jcas::waveform
