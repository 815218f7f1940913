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

#include "jcas/waveform.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "jcas/errors.hpp"

namespace jcas::waveform {

OfdmNumerology numerology(double bandwidth_hz, std::int64_t n_subcarriers, std::int64_t n_cp) {
    detail::require_positive(bandwidth_hz, "bandwidth_hz");
    detail::require_finite(bandwidth_hz, "bandwidth_hz");
    if (n_subcarriers < 1) {
        throw domain_error("n_subcarriers", "must be >= 1");
    }
    if (n_cp < 0) {
        throw domain_error("n_cp", "must be >= 0");
    }
    OfdmNumerology num;
    num.bandwidth_hz = bandwidth_hz;
    num.n_subcarriers = n_subcarriers;
    num.n_cp_samples = n_cp;
    num.subcarrier_spacing_hz = bandwidth_hz / static_cast<double>(n_subcarriers);
    num.t_useful_s = static_cast<double>(n_subcarriers) / bandwidth_hz;
    num.t_cp_s = static_cast<double>(n_cp) / bandwidth_hz;
    num.t_symbol_s = num.t_useful_s + num.t_cp_s;
    num.cp_overhead = num.t_useful_s / num.t_symbol_s;
    return num;
}

SubcarrierPlan partition(std::int64_t n_total, std::int64_t n_data, std::int64_t n_sense) {
    if (n_total < 1) {
        throw domain_error("n_subcarriers", "must be >= 1");
    }
    if (n_data < 0 || n_sense < 0) {
        throw domain_error(n_data < 0 ? "n_data" : "n_sense", "must be >= 0");
    }
    if (n_data + n_sense > n_total) {
        throw domain_error("n_data + n_sense", "partition overflow: " + std::to_string(n_data) +
                                                   " + " + std::to_string(n_sense) + " > " +
                                                   std::to_string(n_total));
    }
    SubcarrierPlan plan;
    plan.n_total = n_total;
    plan.n_data = n_data;
    plan.n_sense = n_sense;
    plan.n_unused = n_total - n_data - n_sense;
    plan.data_fraction = static_cast<double>(n_data) / static_cast<double>(n_total);
    plan.sense_fraction = static_cast<double>(n_sense) / static_cast<double>(n_total);
    return plan;
}

std::string_view to_string(TonePlacement p) {
    return p == TonePlacement::comb_uniform ? "comb_uniform" : "block_edge";
}

std::vector<double> sensing_tone_offsets(const SubcarrierPlan& plan, const OfdmNumerology& num,
                                         TonePlacement placement) {
    const std::int64_t n = plan.n_sense;
    std::vector<double> offsets;
    offsets.reserve(static_cast<std::size_t>(n));
    if (n == 0) {
        return offsets;
    }
    const double half = num.bandwidth_hz / 2.0;
    if (n == 1) {
        offsets.push_back(0.0);
        return offsets;
    }
    switch (placement) {
    case TonePlacement::comb_uniform: {
        const double step = num.bandwidth_hz / static_cast<double>(n - 1);
        for (std::int64_t i = 0; i < n; ++i) {
            // Measured from both edges so the comb stays exactly symmetric.
            offsets.push_back(2 * i < n - 1 ? -half + static_cast<double>(i) * step
                                            : half - static_cast<double>(n - 1 - i) * step);
        }
        break;
    }
    case TonePlacement::block_edge: {
        const std::int64_t n_sc = num.n_subcarriers;
        const double centre = static_cast<double>(n_sc - 1) / 2.0;
        const std::int64_t lower = (n + 1) / 2;
        const std::int64_t upper = n - lower;
        for (std::int64_t k = 0; k < lower; ++k) {
            offsets.push_back((static_cast<double>(k) - centre) * num.subcarrier_spacing_hz);
        }
        for (std::int64_t k = n_sc - upper; k < n_sc; ++k) {
            offsets.push_back((static_cast<double>(k) - centre) * num.subcarrier_spacing_hz);
        }
        break;
    }
    }
    return offsets;
}

double rms_of_offsets(const std::vector<double>& offsets_hz) {
    if (offsets_hz.empty()) {
        throw domain_error("n_sense", "no sensing tones");
    }
    // Summing sorted squares makes the result independent of tone order and sign.
    std::vector<double> squares(offsets_hz.size());
    std::transform(offsets_hz.begin(), offsets_hz.end(), squares.begin(),
                   [](double f) { return f * f; });
    std::sort(squares.begin(), squares.end());
    const double sum_sq = std::accumulate(squares.begin(), squares.end(), 0.0);
    return std::sqrt(sum_sq / static_cast<double>(offsets_hz.size()));
}

double sensing_rms_bandwidth(const SubcarrierPlan& plan, const OfdmNumerology& num,
                             TonePlacement placement) {
    if (plan.n_sense < 2) {
        throw domain_error("n_sense", "RMS bandwidth needs at least 2 sensing tones, got " +
                                          std::to_string(plan.n_sense));
    }
    return rms_of_offsets(sensing_tone_offsets(plan, num, placement));
}

std::int64_t symbols_in(double t_integration_s, const OfdmNumerology& num) {
    if (!(t_integration_s >= 0.0) || !std::isfinite(t_integration_s)) {
        throw domain_error("t_integration_s", "must be finite and >= 0");
    }
    return static_cast<std::int64_t>(std::floor(t_integration_s / num.t_symbol_s));
}

} // namespace jcas::waveform
