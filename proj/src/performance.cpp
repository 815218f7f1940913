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

#include "jcas/performance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jcas/constants.hpp"
#include "jcas/errors.hpp"

namespace jcas::performance {

Rate achievable_rate(double snr_db, const waveform::SubcarrierPlan& plan,
                     const waveform::OfdmNumerology& num, RateOptions options) {
    detail::require_finite(snr_db, "snr_db");
    const double tone_fraction = options.subcarrier_overhead ? plan.data_fraction : 1.0;
    const double time_fraction = options.cp_overhead ? num.cp_overhead : 1.0;
    // log1p keeps the vanishing-SNR end accurate.
    const double bits_per_hz = std::log1p(std::pow(10.0, snr_db / 10.0)) / std::numbers::ln2;

    Rate r;
    r.shannon_bps = tone_fraction * time_fraction * num.bandwidth_hz * bits_per_hz;

    const double tones = options.subcarrier_overhead ? static_cast<double>(plan.n_data)
                                                     : static_cast<double>(plan.n_total);
    const double symbol = options.cp_overhead ? num.t_symbol_s : num.t_useful_s;
    r.qpsk_capped_bps = std::min(r.shannon_bps, tones * qpsk_bits_per_symbol / symbol);
    return r;
}

double delay_crlb(double post_snr_db, double rms_bandwidth_hz) {
    detail::require_positive(rms_bandwidth_hz, "rms_bandwidth_hz");
    const double snr = std::pow(10.0, post_snr_db / 10.0);
    return 1.0 / (8.0 * constants::pi * constants::pi * rms_bandwidth_hz * rms_bandwidth_hz * snr);
}

RangeError range_mse(double delay_variance_s2) {
    if (!(delay_variance_s2 >= 0.0)) {
        throw domain_error("delay_variance_s2", "must be >= 0");
    }
    const double c = constants::speed_of_light;
    RangeError e;
    e.mse_m2 = c * c * delay_variance_s2;
    e.rmse_m = std::sqrt(e.mse_m2);
    return e;
}

bool detection_feasible(double post_snr_db, double threshold_db) {
    return post_snr_db >= threshold_db;
}

} // namespace jcas::performance
