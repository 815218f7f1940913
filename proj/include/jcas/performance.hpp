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

#include "jcas/waveform.hpp"

namespace jcas::performance {

struct RateOptions {
    bool cp_overhead = true;
    bool subcarrier_overhead = true;
};

struct Rate {
    double shannon_bps = 0.0;
    /// min(shannon, QPSK ceiling of 2 bits per data tone per symbol).
    double qpsk_capped_bps = 0.0;
};

inline constexpr double qpsk_bits_per_symbol = 2.0;

Rate achievable_rate(double snr_db, const waveform::SubcarrierPlan& plan,
                     const waveform::OfdmNumerology& num, RateOptions options = {});

/// Cramer-Rao bound on echo delay variance, s^2:
///   1 / (8 pi^2 B_rms^2 SNR)
double delay_crlb(double post_snr_db, double rms_bandwidth_hz);

struct RangeError {
    double mse_m2 = 0.0;
    double rmse_m = 0.0;
};

/// Maps a delay variance to bistatic (path-sum) range error.
RangeError range_mse(double delay_variance_s2);

/// Inclusive: an SNR equal to the threshold is a detection.
bool detection_feasible(double post_snr_db, double threshold_db);

struct PerformanceResult {
    double shannon_rate_bps = 0.0;
    double qpsk_capped_rate_bps = 0.0;
    double rms_bandwidth_hz = 0.0;
    double delay_variance_s2 = 0.0;
    double range_mse_m2 = 0.0;
    double range_rmse_m = 0.0;
    bool detection_feasible = false;

    friend bool operator==(const PerformanceResult&, const PerformanceResult&) = default;
};

} // namespace jcas::performance
