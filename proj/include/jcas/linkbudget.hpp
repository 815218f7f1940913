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
#include <optional>
#include <string_view>

#include "jcas/waveform.hpp"

namespace jcas::linkbudget {

enum class ArrayGainModel {
    /// Total radiated power fixed; gain grows 10*log10(N).
    fixed_total_power,
    /// Every element radiates the reference power; EIRP grows 20*log10(N).
    per_element_power,
};

std::string_view to_string(ArrayGainModel m);

/// Full parameter set of one link evaluation. Defaults reproduce the C-band
/// LEO case study: 4.2 GHz, 100 MHz OFDM, 800 data + 224 sensing tones,
/// 100 m^2 aircraft seen over a 490 km + 10 km bistatic path.
struct Scenario {
    double carrier_hz = 4.2e9;
    double bandwidth_hz = 1e8;
    std::int64_t n_subcarriers = 1024;
    std::int64_t n_data = 800;
    std::int64_t n_sense = 224;
    std::int64_t n_cp = 72;
    double tx_power_dbw = 1.0;
    double tx_gain_ref_dbi = 22.81;
    /// Receive gain of the communications user terminal.
    double rx_gain_dbi = 32.85;
    /// Receive gain of the ground radar receiver.
    double radar_rx_gain_dbi = 32.85;
    std::int64_t n_elements = 1;
    std::int64_t n_elements_ref = 1;
    ArrayGainModel array_gain_model = ArrayGainModel::fixed_total_power;
    double d_sat_user_km = 500.0;
    double d_sat_target_km = 490.0;
    double d_target_rx_km = 10.0;
    double rcs_m2 = 100.0;
    double t_integration_s = 0.3;
    double noise_temp_k = 300.0;
    double elevation_user_deg = 10.0;
    double elevation_target_deg = 30.0;
    bool doppler_precompensated = true;
    double detection_threshold_db = 10.0;
    waveform::TonePlacement tone_placement = waveform::TonePlacement::comb_uniform;
    /// Rate accounting toggles: charge the cyclic prefix / the non-data
    /// subcarriers against the achievable rate.
    bool rate_cp_overhead = true;
    bool rate_subcarrier_overhead = true;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Throws domain_error naming the first field that breaks an invariant.
void validate(const Scenario& s);

double fspl_db(double freq_hz, double distance_m);
double noise_power_dbw(double temp_k, double bandwidth_hz);
double array_gain_db(double ref_gain_dbi, std::int64_t n, std::int64_t n_ref,
                     ArrayGainModel model = ArrayGainModel::fixed_total_power);

/// Transmit array gain of the scenario (reference gain scaled by element count).
double tx_array_gain_dbi(const Scenario& s);

double comm_snr_db(const Scenario& s);

struct RadarSnr {
    double received_dbw = 0.0;
    double noise_dbw = 0.0;
    double single_db = 0.0;
    double integration_gain_db = 0.0;
    double integrated_db = 0.0;
    std::int64_t symbols = 0;
};

/// Radar equation for a transmitter-target-receiver geometry with ranges in
/// metres. Shared by the bistatic and monostatic entry points.
RadarSnr radar_snr(const Scenario& s, const waveform::SubcarrierPlan& plan,
                   const waveform::OfdmNumerology& num, double tx_target_m, double target_rx_m,
                   double rx_gain_dbi);

RadarSnr bistatic_radar_snr_db(const Scenario& s, const waveform::SubcarrierPlan& plan,
                               const waveform::OfdmNumerology& num);

/// The satellite receives its own echo: both legs are d_sat_target and the
/// receive gain equals the transmit array gain.
RadarSnr monostatic_radar_snr_db(const Scenario& s, const waveform::SubcarrierPlan& plan,
                                 const waveform::OfdmNumerology& num);

/// Effective SNR after inter-carrier interference from an uncompensated
/// Doppler offset. `normalized_offset` is Doppler / subcarrier spacing. The
/// desired tone keeps sinc^2(eps) of its power and the remainder leaks in as
/// interference: SINR = S sinc^2 / (N + S (1 - sinc^2)).
double doppler_ici_snr_db(double snr_db, double normalized_offset);

/// Every intermediate figure of one scenario evaluation.
struct LinkResult {
    double wavelength_m = 0.0;
    double tx_array_gain_dbi = 0.0;
    double eirp_dbw = 0.0;
    double fspl_comm_db = 0.0;
    double noise_comm_dbw = 0.0;
    double comm_snr_raw_db = 0.0;
    /// Doppler seen on each leg, and what is left of it after precompensation.
    double doppler_comm_hz = 0.0;
    double residual_doppler_comm_hz = 0.0;
    double comm_snr_db = 0.0;

    double sense_power_split_db = 0.0;
    double fspl_sat_target_db = 0.0;
    double fspl_target_rx_db = 0.0;
    double radar_rx_power_dbw = 0.0;
    double noise_sense_dbw = 0.0;
    double doppler_sense_hz = 0.0;
    double residual_doppler_sense_hz = 0.0;
    double radar_snr_single_db = 0.0;
    std::int64_t integration_symbols = 0;
    double integration_gain_db = 0.0;
    double radar_snr_integrated_db = 0.0;

    double mono_snr_single_db = 0.0;
    double mono_snr_integrated_db = 0.0;

    double implied_altitude_user_km = 0.0;
    double implied_altitude_target_km = 0.0;

    friend bool operator==(const LinkResult&, const LinkResult&) = default;
};

/// Evaluates the whole budget. With doppler_precompensated = false the
/// Doppler ICI penalty is applied to the communications SNR and to both
/// single-symbol radar SNRs before integration. With `with_radar` false the
/// sensing fields are NaN and no sensing tones are required.
LinkResult evaluate(const Scenario& s, bool with_radar = true);

} // namespace jcas::linkbudget
