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

#include "jcas/linkbudget.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "jcas/constants.hpp"
#include "jcas/errors.hpp"
#include "jcas/geometry.hpp"

namespace jcas::linkbudget {

namespace {

double db10(double x) { return 10.0 * std::log10(x); }
double db20(double x) { return 20.0 * std::log10(x); }

void require_count(std::int64_t value, std::int64_t min, const char* name) {
    if (value < min) {
        throw domain_error(name, "must be >= " + std::to_string(min) + ", got " +
                                     std::to_string(value));
    }
}

void require_elevation(double value, const char* name) {
    if (!(value >= 0.0 && value <= 90.0)) {
        throw domain_error(name, "must lie in [0, 90], got " + std::to_string(value));
    }
}

double sinc(double x) {
    if (x == 0.0) {
        return 1.0;
    }
    const double px = constants::pi * x;
    return std::sin(px) / px;
}

} // namespace

std::string_view to_string(ArrayGainModel m) {
    return m == ArrayGainModel::fixed_total_power ? "fixed_total_power" : "per_element_power";
}

void validate(const Scenario& s) {
    for (auto [value, name] : {std::pair{s.carrier_hz, "carrier_hz"},
                               {s.bandwidth_hz, "bandwidth_hz"},
                               {s.d_sat_user_km, "d_sat_user_km"},
                               {s.d_sat_target_km, "d_sat_target_km"},
                               {s.d_target_rx_km, "d_target_rx_km"},
                               {s.rcs_m2, "rcs_m2"},
                               {s.noise_temp_k, "noise_temp_k"}}) {
        detail::require_finite(value, name);
        detail::require_positive(value, name);
    }
    for (auto [value, name] : {std::pair{s.tx_power_dbw, "tx_power_dbw"},
                               {s.tx_gain_ref_dbi, "tx_gain_ref_dbi"},
                               {s.rx_gain_dbi, "rx_gain_dbi"},
                               {s.radar_rx_gain_dbi, "radar_rx_gain_dbi"},
                               {s.detection_threshold_db, "detection_threshold_db"},
                               {s.t_integration_s, "t_integration_s"}}) {
        detail::require_finite(value, name);
    }
    if (s.t_integration_s < 0.0) {
        throw domain_error("t_integration_s", "must be >= 0");
    }
    require_count(s.n_subcarriers, 1, "n_subcarriers");
    require_count(s.n_data, 0, "n_data");
    require_count(s.n_sense, 0, "n_sense");
    require_count(s.n_cp, 0, "n_cp");
    require_count(s.n_elements, 1, "n_elements");
    require_count(s.n_elements_ref, 1, "n_elements_ref");
    if (s.n_data + s.n_sense > s.n_subcarriers) {
        throw domain_error("n_data + n_sense", "exceeds n_subcarriers");
    }
    require_elevation(s.elevation_user_deg, "elevation_user_deg");
    require_elevation(s.elevation_target_deg, "elevation_target_deg");
}

double fspl_db(double freq_hz, double distance_m) {
    detail::require_positive(freq_hz, "freq_hz");
    detail::require_positive(distance_m, "distance_m");
    return db20(4.0 * constants::pi * distance_m * freq_hz / constants::speed_of_light);
}

double noise_power_dbw(double temp_k, double bandwidth_hz) {
    detail::require_positive(temp_k, "noise_temp_k");
    detail::require_positive(bandwidth_hz, "bandwidth_hz");
    return db10(constants::boltzmann * temp_k * bandwidth_hz);
}

double array_gain_db(double ref_gain_dbi, std::int64_t n, std::int64_t n_ref, ArrayGainModel model) {
    require_count(n, 1, "n_elements");
    require_count(n_ref, 1, "n_elements_ref");
    const double ratio = static_cast<double>(n) / static_cast<double>(n_ref);
    return ref_gain_dbi + (model == ArrayGainModel::fixed_total_power ? db10(ratio) : db20(ratio));
}

double tx_array_gain_dbi(const Scenario& s) {
    return array_gain_db(s.tx_gain_ref_dbi, s.n_elements, s.n_elements_ref, s.array_gain_model);
}

double comm_snr_db(const Scenario& s) {
    // Data-tone power share and data-band noise cancel, so the full band is used.
    return s.tx_power_dbw + tx_array_gain_dbi(s) + s.rx_gain_dbi -
           fspl_db(s.carrier_hz, s.d_sat_user_km * 1e3) -
           noise_power_dbw(s.noise_temp_k, s.bandwidth_hz);
}

RadarSnr radar_snr(const Scenario& s, const waveform::SubcarrierPlan& plan,
                   const waveform::OfdmNumerology& num, double tx_target_m, double target_rx_m,
                   double rx_gain_dbi) {
    if (plan.n_sense < 1) {
        throw domain_error("n_sense", "radar budget needs at least one sensing tone");
    }
    detail::require_positive(tx_target_m, "tx_target_m");
    detail::require_positive(target_rx_m, "target_rx_m");
    detail::require_positive(s.rcs_m2, "rcs_m2");

    const double wavelength = constants::speed_of_light / s.carrier_hz;
    RadarSnr r;
    r.received_dbw = s.tx_power_dbw + db10(plan.sense_fraction) + tx_array_gain_dbi(s) +
                     rx_gain_dbi + db20(wavelength) + db10(s.rcs_m2) -
                     30.0 * std::log10(4.0 * constants::pi) - db20(tx_target_m) - db20(target_rx_m);
    r.noise_dbw = noise_power_dbw(s.noise_temp_k, plan.sense_fraction * num.bandwidth_hz);
    r.single_db = r.received_dbw - r.noise_dbw;
    r.symbols = waveform::symbols_in(s.t_integration_s, num);
    if (r.symbols == 0) {
        throw domain_error("t_integration_s", "integration window holds zero OFDM symbols");
    }
    r.integration_gain_db = db10(static_cast<double>(r.symbols));
    r.integrated_db = r.single_db + r.integration_gain_db;
    return r;
}

RadarSnr bistatic_radar_snr_db(const Scenario& s, const waveform::SubcarrierPlan& plan,
                               const waveform::OfdmNumerology& num) {
    return radar_snr(s, plan, num, s.d_sat_target_km * 1e3, s.d_target_rx_km * 1e3,
                     s.radar_rx_gain_dbi);
}

RadarSnr monostatic_radar_snr_db(const Scenario& s, const waveform::SubcarrierPlan& plan,
                                 const waveform::OfdmNumerology& num) {
    return radar_snr(s, plan, num, s.d_sat_target_km * 1e3, s.d_sat_target_km * 1e3,
                     tx_array_gain_dbi(s));
}

double doppler_ici_snr_db(double snr_db, double normalized_offset) {
    detail::require_finite(normalized_offset, "normalized_offset");
    const double kept = sinc(normalized_offset) * sinc(normalized_offset);
    if (kept == 0.0) {
        return -std::numeric_limits<double>::infinity();
    }
    const double snr = std::pow(10.0, snr_db / 10.0);
    return db10(snr * kept / (1.0 + snr * (1.0 - kept)));
}

LinkResult evaluate(const Scenario& s, bool with_radar) {
    validate(s);
    const auto num = waveform::numerology(s.bandwidth_hz, s.n_subcarriers, s.n_cp);
    const auto plan = waveform::partition(s.n_subcarriers, s.n_data, s.n_sense);

    LinkResult r;
    r.wavelength_m = constants::speed_of_light / s.carrier_hz;
    r.tx_array_gain_dbi = tx_array_gain_dbi(s);
    r.eirp_dbw = s.tx_power_dbw + r.tx_array_gain_dbi;
    r.fspl_comm_db = fspl_db(s.carrier_hz, s.d_sat_user_km * 1e3);
    r.noise_comm_dbw = noise_power_dbw(s.noise_temp_k, s.bandwidth_hz);
    r.comm_snr_raw_db = comm_snr_db(s);

    r.implied_altitude_user_km = geometry::implied_altitude(s.d_sat_user_km, s.elevation_user_deg);
    r.implied_altitude_target_km =
        geometry::implied_altitude(s.d_sat_target_km, s.elevation_target_deg);
    r.doppler_comm_hz = geometry::doppler_shift(
        s.carrier_hz, geometry::radial_speed(r.implied_altitude_user_km, s.elevation_user_deg));
    r.doppler_sense_hz = geometry::doppler_shift(
        s.carrier_hz, geometry::radial_speed(r.implied_altitude_target_km, s.elevation_target_deg));
    r.residual_doppler_comm_hz = s.doppler_precompensated ? 0.0 : r.doppler_comm_hz;
    r.residual_doppler_sense_hz = s.doppler_precompensated ? 0.0 : r.doppler_sense_hz;

    const double spacing = num.subcarrier_spacing_hz;
    r.comm_snr_db = s.doppler_precompensated
                        ? r.comm_snr_raw_db
                        : doppler_ici_snr_db(r.comm_snr_raw_db, r.residual_doppler_comm_hz / spacing);

    if (!with_radar) {
        constexpr double nan = std::numeric_limits<double>::quiet_NaN();
        for (double* field : {&r.sense_power_split_db, &r.fspl_sat_target_db, &r.fspl_target_rx_db,
                              &r.radar_rx_power_dbw, &r.noise_sense_dbw, &r.integration_gain_db,
                              &r.radar_snr_single_db, &r.radar_snr_integrated_db,
                              &r.mono_snr_single_db, &r.mono_snr_integrated_db}) {
            *field = nan;
        }
        return r;
    }

    const auto bistatic = bistatic_radar_snr_db(s, plan, num);
    r.sense_power_split_db = db10(plan.sense_fraction);
    r.fspl_sat_target_db = fspl_db(s.carrier_hz, s.d_sat_target_km * 1e3);
    r.fspl_target_rx_db = fspl_db(s.carrier_hz, s.d_target_rx_km * 1e3);
    r.radar_rx_power_dbw = bistatic.received_dbw;
    r.noise_sense_dbw = bistatic.noise_dbw;
    r.integration_symbols = bistatic.symbols;
    r.integration_gain_db = bistatic.integration_gain_db;
    r.radar_snr_single_db =
        s.doppler_precompensated
            ? bistatic.single_db
            : doppler_ici_snr_db(bistatic.single_db, r.residual_doppler_sense_hz / spacing);
    r.radar_snr_integrated_db = r.radar_snr_single_db + r.integration_gain_db;

    // The monostatic echo sees the sensing-leg Doppler twice.
    const auto mono = monostatic_radar_snr_db(s, plan, num);
    r.mono_snr_single_db =
        s.doppler_precompensated
            ? mono.single_db
            : doppler_ici_snr_db(mono.single_db, 2.0 * r.residual_doppler_sense_hz / spacing);
    r.mono_snr_integrated_db = r.mono_snr_single_db + mono.integration_gain_db;
    return r;
}

} // namespace jcas::linkbudget
