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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "jcas/errors.hpp"
#include "jcas/linkbudget.hpp"

using namespace jcas::linkbudget;
using jcas::waveform::numerology;
using jcas::waveform::partition;

namespace {

constexpr double c = 299792458.0;
constexpr double kb = 1.380649e-23;

// Hand evaluations, kept apart from the library code paths.
double hand_fspl(double f, double d) { return 20.0 * std::log10(4.0 * std::numbers::pi * d * f / c); }
double hand_noise(double t, double b) { return 10.0 * std::log10(kb * t * b); }

struct Parts {
    Scenario s;
    jcas::waveform::SubcarrierPlan plan;
    jcas::waveform::OfdmNumerology num;
};

Parts parts(const Scenario& s) {
    return {s, partition(s.n_subcarriers, s.n_data, s.n_sense), numerology(s.bandwidth_hz, s.n_subcarriers, s.n_cp)};
}

Scenario at_power(double p) {
    Scenario s;
    s.tx_power_dbw = p;
    return s;
}

} // namespace

TEST_CASE("free-space path loss") {
    CHECK(std::abs(fspl_db(4.2e9, 5.0e5) - 158.89) < 0.01);
    CHECK(std::abs(fspl_db(4.2e9, 1.0e4) - 124.91) < 0.01);
    CHECK(fspl_db(4.2e9, 1.0e4) == doctest::Approx(fspl_db(4.2e9, 5.0e5) + 20.0 * std::log10(1e4 / 5e5)));
    CHECK(fspl_db(4.2e9, 5.0e5) == doctest::Approx(hand_fspl(4.2e9, 5.0e5)).epsilon(1e-14));
    for (double d : {1.0, 1e3, 5e5, 3.6e7}) {
        CHECK(std::abs(fspl_db(4.2e9, 2 * d) - fspl_db(4.2e9, d) - 6.0205999132796) < 1e-9);
        CHECK(fspl_db(4.3e9, d) > fspl_db(4.2e9, d));
    }
    CHECK_THROWS_AS(fspl_db(0.0, 1.0), jcas::domain_error);
    CHECK_THROWS_AS(fspl_db(1.0, -1.0), jcas::domain_error);
}

TEST_CASE("thermal noise power") {
    CHECK(std::abs(noise_power_dbw(300.0, 1e8) - (-123.83)) < 0.01);
    CHECK(std::abs(noise_power_dbw(300.0, 2.1875e7) - (-130.43)) < 0.01);
    CHECK(noise_power_dbw(300.0, 1e8) == doctest::Approx(hand_noise(300.0, 1e8)).epsilon(1e-14));
    CHECK(std::abs(noise_power_dbw(300.0, 1e9) - noise_power_dbw(300.0, 1e8) - 10.0) < 1e-9);
    CHECK_THROWS_AS(noise_power_dbw(0.0, 1e8), jcas::domain_error);
    CHECK_THROWS_AS(noise_power_dbw(300.0, 0.0), jcas::domain_error);
}

TEST_CASE("array gain") {
    CHECK(array_gain_db(22.81, 1, 1) == 22.81);
    CHECK(std::abs(array_gain_db(22.81, 4, 1) - 28.83) < 0.01);
    for (std::int64_t n : {1, 3, 8, 100}) {
        CHECK(std::abs(array_gain_db(22.81, 2 * n, 1) - array_gain_db(22.81, n, 1) - 3.0102999566398) < 1e-9);
        CHECK(std::abs(array_gain_db(22.81, 2 * n, 1, ArrayGainModel::per_element_power) -
                       array_gain_db(22.81, n, 1, ArrayGainModel::per_element_power) - 6.0205999132796) < 1e-9);
    }
    CHECK_THROWS_AS(array_gain_db(22.81, 0, 1), jcas::domain_error);
    CHECK_THROWS_AS(array_gain_db(22.81, 1, 0), jcas::domain_error);
}

TEST_CASE("communications SNR") {
    const double hand = 9.0 + 22.81 + 32.85 - hand_fspl(4.2e9, 5e5) - hand_noise(300.0, 1e8);
    CHECK(std::abs(hand - 29.60) < 0.05);
    CHECK(comm_snr_db(at_power(9.0)) == doctest::Approx(hand).epsilon(1e-12));
    CHECK(std::abs(comm_snr_db(at_power(9.0)) - comm_snr_db(at_power(1.0)) - 8.0) < 1e-9);

    auto four = at_power(9.0);
    four.n_elements = 4;
    CHECK(std::abs(comm_snr_db(four) - comm_snr_db(at_power(9.0)) - 10.0 * std::log10(4.0)) < 1e-9);
}

TEST_CASE("bistatic radar SNR of the case study") {
    // Hand budget: 9 dBW, -6.60 dB sensing share, 22.81 + 32.85 dBi,
    // lambda = c / 4.2 GHz, 100 m^2, 490 km and 10 km legs, 300 K over 21.875 MHz,
    // 27372 coherently integrated symbols.
    const double lambda = c / 4.2e9;
    CHECK(lambda == doctest::Approx(0.071379).epsilon(1e-5));
    const double received = 9.0 + 10 * std::log10(0.21875) + 22.81 + 32.85 + 20 * std::log10(lambda) + 20.0 -
                            30 * std::log10(4 * std::numbers::pi) - 20 * std::log10(490e3) - 20 * std::log10(10e3);
    const double single = received - hand_noise(300.0, 0.21875e8);
    const double integrated = single + 10 * std::log10(27372.0);
    CHECK(std::abs(single - (-41.2)) < 0.1);
    CHECK(std::abs(integrated - 3.1) < 0.1);

    const auto p = parts(at_power(9.0));
    const auto r = bistatic_radar_snr_db(p.s, p.plan, p.num);
    CHECK(r.single_db == doctest::Approx(single).epsilon(1e-12));
    CHECK(r.integrated_db == doctest::Approx(integrated).epsilon(1e-12));
    CHECK(r.symbols == 27372);
    CHECK(r.integrated_db == r.single_db + r.integration_gain_db);
    CHECK(std::abs(r.integrated_db - r.single_db - 10.0 * std::log10(27372.0)) < 1e-12);
    CHECK(r.single_db == doctest::Approx(-41.22083).epsilon(1e-6));
    CHECK(r.integrated_db == doctest::Approx(3.15223).epsilon(1e-5));
}

TEST_CASE("radar SNR follows the RCS law") {
    auto s = at_power(5.0);
    const auto p1 = parts(s);
    const auto base = bistatic_radar_snr_db(p1.s, p1.plan, p1.num);
    s.rcs_m2 *= 4.0;
    const auto p4 = parts(s);
    const auto bigger = bistatic_radar_snr_db(p4.s, p4.plan, p4.num);
    CHECK(std::abs(bigger.integrated_db - base.integrated_db - 6.0205999132796) < 1e-9);
}

TEST_CASE("empty integration window is an error") {
    auto s = at_power(9.0);
    s.t_integration_s = 0.0;
    const auto p = parts(s);
    try {
        bistatic_radar_snr_db(p.s, p.plan, p.num);
        FAIL("expected zero-symbol error");
    } catch (const jcas::domain_error& e) {
        CHECK(e.parameter() == "t_integration_s");
    }
    s.t_integration_s = 5e-6;
    const auto q = parts(s);
    CHECK_THROWS_AS(monostatic_radar_snr_db(q.s, q.plan, q.num), jcas::domain_error);
}

TEST_CASE("monostatic penalty against matched-gain bistatic") {
    auto s = at_power(9.0);
    s.radar_rx_gain_dbi = tx_array_gain_dbi(s);
    const auto p = parts(s);
    const auto bi = bistatic_radar_snr_db(p.s, p.plan, p.num);
    const auto mono = monostatic_radar_snr_db(p.s, p.plan, p.num);
    const double geometry = 40 * std::log10(490e3) - 20 * std::log10(490e3) - 20 * std::log10(1e4);
    CHECK(std::abs(geometry - 33.81) < 0.01);
    CHECK(std::abs(bi.integrated_db - mono.integrated_db - 33.81) < 0.01);
    CHECK(bi.integrated_db - mono.integrated_db == doctest::Approx(geometry).epsilon(1e-12));
}

TEST_CASE("bistatic with equal legs reproduces monostatic") {
    auto s = at_power(3.0);
    s.n_elements = 8;
    s.d_target_rx_km = s.d_sat_target_km;
    s.radar_rx_gain_dbi = tx_array_gain_dbi(s);
    const auto p = parts(s);
    CHECK(std::abs(bistatic_radar_snr_db(p.s, p.plan, p.num).integrated_db -
                   monostatic_radar_snr_db(p.s, p.plan, p.num).integrated_db) < 1e-9);
}

TEST_CASE("monostatic is infeasible across the power range") {
    for (int p = 1; p <= 9; ++p) {
        const auto r = evaluate(at_power(p));
        CHECK(r.mono_snr_integrated_db < 10.0);
        CHECK(std::isfinite(r.radar_snr_integrated_db));
    }
}

TEST_CASE("every SNR shifts dB-for-dB with transmit power") {
    for (double delta : {-3.5, 0.25, 1.0, 7.0}) {
        const auto a = evaluate(at_power(2.0));
        const auto b = evaluate(at_power(2.0 + delta));
        CHECK(std::abs(b.comm_snr_db - a.comm_snr_db - delta) < 1e-9);
        CHECK(std::abs(b.radar_snr_single_db - a.radar_snr_single_db - delta) < 1e-9);
        CHECK(std::abs(b.radar_snr_integrated_db - a.radar_snr_integrated_db - delta) < 1e-9);
        CHECK(std::abs(b.mono_snr_integrated_db - a.mono_snr_integrated_db - delta) < 1e-9);
    }
}

TEST_CASE("SNRs rise with elements and fall with distance") {
    Scenario s;
    double comm = -1e9;
    double radar = -1e9;
    for (std::int64_t n : {1, 2, 3, 4, 8, 16, 64}) {
        s.n_elements = n;
        const auto r = evaluate(s);
        CHECK(r.comm_snr_db > comm);
        CHECK(r.radar_snr_integrated_db > radar);
        comm = r.comm_snr_db;
        radar = r.radar_snr_integrated_db;
    }
    for (double Scenario::*d : {&Scenario::d_sat_user_km, &Scenario::d_sat_target_km, &Scenario::d_target_rx_km}) {
        Scenario near;
        Scenario far;
        far.*d = near.*d * 1.5;
        const auto a = evaluate(near);
        const auto b = evaluate(far);
        if (d == &Scenario::d_sat_user_km) {
            CHECK(b.comm_snr_db < a.comm_snr_db);
        } else {
            CHECK(b.radar_snr_integrated_db < a.radar_snr_integrated_db);
        }
    }
}

TEST_CASE("Doppler ICI penalty") {
    CHECK(doppler_ici_snr_db(20.0, 0.0) == doctest::Approx(20.0).epsilon(1e-14));
    double previous = 20.0;
    for (double eps : {0.01, 0.05, 0.1, 0.3}) {
        const double v = doppler_ici_snr_db(20.0, eps);
        CHECK(v < previous);
        CHECK(doppler_ici_snr_db(20.0, -eps) == doctest::Approx(v));
        previous = v;
    }
    // Interference-limited: the SINR saturates at sinc^2 / (1 - sinc^2).
    const double eps = 0.1;
    const double k = std::pow(std::sin(std::numbers::pi * eps) / (std::numbers::pi * eps), 2);
    CHECK(doppler_ici_snr_db(200.0, eps) == doctest::Approx(10 * std::log10(k / (1 - k))).epsilon(1e-9));
    // A full-spacing offset lands the tone on a neighbour: the desired share is ~0.
    CHECK(doppler_ici_snr_db(20.0, 1.0) < -250.0);
}

TEST_CASE("uncompensated Doppler degrades the link") {
    Scenario s = at_power(9.0);
    const auto pre = evaluate(s);
    CHECK(pre.residual_doppler_comm_hz == 0.0);
    CHECK(pre.doppler_comm_hz > 0.0);
    CHECK(pre.comm_snr_db == pre.comm_snr_raw_db);
    s.doppler_precompensated = false;
    const auto raw = evaluate(s);
    CHECK(raw.residual_doppler_comm_hz == raw.doppler_comm_hz);
    CHECK(raw.comm_snr_db < pre.comm_snr_db);
    CHECK(raw.radar_snr_integrated_db < pre.radar_snr_integrated_db);
    CHECK(raw.radar_snr_integrated_db == raw.radar_snr_single_db + raw.integration_gain_db);
}

TEST_CASE("evaluate fills the full ledger") {
    const auto r = evaluate(at_power(9.0));
    CHECK(std::abs(r.fspl_comm_db - 158.89) < 0.01);
    CHECK(std::abs(r.noise_comm_dbw + 123.83) < 0.01);
    CHECK(std::abs(r.noise_sense_dbw + 130.43) < 0.01);
    CHECK(std::abs(r.fspl_target_rx_db - 124.91) < 0.01);
    CHECK(r.radar_snr_integrated_db == r.radar_snr_single_db + r.integration_gain_db);
    CHECK(r.implied_altitude_user_km == doctest::Approx(105.5696).epsilon(1e-5));
    CHECK(r.eirp_dbw == doctest::Approx(31.81));

    const auto comm_only = evaluate(at_power(9.0), false);
    CHECK(comm_only.comm_snr_db == r.comm_snr_db);
    CHECK(std::isnan(comm_only.radar_snr_integrated_db));
}

TEST_CASE("validate names the offending field") {
    auto field_of = [](Scenario s) -> std::string {
        try {
            validate(s);
        } catch (const jcas::domain_error& e) {
            return e.parameter();
        }
        return "";
    };
    Scenario s;
    CHECK(field_of(s).empty());
    s.d_target_rx_km = 0.0;
    CHECK(field_of(s) == "d_target_rx_km");
    s = {};
    s.rcs_m2 = -1.0;
    CHECK(field_of(s) == "rcs_m2");
    s = {};
    s.tx_power_dbw = INFINITY;
    CHECK(field_of(s) == "tx_power_dbw");
    s = {};
    s.n_sense = 300;
    CHECK(field_of(s) == "n_data + n_sense");
    s = {};
    s.elevation_target_deg = 95.0;
    CHECK(field_of(s) == "elevation_target_deg");
    s = {};
    s.n_elements = 0;
    CHECK(field_of(s) == "n_elements");
}
