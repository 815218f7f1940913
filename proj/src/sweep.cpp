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

#include "jcas/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <charconv>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <exception>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "jcas/constants.hpp"
#include "jcas/errors.hpp"

namespace jcas::sweep {

namespace {

std::string format_g(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

/// Shortest text that reads back to exactly `v`.
std::string exact(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string fnv1a_hex(std::string_view text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

void append(std::string& out, std::string_view key, const std::string& value) {
    out.append(key).append("=").append(value).append("\n");
}

std::string constants_text() {
    std::string out;
    append(out, "constants_version", constants::version);
    append(out, "speed_of_light", exact(constants::speed_of_light));
    append(out, "boltzmann", exact(constants::boltzmann));
    append(out, "mu_earth", exact(constants::mu_earth));
    append(out, "earth_radius_km", exact(constants::earth_radius_km));
    return out;
}

} // namespace

std::string_view to_string(Mode m) {
    switch (m) {
    case Mode::comm:
        return "comm";
    case Mode::radar_bistatic:
        return "radar_bistatic";
    case Mode::radar_monostatic:
        return "radar_monostatic";
    case Mode::all:
        break;
    }
    return "all";
}

std::optional<Mode> mode_from_string(std::string_view s) {
    for (auto m : {Mode::comm, Mode::radar_bistatic, Mode::radar_monostatic, Mode::all}) {
        if (to_string(m) == s) {
            return m;
        }
    }
    return std::nullopt;
}

PointResult run_point(const linkbudget::Scenario& s, Mode mode) {
    const bool with_radar = mode != Mode::comm;
    PointResult out;
    out.link = linkbudget::evaluate(s, with_radar);

    const auto num = waveform::numerology(s.bandwidth_hz, s.n_subcarriers, s.n_cp);
    const auto plan = waveform::partition(s.n_subcarriers, s.n_data, s.n_sense);
    const auto rate = performance::achievable_rate(
        out.link.comm_snr_db, plan, num,
        {.cp_overhead = s.rate_cp_overhead, .subcarrier_overhead = s.rate_subcarrier_overhead});
    out.perf.shannon_rate_bps = rate.shannon_bps;
    out.perf.qpsk_capped_rate_bps = rate.qpsk_capped_bps;

    if (!with_radar) {
        constexpr double nan = std::numeric_limits<double>::quiet_NaN();
        out.perf.rms_bandwidth_hz = nan;
        out.perf.delay_variance_s2 = nan;
        out.perf.range_mse_m2 = nan;
        out.perf.range_rmse_m = nan;
        out.perf.detection_feasible = false;
        return out;
    }

    const double post_snr = mode == Mode::radar_monostatic ? out.link.mono_snr_integrated_db
                                                           : out.link.radar_snr_integrated_db;
    out.perf.rms_bandwidth_hz = waveform::sensing_rms_bandwidth(plan, num, s.tone_placement);
    out.perf.delay_variance_s2 = performance::delay_crlb(post_snr, out.perf.rms_bandwidth_hz);
    const auto err = performance::range_mse(out.perf.delay_variance_s2);
    out.perf.range_mse_m2 = err.mse_m2;
    out.perf.range_rmse_m = err.rmse_m;
    out.perf.detection_feasible = performance::detection_feasible(post_snr, s.detection_threshold_db);
    return out;
}

std::string canonical_text(const linkbudget::Scenario& s) {
    std::string out;
    append(out, "carrier_hz", exact(s.carrier_hz));
    append(out, "bandwidth_hz", exact(s.bandwidth_hz));
    append(out, "n_subcarriers", std::to_string(s.n_subcarriers));
    append(out, "n_data", std::to_string(s.n_data));
    append(out, "n_sense", std::to_string(s.n_sense));
    append(out, "n_cp", std::to_string(s.n_cp));
    append(out, "tx_power_dbw", exact(s.tx_power_dbw));
    append(out, "tx_gain_ref_dbi", exact(s.tx_gain_ref_dbi));
    append(out, "rx_gain_dbi", exact(s.rx_gain_dbi));
    append(out, "radar_rx_gain_dbi", exact(s.radar_rx_gain_dbi));
    append(out, "n_elements", std::to_string(s.n_elements));
    append(out, "n_elements_ref", std::to_string(s.n_elements_ref));
    append(out, "array_gain_model", std::string(linkbudget::to_string(s.array_gain_model)));
    append(out, "d_sat_user_km", exact(s.d_sat_user_km));
    append(out, "d_sat_target_km", exact(s.d_sat_target_km));
    append(out, "d_target_rx_km", exact(s.d_target_rx_km));
    append(out, "rcs_m2", exact(s.rcs_m2));
    append(out, "t_integration_s", exact(s.t_integration_s));
    append(out, "noise_temp_k", exact(s.noise_temp_k));
    append(out, "elevation_user_deg", exact(s.elevation_user_deg));
    append(out, "elevation_target_deg", exact(s.elevation_target_deg));
    append(out, "doppler_precompensated", s.doppler_precompensated ? "true" : "false");
    append(out, "detection_threshold_db", exact(s.detection_threshold_db));
    append(out, "tone_placement", std::string(waveform::to_string(s.tone_placement)));
    append(out, "rate_cp_overhead", s.rate_cp_overhead ? "true" : "false");
    append(out, "rate_subcarrier_overhead", s.rate_subcarrier_overhead ? "true" : "false");
    out += constants_text();
    return out;
}

std::string canonical_text(const SweepSpec& spec) {
    std::string out = canonical_text(spec.base);
    std::string powers;
    for (double p : spec.power_axis_dbw) {
        powers += (powers.empty() ? "" : ",") + exact(p);
    }
    std::string elements;
    for (auto n : spec.element_axis) {
        elements += (elements.empty() ? "" : ",") + std::to_string(n);
    }
    append(out, "power_axis_dbw", powers);
    append(out, "element_axis", elements);
    append(out, "mode", std::string(to_string(spec.mode)));
    return out;
}

std::string fingerprint(const linkbudget::Scenario& s) { return fnv1a_hex(canonical_text(s)); }
std::string fingerprint(const SweepSpec& spec) { return fnv1a_hex(canonical_text(spec)); }

ResultTable run_sweep(const SweepSpec& spec, RunOptions options) {
    if (spec.power_axis_dbw.empty()) {
        throw domain_error("power_axis_dbw", "axis is empty");
    }
    if (spec.element_axis.empty()) {
        throw domain_error("element_axis", "axis is empty");
    }

    ResultTable table;
    table.fingerprint = fingerprint(spec);
    table.constants_version = constants::version;
    for (auto n : spec.element_axis) {
        for (double p : spec.power_axis_dbw) {
            ResultRow row;
            row.n_elements = n;
            row.tx_power_dbw = p;
            row.mode = spec.mode;
            table.rows.push_back(row);
        }
    }
    std::stable_sort(table.rows.begin(), table.rows.end(), [](const ResultRow& a, const ResultRow& b) {
        return a.n_elements != b.n_elements ? a.n_elements < b.n_elements
                                            : a.tx_power_dbw < b.tx_power_dbw;
    });

    const std::size_t count = table.rows.size();
    std::vector<std::exception_ptr> errors(count);
    auto evaluate_row = [&](std::size_t i) {
        auto& row = table.rows[i];
        auto s = spec.base;
        s.tx_power_dbw = row.tx_power_dbw;
        s.n_elements = row.n_elements;
        try {
            auto point = run_point(s, spec.mode);
            row.link = point.link;
            row.perf = point.perf;
        } catch (const domain_error& e) {
            errors[i] = std::make_exception_ptr(domain_error(
                e.parameter(), e.detail() + " (at tx_power_dbw=" + format_g(row.tx_power_dbw, 9) +
                                   ", n_elements=" + std::to_string(row.n_elements) + ")"));
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };

    unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                            : options.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            evaluate_row(i);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    evaluate_row(i);
                }
            });
        }
    }

    // Report the first failing point in table order, whatever finished first.
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return table;
}

void write_csv(const ResultTable& t, std::ostream& out) {
    out << "# " << tool_version << " sweep results\n";
    out << "# fingerprint: " << t.fingerprint << '\n';
    out << "# constants: " << t.constants_version << " c=" << exact(constants::speed_of_light)
        << " k_B=" << exact(constants::boltzmann) << " mu_earth=" << exact(constants::mu_earth)
        << " earth_radius_km=" << exact(constants::earth_radius_km) << '\n';
    out << csv_header << '\n';
    for (const auto& r : t.rows) {
        const bool radar = r.mode != Mode::comm;
        auto cell = [&](double v) { return radar ? format_g(v, 9) : std::string(); };
        out << r.n_elements << ',' << format_g(r.tx_power_dbw, 9) << ','
            << format_g(r.link.comm_snr_db, 9) << ',' << format_g(r.perf.shannon_rate_bps, 9)
            << ',' << format_g(r.perf.qpsk_capped_rate_bps, 9) << ','
            << cell(r.mode == Mode::radar_monostatic ? r.link.mono_snr_single_db
                                                     : r.link.radar_snr_single_db)
            << ','
            << cell(r.mode == Mode::radar_monostatic ? r.link.mono_snr_integrated_db
                                                     : r.link.radar_snr_integrated_db)
            << ',' << cell(r.perf.range_mse_m2) << ',' << cell(r.perf.range_rmse_m) << ','
            << (radar ? (r.perf.detection_feasible ? "true" : "false") : "") << ','
            << to_string(r.mode) << '\n';
    }
}

void emit_csv(const ResultTable& t, const std::filesystem::path& destination) {
    std::ostringstream buffer;
    write_csv(t, buffer);
    const std::string text = buffer.str();

    std::ofstream file(destination, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw std::runtime_error("cannot open '" + destination.string() +
                                 "' for writing: " + std::strerror(errno));
    }
    file.write(text.data(), static_cast<std::streamsize>(text.size()));
    file.close();
    if (!file) {
        throw std::runtime_error("write to '" + destination.string() +
                                 "' failed: " + std::strerror(errno));
    }
}

} // namespace jcas::sweep
