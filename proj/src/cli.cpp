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

#include "jcas/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>

#include "jcas/errors.hpp"
#include "jcas/sweep.hpp"

namespace jcas::cli {

namespace {

std::string fixed2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string general(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string ghz(std::int64_t hz) { return general(static_cast<double>(hz) * 1e-9, 10); }
std::string mhz(std::int64_t hz) { return general(static_cast<double>(hz) * 1e-6, 10); }

constexpr const char* en_dash = "–";

std::string comm_label(const spectrum::BandRecord& r) {
    return r.band_letter + "-Band " + ghz(r.low_hz) + en_dash + ghz(r.high_hz) + " GHz";
}

std::string radar_label(const spectrum::BandRecord& r) {
    return r.band_letter + " " + mhz(r.low_hz) + en_dash + mhz(r.high_hz) + " MHz";
}

std::string sensors(const spectrum::BandRecord& r) {
    std::string out;
    for (const auto& [sensor, bw] : r.sensor_bandwidths) {
        out += (out.empty() ? "" : ", ") + std::string(spectrum::to_string(sensor)) + " " + bw;
    }
    return out;
}

void line(std::ostream& out, std::string_view key, const std::string& value) {
    out << key << " = " << value << '\n';
}

config::Config load(const std::string& path, const std::vector<std::string>& overrides) {
    config::Config cfg;
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) {
            throw config_error(0, "cannot open config file '" + path + "'");
        }
        cfg = config::parse(in);
    }
    for (const auto& o : overrides) {
        config::apply_override(cfg, o);
    }
    return cfg;
}

std::optional<double> as_number(std::string_view text) {
    double v = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        return std::nullopt;
    }
    return v;
}

} // namespace

void cmd_simulate(const config::Config& cfg, std::ostream& out) {
    const auto& s = cfg.spec.base;
    const auto mode = cfg.spec.mode;
    const auto point = sweep::run_point(s, mode);
    const auto& l = point.link;
    const auto& p = point.perf;

    out << "# effective configuration (default < file < override)\n";
    for (const auto& [key, value] : config::effective_values(cfg)) {
        const auto it = cfg.sources.find(key);
        const auto source = it == cfg.sources.end() ? config::Source::default_value : it->second;
        out << key << " = " << value << "  # " << config::to_string(source) << '\n';
    }

    out << "# communications link\n";
    line(out, "wavelength_m", general(l.wavelength_m));
    line(out, "tx_power_dbw", fixed2(s.tx_power_dbw));
    line(out, "tx_array_gain_dbi", fixed2(l.tx_array_gain_dbi));
    line(out, "eirp_dbw", fixed2(l.eirp_dbw));
    line(out, "rx_gain_dbi", fixed2(s.rx_gain_dbi));
    line(out, "fspl_comm_db", fixed2(l.fspl_comm_db));
    line(out, "noise_comm_dbw", fixed2(l.noise_comm_dbw));
    line(out, "comm_snr_raw_db", fixed2(l.comm_snr_raw_db));
    line(out, "doppler_comm_hz", general(l.doppler_comm_hz));
    line(out, "residual_doppler_comm_hz", general(l.residual_doppler_comm_hz));
    line(out, "comm_snr_db", fixed2(l.comm_snr_db));
    line(out, "shannon_rate_bps", general(p.shannon_rate_bps, 9));
    line(out, "qpsk_capped_rate_bps", general(p.qpsk_capped_rate_bps, 9));

    if (mode == sweep::Mode::comm) {
        out << "# sensing link not evaluated (mode = comm)\n";
        return;
    }
    out << "# bistatic sensing link\n";
    line(out, "sense_power_split_db", fixed2(l.sense_power_split_db));
    line(out, "radar_rx_gain_dbi", fixed2(s.radar_rx_gain_dbi));
    line(out, "fspl_sat_target_db", fixed2(l.fspl_sat_target_db));
    line(out, "fspl_target_rx_db", fixed2(l.fspl_target_rx_db));
    line(out, "radar_rx_power_dbw", fixed2(l.radar_rx_power_dbw));
    line(out, "noise_sense_dbw", fixed2(l.noise_sense_dbw));
    line(out, "doppler_sense_hz", general(l.doppler_sense_hz));
    line(out, "residual_doppler_sense_hz", general(l.residual_doppler_sense_hz));
    line(out, "radar_snr_single_db", fixed2(l.radar_snr_single_db));
    line(out, "integration_symbols", std::to_string(l.integration_symbols));
    line(out, "integration_gain_db", fixed2(l.integration_gain_db));
    line(out, "radar_snr_integrated_db", fixed2(l.radar_snr_integrated_db));
    out << "# monostatic sensing link\n";
    line(out, "mono_snr_single_db", fixed2(l.mono_snr_single_db));
    line(out, "mono_snr_integrated_db", fixed2(l.mono_snr_integrated_db));
    line(out, "mono_detection_feasible",
         performance::detection_feasible(l.mono_snr_integrated_db, s.detection_threshold_db)
             ? "true"
             : "false");
    out << "# range estimation (" << sweep::to_string(mode) << ")\n";
    line(out, "rms_bandwidth_hz", general(p.rms_bandwidth_hz, 9));
    line(out, "delay_variance_s2", general(p.delay_variance_s2, 9));
    line(out, "range_mse_m2", general(p.range_mse_m2, 9));
    line(out, "range_rmse_m", general(p.range_rmse_m, 9));
    line(out, "detection_threshold_db", fixed2(s.detection_threshold_db));
    line(out, "detection_feasible", p.detection_feasible ? "true" : "false");
    out << "# geometry diagnostics\n";
    line(out, "implied_altitude_user_km", general(l.implied_altitude_user_km));
    line(out, "implied_altitude_target_km", general(l.implied_altitude_target_km));
}

void cmd_sweep(const config::Config& cfg, const std::string& out_path, std::ostream& out,
               unsigned threads) {
    const auto table = sweep::run_sweep(cfg.spec, {.threads = threads});
    sweep::emit_csv(table, out_path);

    auto range = [&](auto member) {
        double lo = INFINITY;
        double hi = -INFINITY;
        for (const auto& r : table.rows) {
            const double v = r.perf.*member;
            if (std::isfinite(v)) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        }
        return lo > hi ? std::string("n/a")
                       : "min=" + general(lo, 9) + " max=" + general(hi, 9);
    };
    out << "wrote " << table.rows.size() << " rows to " << out_path
        << "; shannon_rate_bps " << range(&performance::PerformanceResult::shannon_rate_bps)
        << "; range_rmse_m " << range(&performance::PerformanceResult::range_rmse_m) << '\n';
}

void cmd_bands(std::string_view query, double bandwidth_mhz, const spectrum::Registry& registry,
               std::ostream& out) {
    if (const auto freq = as_number(query)) {
        const auto report = registry.check_jcas_pairing(*freq, bandwidth_mhz);
        out << (report.comm_band ? comm_label(*report.comm_band) : "no communication band")
            << "; radar allocations overlapping carrier: ";
        if (report.overlapping_radar_allocations.empty()) {
            out << "none";
        }
        bool first = true;
        for (const auto& r : report.overlapping_radar_allocations) {
            out << (first ? "" : ", ") << radar_label(r);
            first = false;
        }
        out << "; verdict: " << spectrum::to_string(report.verdict) << '\n';
        if (report.comm_band) {
            out << "  applications: " << report.comm_band->applications << '\n';
        }
        for (const auto& r : report.overlapping_radar_allocations) {
            out << "  " << radar_label(r) << ": " << sensors(r) << '\n';
        }
        return;
    }

    const auto records = registry.by_letter(query);
    if (records.empty()) {
        throw domain_error("band", "unknown band letter '" + std::string(query) + "'");
    }
    for (const auto& r : records) {
        if (r.service == spectrum::Service::communications) {
            out << "communications  " << comm_label(r) << ": " << r.applications << '\n';
        } else {
            out << "active_sensing  " << radar_label(r) << ": " << sensors(r) << '\n';
        }
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Link-level simulator for bistatic JCAS LEO satellite downlinks", "jcas-sim"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> overrides;
    std::string mode_text;
    std::string out_path;
    unsigned threads = 0;
    std::string query;
    double bandwidth_mhz = 100.0;
    std::string band_db;

    const std::vector<std::string> modes{"comm", "radar_bistatic", "radar_monostatic", "all"};

    auto* simulate = app.add_subcommand("simulate", "Evaluate one scenario and print the link budget");
    simulate->add_option("--config", config_path, "Config file (key = value lines)");
    simulate->add_option("--set", overrides, "Override one key, key=value (repeatable)");
    simulate->add_option("--mode", mode_text, "Radar geometry for the range error")
        ->check(CLI::IsMember(modes));

    auto* sweep_cmd = app.add_subcommand("sweep", "Sweep power x elements and write CSV");
    sweep_cmd->add_option("--config", config_path, "Config file (key = value lines)");
    sweep_cmd->add_option("--set", overrides, "Override one key, key=value (repeatable)");
    sweep_cmd->add_option("--mode", mode_text, "Which results fill the radar columns")
        ->check(CLI::IsMember(modes));
    sweep_cmd->add_option("--out", out_path, "CSV destination")->required();
    sweep_cmd->add_option("--threads", threads, "Worker threads, 0 = all cores");

    auto* bands = app.add_subcommand("bands", "Look up a frequency (GHz) or band letter");
    bands->add_option("query", query, "Frequency in GHz or band letter")->required();
    bands->add_option("--bandwidth-mhz", bandwidth_mhz, "Occupied bandwidth for pairing checks");
    bands->add_option("--db", band_db, "Band database file instead of the built-in one");

    std::vector<const char*> argv{"jcas-sim"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error[config]: " << e.what() << '\n';
        return exit_config_error;
    }

    try {
        if (*bands) {
            if (band_db.empty()) {
                cmd_bands(query, bandwidth_mhz, spectrum::Registry::builtin(), out);
            } else {
                std::ifstream in(band_db);
                if (!in) {
                    throw config_error(0, "cannot open band database '" + band_db + "'");
                }
                cmd_bands(query, bandwidth_mhz, spectrum::Registry::parse(in), out);
            }
            return exit_ok;
        }
        auto cfg = load(config_path, overrides);
        if (!mode_text.empty()) {
            cfg.spec.mode = *sweep::mode_from_string(mode_text);
            cfg.sources["mode"] = config::Source::override_value;
        }
        if (*simulate) {
            cmd_simulate(cfg, out);
        } else {
            cmd_sweep(cfg, out_path, out, threads);
        }
        return exit_ok;
    } catch (const config_error& e) {
        err << "error[config]: " << e.what() << '\n';
        return exit_config_error;
    } catch (const domain_error& e) {
        err << "error[domain]: " << e.what() << '\n';
        return exit_domain_error;
    } catch (const std::exception& e) {
        err << "error[io]: " << e.what() << '\n';
        return exit_domain_error;
    }
}

} // namespace jcas::cli
