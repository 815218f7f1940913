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

#include "jcas/spectrum.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "jcas/errors.hpp"

namespace jcas::spectrum {

namespace {

constexpr std::array<std::string_view, 11> band_letters = {"L", "S", "C",  "X", "Ku", "K",
                                                           "Ka", "Q-V", "P", "W", "G"};

constexpr std::array<std::pair<Sensor, std::string_view>, 5> sensor_names = {{
    {Sensor::scatterometer, "scatterometer"},
    {Sensor::altimeter, "altimeter"},
    {Sensor::sar, "sar"},
    {Sensor::precipitation_radar, "precipitation_radar"},
    {Sensor::cloud_profile_radar, "cloud_profile_radar"},
}};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) ==
                      std::tolower(static_cast<unsigned char>(y));
           });
}

std::int64_t parse_hz(std::string_view field, std::size_t line, const char* what) {
    std::int64_t value = 0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc{} || ptr != end || value <= 0) {
        throw config_error(line, std::string(what) + " is not a positive integer Hz value: '" +
                                     std::string(field) + "'");
    }
    return value;
}

BandRecord parse_record(std::string_view text, std::size_t line) {
    const auto fields = split(text, '|');
    if (fields.size() != 5) {
        throw config_error(line, "expected 5 '|'-separated fields, got " +
                                     std::to_string(fields.size()));
    }
    BandRecord r;
    const auto service = trim(fields[0]);
    if (service == "communications") {
        r.service = Service::communications;
    } else if (service == "active_sensing") {
        r.service = Service::active_sensing;
    } else {
        throw config_error(line, "unknown service '" + std::string(service) + "'");
    }
    r.band_letter = std::string(trim(fields[1]));
    if (!is_known_band_letter(r.band_letter)) {
        throw config_error(line, "unknown band letter '" + r.band_letter + "'");
    }
    r.low_hz = parse_hz(trim(fields[2]), line, "low_hz");
    r.high_hz = parse_hz(trim(fields[3]), line, "high_hz");
    if (r.low_hz >= r.high_hz) {
        throw config_error(line, "low_hz must be below high_hz");
    }
    const auto notes = trim(fields[4]);
    if (r.service == Service::communications) {
        r.applications = std::string(notes);
        return r;
    }
    if (!notes.empty()) {
        for (auto pair : split(notes, ';')) {
            const auto eq = pair.find('=');
            if (eq == std::string_view::npos) {
                throw config_error(line, "sensor entry without '=': '" + std::string(pair) + "'");
            }
            const auto sensor = sensor_from_string(trim(pair.substr(0, eq)));
            const auto bandwidth = trim(pair.substr(eq + 1));
            if (!sensor || bandwidth.empty()) {
                throw config_error(line, "bad sensor entry '" + std::string(pair) + "'");
            }
            if (!r.sensor_bandwidths.emplace(*sensor, std::string(bandwidth)).second) {
                throw config_error(line, "duplicate sensor '" +
                                             std::string(to_string(*sensor)) + "'");
            }
        }
    }
    if (r.sensor_bandwidths.empty()) {
        throw config_error(line, "active_sensing record needs at least one sensor bandwidth");
    }
    return r;
}

std::int64_t ghz_to_hz(double ghz) { return std::llround(ghz * 1e9); }

} // namespace

std::string_view to_string(Service s) {
    return s == Service::communications ? "communications" : "active_sensing";
}

bool is_known_band_letter(std::string_view letter) {
    return std::find(band_letters.begin(), band_letters.end(), letter) != band_letters.end();
}

std::string_view to_string(Sensor s) {
    for (const auto& [sensor, name] : sensor_names) {
        if (sensor == s) {
            return name;
        }
    }
    return "unknown";
}

std::optional<Sensor> sensor_from_string(std::string_view s) {
    for (const auto& [sensor, name] : sensor_names) {
        if (name == s) {
            return sensor;
        }
    }
    return std::nullopt;
}

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::comm_only:
        return "comm_only";
    case Verdict::jcas_colocated:
        return "jcas_colocated";
    case Verdict::unallocated:
        break;
    }
    return "unallocated";
}

bool BandRecord::contains_hz(double hz) const {
    return static_cast<double>(low_hz) <= hz && hz <= static_cast<double>(high_hz);
}

bool BandRecord::overlaps_hz(double lo_hz, double hi_hz) const {
    return static_cast<double>(low_hz) <= hi_hz && lo_hz <= static_cast<double>(high_hz);
}

Registry Registry::parse(std::istream& in) {
    Registry reg;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto text = trim(raw);
        if (text.empty() || text.front() == '#') {
            continue;
        }
        reg.records_.push_back(parse_record(text, line));
    }
    return reg;
}

Registry Registry::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse(in);
}

const Registry& Registry::builtin() {
    static const Registry reg = parse(builtin_band_text());
    return reg;
}

void Registry::serialize(std::ostream& out) const {
    for (const auto& r : records_) {
        out << to_string(r.service) << '|' << r.band_letter << '|' << r.low_hz << '|' << r.high_hz
            << '|';
        if (r.service == Service::communications) {
            out << r.applications;
        } else {
            bool first = true;
            for (const auto& [sensor, bw] : r.sensor_bandwidths) {
                out << (first ? "" : ";") << to_string(sensor) << '=' << bw;
                first = false;
            }
        }
        out << '\n';
    }
}

std::vector<BandRecord> Registry::comm_bands() const {
    std::vector<BandRecord> out;
    std::copy_if(records_.begin(), records_.end(), std::back_inserter(out),
                 [](const BandRecord& r) { return r.service == Service::communications; });
    return out;
}

std::vector<BandRecord> Registry::radar_allocations() const {
    std::vector<BandRecord> out;
    std::copy_if(records_.begin(), records_.end(), std::back_inserter(out),
                 [](const BandRecord& r) { return r.service == Service::active_sensing; });
    return out;
}

std::optional<BandRecord> Registry::lookup_comm_band(double freq_ghz) const {
    detail::require_positive(freq_ghz, "freq_ghz");
    const auto hz = static_cast<double>(ghz_to_hz(freq_ghz));
    for (const auto& r : records_) {
        if (r.service == Service::communications && r.contains_hz(hz)) {
            return r;
        }
    }
    return std::nullopt;
}

std::vector<BandRecord> Registry::lookup_radar_allocations(double low_ghz, double high_ghz) const {
    detail::require_finite(low_ghz, "freq_low_ghz");
    detail::require_finite(high_ghz, "freq_high_ghz");
    if (!(low_ghz < high_ghz)) {
        throw domain_error("freq_low_ghz", "range is inverted or empty");
    }
    const auto lo = static_cast<double>(ghz_to_hz(low_ghz));
    const auto hi = static_cast<double>(ghz_to_hz(high_ghz));
    std::vector<BandRecord> out;
    for (const auto& r : records_) {
        if (r.service == Service::active_sensing && r.overlaps_hz(lo, hi)) {
            out.push_back(r);
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const BandRecord& a, const BandRecord& b) { return a.low_hz < b.low_hz; });
    return out;
}

PairingReport Registry::check_jcas_pairing(double carrier_ghz, double bandwidth_mhz) const {
    detail::require_positive(carrier_ghz, "carrier_ghz");
    detail::require_positive(bandwidth_mhz, "bandwidth_mhz");
    const double half_ghz = bandwidth_mhz * 1e-3 / 2.0;
    PairingReport report;
    report.comm_band = lookup_comm_band(carrier_ghz);
    report.overlapping_radar_allocations =
        lookup_radar_allocations(std::max(carrier_ghz - half_ghz, 0.0), carrier_ghz + half_ghz);
    if (!report.comm_band) {
        report.verdict = Verdict::unallocated;
    } else if (report.overlapping_radar_allocations.empty()) {
        report.verdict = Verdict::comm_only;
    } else {
        report.verdict = Verdict::jcas_colocated;
    }
    return report;
}

std::vector<BandRecord> Registry::by_letter(std::string_view letter) const {
    std::vector<BandRecord> out;
    for (auto service : {Service::communications, Service::active_sensing}) {
        for (const auto& r : records_) {
            if (r.service == service && iequals(r.band_letter, letter)) {
                out.push_back(r);
            }
        }
    }
    return out;
}

} // namespace jcas::spectrum
