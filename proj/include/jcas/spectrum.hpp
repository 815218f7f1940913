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
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace jcas::spectrum {

enum class Service { communications, active_sensing };

std::string_view to_string(Service s);

/// Band labels used by the communication and radar allocation tables.
/// "Q-V" is a single label.
bool is_known_band_letter(std::string_view letter);

/// Sensor columns of the radar allocation table.
enum class Sensor { scatterometer, altimeter, sar, precipitation_radar, cloud_profile_radar };

std::string_view to_string(Sensor s);
std::optional<Sensor> sensor_from_string(std::string_view s);

struct BandRecord {
    Service service = Service::communications;
    std::string band_letter;
    std::int64_t low_hz = 0;
    std::int64_t high_hz = 0;
    /// Traditional applications for communication bands, empty for radar rows.
    std::string applications;
    /// Assigned bandwidth per sensor, kept verbatim ("20-85 MHz"). Blank
    /// cells are absent, not zero.
    std::map<Sensor, std::string> sensor_bandwidths;

    double low_ghz() const { return static_cast<double>(low_hz) * 1e-9; }
    double high_ghz() const { return static_cast<double>(high_hz) * 1e-9; }
    bool contains_hz(double hz) const;
    bool overlaps_hz(double lo_hz, double hi_hz) const;

    friend bool operator==(const BandRecord&, const BandRecord&) = default;
};

enum class Verdict { comm_only, jcas_colocated, unallocated };

std::string_view to_string(Verdict v);

struct PairingReport {
    std::optional<BandRecord> comm_band;
    std::vector<BandRecord> overlapping_radar_allocations;
    Verdict verdict = Verdict::unallocated;
};

/// Immutable band database. Records keep file order; lookups never mutate.
class Registry {
public:
    /// Parses the line format written by `serialize`:
    ///
    ///   service|band_letter|low_hz|high_hz|notes
    ///
    /// `service` is `communications` or `active_sensing`. For communication
    /// rows `notes` is the applications text. For radar rows it is a `;`
    /// separated list of `sensor=bandwidth` pairs, possibly empty. Blank
    /// lines and lines starting with `#` are skipped. Throws config_error
    /// with the 1-based line number on malformed input.
    static Registry parse(std::istream& in);
    static Registry parse(std::string_view text);

    /// Registry built from the band database compiled into the library.
    static const Registry& builtin();

    void serialize(std::ostream& out) const;

    const std::vector<BandRecord>& records() const { return records_; }
    std::vector<BandRecord> comm_bands() const;
    std::vector<BandRecord> radar_allocations() const;

    std::optional<BandRecord> lookup_comm_band(double freq_ghz) const;
    std::vector<BandRecord> lookup_radar_allocations(double low_ghz, double high_ghz) const;
    PairingReport check_jcas_pairing(double carrier_ghz, double bandwidth_mhz) const;

    /// All records carrying `letter` (exact, case-insensitive), comm rows first.
    std::vector<BandRecord> by_letter(std::string_view letter) const;

private:
    std::vector<BandRecord> records_;
};

/// Raw text of the embedded band database.
std::string_view builtin_band_text();

} // namespace jcas::spectrum
