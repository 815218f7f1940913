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

#include "jcas/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "jcas/errors.hpp"

namespace jcas::config {

namespace {

using linkbudget::Scenario;

/// Thrown by value parsers; turned into config_error with position info.
struct bad_value : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double to_double(std::string_view text) {
    double v = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end || !std::isfinite(v)) {
        throw bad_value("expected a finite number, got '" + std::string(text) + "'");
    }
    return v;
}

std::int64_t to_int(std::string_view text) {
    std::int64_t v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        throw bad_value("expected an integer, got '" + std::string(text) + "'");
    }
    return v;
}

bool to_bool(std::string_view text) {
    if (text == "true" || text == "1" || text == "yes") {
        return true;
    }
    if (text == "false" || text == "0" || text == "no") {
        return false;
    }
    throw bad_value("expected true or false, got '" + std::string(text) + "'");
}

std::vector<std::string_view> split_list(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto pos = std::min(text.find(',', start), text.size());
        const auto item = trim(text.substr(start, pos - start));
        if (item.empty()) {
            throw bad_value("empty list element");
        }
        out.push_back(item);
        start = pos + 1;
    }
    return out;
}

std::string fmt(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string fmt(bool b) { return b ? "true" : "false"; }

enum class Check { any, positive, non_negative, elevation };

void check(double v, Check c) {
    switch (c) {
    case Check::positive:
        if (!(v > 0.0)) {
            throw bad_value("must be > 0");
        }
        break;
    case Check::non_negative:
        if (!(v >= 0.0)) {
            throw bad_value("must be >= 0");
        }
        break;
    case Check::elevation:
        if (!(v >= 0.0 && v <= 90.0)) {
            throw bad_value("must lie in [0, 90] degrees");
        }
        break;
    case Check::any:
        break;
    }
}

struct Field {
    std::string key;
    std::function<void(Config&, std::string_view)> set;
    std::function<std::string(const Config&)> get;
};

Field real(std::string key, double Scenario::*member, Check c) {
    return {std::move(key),
            [member, c](Config& cfg, std::string_view v) {
                const double x = to_double(v);
                check(x, c);
                cfg.spec.base.*member = x;
            },
            [member](const Config& cfg) { return fmt(cfg.spec.base.*member); }};
}

Field count(std::string key, std::int64_t Scenario::*member, std::int64_t min) {
    return {std::move(key),
            [member, min](Config& cfg, std::string_view v) {
                const auto x = to_int(v);
                if (x < min) {
                    throw bad_value("must be >= " + std::to_string(min));
                }
                cfg.spec.base.*member = x;
            },
            [member](const Config& cfg) { return std::to_string(cfg.spec.base.*member); }};
}

Field flag(std::string key, bool Scenario::*member) {
    return {std::move(key),
            [member](Config& cfg, std::string_view v) { cfg.spec.base.*member = to_bool(v); },
            [member](const Config& cfg) { return fmt(cfg.spec.base.*member); }};
}

const std::vector<Field>& fields() {
    static const std::vector<Field> table = [] {
        std::vector<Field> f;
        f.push_back(real("carrier_hz", &Scenario::carrier_hz, Check::positive));
        f.push_back(real("bandwidth_hz", &Scenario::bandwidth_hz, Check::positive));
        f.push_back(count("n_subcarriers", &Scenario::n_subcarriers, 1));
        f.push_back(count("n_data", &Scenario::n_data, 0));
        f.push_back(count("n_sense", &Scenario::n_sense, 0));
        f.push_back(count("n_cp", &Scenario::n_cp, 0));
        f.push_back(real("tx_power_dbw", &Scenario::tx_power_dbw, Check::any));
        f.push_back(real("tx_gain_ref_dbi", &Scenario::tx_gain_ref_dbi, Check::any));
        f.push_back(real("rx_gain_dbi", &Scenario::rx_gain_dbi, Check::any));
        f.push_back(real("radar_rx_gain_dbi", &Scenario::radar_rx_gain_dbi, Check::any));
        f.push_back(count("n_elements", &Scenario::n_elements, 1));
        f.push_back(count("n_elements_ref", &Scenario::n_elements_ref, 1));
        f.push_back({"array_gain_model",
                     [](Config& cfg, std::string_view v) {
                         if (v == "fixed_total_power") {
                             cfg.spec.base.array_gain_model =
                                 linkbudget::ArrayGainModel::fixed_total_power;
                         } else if (v == "per_element_power") {
                             cfg.spec.base.array_gain_model =
                                 linkbudget::ArrayGainModel::per_element_power;
                         } else {
                             throw bad_value("expected fixed_total_power or per_element_power");
                         }
                     },
                     [](const Config& cfg) {
                         return std::string(linkbudget::to_string(cfg.spec.base.array_gain_model));
                     }});
        f.push_back(real("d_sat_user_km", &Scenario::d_sat_user_km, Check::positive));
        f.push_back(real("d_sat_target_km", &Scenario::d_sat_target_km, Check::positive));
        f.push_back(real("d_target_rx_km", &Scenario::d_target_rx_km, Check::positive));
        f.push_back(real("rcs_m2", &Scenario::rcs_m2, Check::positive));
        f.push_back(real("t_integration_s", &Scenario::t_integration_s, Check::non_negative));
        f.push_back(real("noise_temp_k", &Scenario::noise_temp_k, Check::positive));
        f.push_back(real("elevation_user_deg", &Scenario::elevation_user_deg, Check::elevation));
        f.push_back(real("elevation_target_deg", &Scenario::elevation_target_deg, Check::elevation));
        f.push_back(flag("doppler_precompensated", &Scenario::doppler_precompensated));
        f.push_back(real("detection_threshold_db", &Scenario::detection_threshold_db, Check::any));
        f.push_back({"tone_placement",
                     [](Config& cfg, std::string_view v) {
                         if (v == "comb_uniform") {
                             cfg.spec.base.tone_placement = waveform::TonePlacement::comb_uniform;
                         } else if (v == "block_edge") {
                             cfg.spec.base.tone_placement = waveform::TonePlacement::block_edge;
                         } else {
                             throw bad_value("expected comb_uniform or block_edge");
                         }
                     },
                     [](const Config& cfg) {
                         return std::string(waveform::to_string(cfg.spec.base.tone_placement));
                     }});
        f.push_back(flag("rate_cp_overhead", &Scenario::rate_cp_overhead));
        f.push_back(flag("rate_subcarrier_overhead", &Scenario::rate_subcarrier_overhead));
        f.push_back({"power_axis_dbw",
                     [](Config& cfg, std::string_view v) {
                         std::vector<double> axis;
                         for (auto item : split_list(v)) {
                             axis.push_back(to_double(item));
                         }
                         cfg.spec.power_axis_dbw = std::move(axis);
                     },
                     [](const Config& cfg) {
                         std::string out;
                         for (double p : cfg.spec.power_axis_dbw) {
                             out += (out.empty() ? "" : ",") + fmt(p);
                         }
                         return out;
                     }});
        f.push_back({"element_axis",
                     [](Config& cfg, std::string_view v) {
                         std::vector<std::int64_t> axis;
                         for (auto item : split_list(v)) {
                             const auto n = to_int(item);
                             if (n < 1) {
                                 throw bad_value("element counts must be >= 1");
                             }
                             axis.push_back(n);
                         }
                         cfg.spec.element_axis = std::move(axis);
                     },
                     [](const Config& cfg) {
                         std::string out;
                         for (auto n : cfg.spec.element_axis) {
                             out += (out.empty() ? "" : ",") + std::to_string(n);
                         }
                         return out;
                     }});
        f.push_back({"mode",
                     [](Config& cfg, std::string_view v) {
                         const auto m = sweep::mode_from_string(v);
                         if (!m) {
                             throw bad_value(
                                 "expected comm, radar_bistatic, radar_monostatic or all");
                         }
                         cfg.spec.mode = *m;
                     },
                     [](const Config& cfg) { return std::string(sweep::to_string(cfg.spec.mode)); }});
        return f;
    }();
    return table;
}

const Field* find_field(std::string_view key) {
    for (const auto& f : fields()) {
        if (f.key == key) {
            return &f;
        }
    }
    return nullptr;
}

} // namespace

std::string_view to_string(Source s) {
    switch (s) {
    case Source::file:
        return "file";
    case Source::override_value:
        return "override";
    case Source::default_value:
        break;
    }
    return "default";
}

const std::vector<std::string>& known_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const auto& f : fields()) {
            k.push_back(f.key);
        }
        return k;
    }();
    return keys;
}

void set_value(Config& cfg, std::string_view key, std::string_view value, Source source,
               std::size_t line) {
    const auto where = [&](const std::string& msg) {
        return line == 0 ? "override '" + std::string(key) + "': " + msg
                         : "key '" + std::string(key) + "': " + msg;
    };
    const Field* field = find_field(key);
    if (field == nullptr) {
        throw config_error(line, line == 0 ? "override names unknown key '" + std::string(key) + "'"
                                           : "unknown key '" + std::string(key) + "'");
    }
    if (value.empty()) {
        throw config_error(line, where("missing value"));
    }
    try {
        field->set(cfg, value);
    } catch (const bad_value& e) {
        throw config_error(line, where(e.what()));
    }
    cfg.sources[field->key] = source;
}

Config parse(std::istream& in) {
    Config cfg;
    std::set<std::string, std::less<>> seen;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view text = raw;
        if (const auto hash = text.find('#'); hash != std::string_view::npos) {
            text = text.substr(0, hash);
        }
        text = trim(text);
        if (text.empty()) {
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string_view::npos) {
            throw config_error(line, "expected 'key = value', got '" + std::string(text) + "'");
        }
        const auto key = trim(text.substr(0, eq));
        const auto value = trim(text.substr(eq + 1));
        if (key.empty()) {
            throw config_error(line, "missing key before '='");
        }
        if (seen.contains(key)) {
            throw config_error(line, "key '" + std::string(key) + "' given more than once");
        }
        seen.emplace(key);
        set_value(cfg, key, value, Source::file, line);
    }
    return cfg;
}

Config parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse(in);
}

void apply_override(Config& cfg, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos) {
        throw config_error(0, "override '" + std::string(assignment) + "' is not key=value");
    }
    set_value(cfg, trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)),
              Source::override_value, 0);
}

std::vector<std::pair<std::string, std::string>> effective_values(const Config& cfg) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& f : fields()) {
        out.emplace_back(f.key, f.get(cfg));
    }
    return out;
}

} // namespace jcas::config
