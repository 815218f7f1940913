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

#include <algorithm>
#include <string>

#include "jcas/config.hpp"
#include "jcas/errors.hpp"

using namespace jcas::config;

namespace {

std::size_t error_line(std::string_view text) {
    try {
        parse(text);
    } catch (const jcas::config_error& e) {
        return e.line();
    }
    return 0;
}

std::string error_text(std::string_view text) {
    try {
        parse(text);
    } catch (const jcas::config_error& e) {
        return e.what();
    }
    return {};
}

std::string value_of(const Config& cfg, const std::string& key) {
    for (const auto& [k, v] : effective_values(cfg)) {
        if (k == key) {
            return v;
        }
    }
    return "<missing>";
}

Source source_of(const Config& cfg, const std::string& key) {
    const auto it = cfg.sources.find(key);
    return it == cfg.sources.end() ? Source::default_value : it->second;
}

} // namespace

TEST_CASE("empty document yields the defaults") {
    const auto cfg = parse("");
    CHECK(cfg.spec == jcas::sweep::SweepSpec{});
    CHECK(parse("# only a comment\n\n   \n").spec == jcas::sweep::SweepSpec{});
    for (const auto& key : known_keys()) {
        CHECK(source_of(cfg, key) == Source::default_value);
    }
}

TEST_CASE("known keys and effective values line up") {
    const auto& keys = known_keys();
    CHECK(keys.size() == 29);
    const auto values = effective_values(Config{});
    REQUIRE(values.size() == keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
        CHECK(values[i].first == keys[i]);
    }
    CHECK(value_of(Config{}, "carrier_hz") == "4.2e+09");
    CHECK(value_of(Config{}, "d_sat_user_km") == "500");
    CHECK(value_of(Config{}, "power_axis_dbw") == "1,2,3,4,5,6,7,8,9");
    CHECK(value_of(Config{}, "element_axis") == "1,2,4,8,16");
    CHECK(value_of(Config{}, "mode") == "all");
    CHECK(value_of(Config{}, "doppler_precompensated") == "true");
}

TEST_CASE("effective values parse back to the same config") {
    Config cfg = parse("tx_power_dbw = 3.3\nelement_axis = 1, 3\ntone_placement = block_edge\n"
                       "array_gain_model = per_element_power\nmode = comm\nrcs_m2 = 0.1\n");
    std::string text;
    for (const auto& [k, v] : effective_values(cfg)) {
        text += k + " = " + v + "\n";
    }
    CHECK(parse(text).spec == cfg.spec);
}

TEST_CASE("values, comments and whitespace") {
    const auto cfg = parse("# scenario\n"
                           "tx_power_dbw = 9   # trailing comment\n"
                           "\tn_elements=4\n"
                           "power_axis_dbw = 1, 2.5 ,4\n"
                           "doppler_precompensated = false\n"
                           "mode = radar_monostatic\n");
    CHECK(cfg.spec.base.tx_power_dbw == 9.0);
    CHECK(cfg.spec.base.n_elements == 4);
    CHECK(cfg.spec.power_axis_dbw == std::vector<double>{1.0, 2.5, 4.0});
    CHECK_FALSE(cfg.spec.base.doppler_precompensated);
    CHECK(cfg.spec.mode == jcas::sweep::Mode::radar_monostatic);
    CHECK(source_of(cfg, "tx_power_dbw") == Source::file);
    CHECK(source_of(cfg, "carrier_hz") == Source::default_value);
}

TEST_CASE("unknown key is rejected with its line") {
    CHECK(error_line("tx_power_dbw = 1\n\nbogus_key = 3\n") == 3);
    CHECK(error_text("tx_power_dbw = 1\n\nbogus_key = 3\n").find("bogus_key") != std::string::npos);
}

TEST_CASE("repeated key is rejected") {
    CHECK(error_line("n_cp = 72\nn_cp = 72\n") == 2);
}

TEST_CASE("malformed and out-of-range values carry their line") {
    CHECK(error_line("carrier_hz = fast\n") == 1);
    CHECK(error_line("\ncarrier_hz = -1\n") == 2);
    CHECK(error_line("n_subcarriers = 10.5\n") == 1);
    CHECK(error_line("n_subcarriers = 0\n") == 1);
    CHECK(error_line("n_elements = 0\n") == 1);
    CHECK(error_line("elevation_user_deg = 91\n") == 1);
    CHECK(error_line("t_integration_s = -0.1\n") == 1);
    CHECK(error_line("doppler_precompensated = maybe\n") == 1);
    CHECK(error_line("tone_placement = random\n") == 1);
    CHECK(error_line("mode = sonar\n") == 1);
    CHECK(error_line("power_axis_dbw = 1,,2\n") == 1);
    CHECK(error_line("element_axis = 1,0\n") == 1);
    CHECK(error_line("tx_power_dbw\n") == 1);
    CHECK(error_line("= 4\n") == 1);
    CHECK(error_line("tx_power_dbw =\n") == 1);
    CHECK(error_line("rcs_m2 = inf\n") == 1);
}

TEST_CASE("cross-field consistency is left to validation") {
    const auto cfg = parse("n_data = 900\n");
    CHECK(cfg.spec.base.n_data == 900);
    CHECK_THROWS_AS(jcas::linkbudget::validate(cfg.spec.base), jcas::domain_error);
}

TEST_CASE("overrides win over file values and defaults") {
    auto cfg = parse("tx_power_dbw = 5\nn_elements = 2\n");
    apply_override(cfg, "tx_power_dbw=9");
    apply_override(cfg, " rcs_m2 = 10 ");
    CHECK(cfg.spec.base.tx_power_dbw == 9.0);
    CHECK(cfg.spec.base.n_elements == 2);
    CHECK(cfg.spec.base.rcs_m2 == 10.0);
    CHECK(source_of(cfg, "tx_power_dbw") == Source::override_value);
    CHECK(source_of(cfg, "n_elements") == Source::file);
    CHECK(source_of(cfg, "rcs_m2") == Source::override_value);
    CHECK(source_of(cfg, "carrier_hz") == Source::default_value);
    CHECK(to_string(Source::override_value) == "override");
}

TEST_CASE("override errors name the override") {
    Config cfg;
    try {
        apply_override(cfg, "bogus_key=1");
        FAIL("expected error");
    } catch (const jcas::config_error& e) {
        CHECK(e.line() == 0);
        CHECK(std::string(e.what()).find("bogus_key") != std::string::npos);
    }
    CHECK_THROWS_AS(apply_override(cfg, "tx_power_dbw"), jcas::config_error);
    CHECK_THROWS_AS(apply_override(cfg, "n_elements=-3"), jcas::config_error);
    CHECK(cfg.spec == jcas::sweep::SweepSpec{});
}
