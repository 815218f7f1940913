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

#include "jcas/geometry.hpp"

#include <cmath>
#include <string>

#include "jcas/constants.hpp"
#include "jcas/errors.hpp"

namespace jcas::geometry {

namespace {

constexpr double deg_to_rad = constants::pi / 180.0;

void require_elevation(double elevation_deg) {
    if (!(elevation_deg >= 0.0 && elevation_deg <= 90.0)) {
        throw domain_error("elevation_deg",
                           "must lie in [0, 90], got " + std::to_string(elevation_deg));
    }
}

} // namespace

double slant_range(double altitude_km, double elevation_deg) {
    detail::require_positive(altitude_km, "altitude_km");
    require_elevation(elevation_deg);
    const double re = constants::earth_radius_km;
    const double re_sin = re * std::sin(elevation_deg * deg_to_rad);
    if (elevation_deg == 90.0) {
        return altitude_km;
    }
    return -re_sin + std::sqrt(re_sin * re_sin + altitude_km * altitude_km + 2.0 * re * altitude_km);
}

double implied_altitude(double slant_km, double elevation_deg) {
    detail::require_positive(slant_km, "slant_km");
    require_elevation(elevation_deg);
    const double re = constants::earth_radius_km;
    const double sin_e = std::sin(elevation_deg * deg_to_rad);
    // Law of cosines in the Earth-centre / ground point / satellite triangle.
    return std::sqrt(re * re + slant_km * slant_km + 2.0 * re * slant_km * sin_e) - re;
}

double orbital_speed(double altitude_km) {
    detail::require_positive(altitude_km, "altitude_km");
    return std::sqrt(constants::mu_earth / ((constants::earth_radius_km + altitude_km) * 1000.0));
}

double radial_speed(double altitude_km, double elevation_deg) {
    require_elevation(elevation_deg);
    const double v = orbital_speed(altitude_km);
    const double re = constants::earth_radius_km;
    // Pass through the ground point's zenith: the velocity makes an angle
    // with the line of sight whose cosine is Re cos(e) / (Re + h).
    return v * re * std::cos(elevation_deg * deg_to_rad) / (re + altitude_km);
}

double doppler_shift(double carrier_hz, double radial_speed_mps) {
    detail::require_positive(carrier_hz, "carrier_hz");
    detail::require_finite(radial_speed_mps, "radial_speed_mps");
    return carrier_hz * radial_speed_mps / constants::speed_of_light;
}

double bistatic_range(double tx_target_km, double target_rx_km) {
    detail::require_positive(tx_target_km, "tx_target_km");
    detail::require_positive(target_rx_km, "target_rx_km");
    return tx_target_km + target_rx_km;
}

} // namespace jcas::geometry
