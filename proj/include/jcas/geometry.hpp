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

// Spherical-Earth orbital geometry. Lengths in km unless the name says
// otherwise, angles in degrees at every public boundary.

namespace jcas::geometry {

/// Line-of-sight distance from a ground point to a satellite at `altitude_km`
/// seen at `elevation_deg` above the horizon.
double slant_range(double altitude_km, double elevation_deg);

/// Altitude that makes `slant_range(altitude, elevation_deg) == slant_km`.
/// Closed-form inverse of slant_range; used only as a diagnostic since link
/// distances are given directly.
double implied_altitude(double slant_km, double elevation_deg);

/// Circular-orbit speed in m/s.
double orbital_speed(double altitude_km);

/// Component of the satellite velocity along the line of sight to a ground
/// point in the orbital plane, m/s. Positive means closing.
double radial_speed(double altitude_km, double elevation_deg);

/// Signed Doppler shift in Hz for a radial speed in m/s.
double doppler_shift(double carrier_hz, double radial_speed_mps);

/// Transmitter-target-receiver path length.
double bistatic_range(double tx_target_km, double target_rx_km);

} // namespace jcas::geometry
