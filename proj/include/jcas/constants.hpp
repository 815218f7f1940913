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

#include <numbers>

namespace jcas::constants {

inline constexpr double speed_of_light = 299792458.0;   // m/s
inline constexpr double boltzmann = 1.380649e-23;       // J/K
inline constexpr double mu_earth = 3.986004418e14;      // m^3/s^2
inline constexpr double earth_radius_km = 6371.0;
inline constexpr double pi = std::numbers::pi;

/// Bumped whenever any pinned constant changes; part of every sweep fingerprint.
inline constexpr const char* version = "constants-v1";

} // namespace jcas::constants
