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

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace jcas {

/// Raised when an input lies outside an operation's domain. Carries the name
/// of the offending parameter so callers can report it.
class domain_error : public std::domain_error {
public:
    domain_error(std::string parameter, std::string detail)
        : std::domain_error(parameter + ": " + detail), parameter_(std::move(parameter)),
          detail_(std::move(detail)) {}

    const std::string& parameter() const noexcept { return parameter_; }
    /// Message without the parameter prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string parameter_;
    std::string detail_;
};

/// Malformed configuration text. `line` is 1-based; 0 means the error came
/// from a command-line override rather than a file line.
class config_error : public std::runtime_error {
public:
    config_error(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline void require_positive(double value, const char* name) {
    if (!(value > 0.0)) {
        throw domain_error(name, "must be > 0, got " + std::to_string(value));
    }
}

inline void require_finite(double value, const char* name) {
    if (!std::isfinite(value)) {
        throw domain_error(name, "must be finite");
    }
}

} // namespace detail
} // namespace jcas
