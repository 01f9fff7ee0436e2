// SPDX-License-Identifier: Apache-2.0
//
// crcap: ergodic capacity of spectrum-sharing links in asymmetric fading
// Copyright (C) 2026 crcap contributors
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

#ifndef CRCAP_ERRORS_HPP
#define CRCAP_ERRORS_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace crcap {

// Thrown when a scenario has no closed-form ratio law; use the Monte Carlo path instead.
class NoClosedFormError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best_estimate, double achieved_error)
        : std::runtime_error(what), best_estimate_(best_estimate), achieved_error_(achieved_error) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double achieved_error() const noexcept { return achieved_error_; }

private:
    double best_estimate_;
    double achieved_error_;
};

// The target value of a monotone root search is not reachable.
class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_non_negative(double x, const char* name) {
    if (!(x >= 0.0) || !std::isfinite(x))
        throw std::domain_error(std::string(name) + " must be finite and non-negative");
}

inline void require_positive(double x, const char* name) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error(std::string(name) + " must be finite and positive");
}

} // namespace detail
} // namespace crcap

#endif
