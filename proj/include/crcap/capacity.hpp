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

#ifndef CRCAP_CAPACITY_HPP
#define CRCAP_CAPACITY_HPP

#include "crcap/distributions.hpp"

#include <cstdint>
#include <optional>

namespace crcap {

// Interference-power constraint at the primary receiver(s).
enum class Constraint { AverageReceivedPower, PeakReceivedPower };

enum class CapacityMethod { ClosedFormIntegrand, MonteCarlo };

/// Capacity request in normalized units (B = 1, N0 = 1). `alpha` is the
/// allowable interference-to-noise ratio Q / (N0 B) and `c` the link power
/// ratio E{g1} / E{g0}, both linear.
struct CapacityQuery {
    Constraint constraint = Constraint::PeakReceivedPower;
    double alpha = 1.0;
    RatioScenario scenario{FadingModel::rayleigh(), FadingModel::rayleigh(), 1};
    double c = 1.0;

    // Throws std::domain_error on non-positive alpha or c, and
    // std::invalid_argument for the average constraint with several primaries.
    void validate() const;
};

struct CapacityResult {
    double capacity = 0.0; // bits/s/Hz
    std::optional<double> gamma0; // average constraint only
    double quadrature_error = 0.0;
    CapacityMethod method = CapacityMethod::ClosedFormIntegrand;
    std::optional<double> std_error; // Monte Carlo only
    std::uint64_t samples = 0;
};

// c * alpha: unequal link powers are equivalent to the equal-power laws with
// the noise level scaled to N0 / c.
double effective_alpha(const CapacityQuery& query);

// log2(1 + alpha_eff), the no-fading reference for both constraints.
double awgn_capacity(double alpha_eff);

// Threshold gamma0 of the average-constraint power policy
//   P(g0, g1) = (gamma0 / g0 - 1 / g1)^+,
// the root of int_0^gamma0 F(x) dx = alpha_eff with F the CDF of g0 / g1.
// F comes from the swapped scenario's g1 / g0 law. Single primary only.
double solve_gamma0(const RatioScenario& scenario, double alpha_eff);

// C = int_{1/gamma0}^inf log2(gamma0 x) p(x) dx over the g1/g0 density.
CapacityResult capacity_average(const CapacityQuery& query);

// C = int_0^inf log2(1 + alpha_eff x) p(x) dx over the g1 / max_i g0i density.
CapacityResult capacity_peak(const CapacityQuery& query);

// Sampling estimate of the peak-constraint capacity; works for every scenario,
// including Rician interferers with several primaries.
CapacityResult capacity_peak_mc(const CapacityQuery& query, std::uint64_t samples,
                                std::uint64_t seed);

// Closed-form route for either constraint; NoClosedFormError when none exists.
CapacityResult capacity(const CapacityQuery& query);

} // namespace crcap

#endif
