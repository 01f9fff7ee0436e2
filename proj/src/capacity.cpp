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

#include "crcap/capacity.hpp"

#include "crcap/errors.hpp"
#include "crcap/mc.hpp"
#include "crcap/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace crcap {
namespace {

constexpr double kInvLn2 = 1.0 / std::numbers::ln2;

// Tighter than the QuadratureSpec defaults: the root search differences these values.
const numerics::QuadratureSpec kGammaSpec{1e-13, 1e-12, 4000};
const numerics::QuadratureSpec kCapacitySpec{1e-10, 1e-9, 4000};

} // namespace

void CapacityQuery::validate() const {
    detail::require_positive(alpha, "alpha");
    detail::require_positive(c, "c");
    if (constraint == Constraint::AverageReceivedPower && scenario.n_primaries() > 1)
        throw std::invalid_argument(
            "average received-power constraint is only supported for one primary receiver");
}

double effective_alpha(const CapacityQuery& query) {
    query.validate();
    return query.c * query.alpha;
}

double awgn_capacity(double alpha_eff) {
    detail::require_non_negative(alpha_eff, "alpha");
    const double shifted = 1.0 + alpha_eff;
    if (shifted - 1.0 == alpha_eff)
        return std::log2(shifted);
    return std::log1p(alpha_eff) / std::numbers::ln2;
}

double solve_gamma0(const RatioScenario& scenario, double alpha_eff) {
    detail::require_positive(alpha_eff, "alpha");
    if (scenario.n_primaries() != 1)
        throw std::invalid_argument("solve_gamma0: requires a single primary receiver");
    if (scenario.is_awgn())
        return 1.0 + alpha_eff; // g0/g1 == 1, so int_0^gamma F = (gamma - 1)^+

    // CDF of g0/g1 is the CDF of g1/g0 with the two links exchanged.
    const RatioLaw reciprocal = ratio_law(scenario.swapped());
    const auto cdf = [&reciprocal](double x) { return reciprocal.cdf(x); };
    const auto mean_interference = [&cdf](double gamma) {
        return numerics::integrate_finite(cdf, 0.0, gamma, kGammaSpec).value;
    };
    return numerics::find_root_increasing(mean_interference, alpha_eff, 1e-9);
}

CapacityResult capacity_average(const CapacityQuery& query) {
    const double alpha_eff = effective_alpha(query);
    const auto& scenario = query.scenario;

    CapacityResult result;
    result.method = CapacityMethod::ClosedFormIntegrand;
    if (scenario.is_awgn()) {
        result.capacity = awgn_capacity(alpha_eff);
        result.gamma0 = 1.0 + alpha_eff;
        return result;
    }

    const RatioLaw law = ratio_law(scenario);
    const double gamma0 = solve_gamma0(scenario, alpha_eff);
    const auto integrand = [&law, gamma0](double x) {
        const double rate = std::log(gamma0 * x) * kInvLn2;
        return rate > 0.0 ? rate * law.pdf(x) : 0.0;
    };

    // Split where the density has decayed well past its bulk; the slowly
    // decaying log tail goes through the semi-infinite map.
    const double lower = 1.0 / gamma0;
    const double split = std::max(lower, 1.0) * 1e3;
    const auto body = numerics::integrate_finite(integrand, lower, split, kCapacitySpec);
    const auto tail = numerics::integrate_semi_infinite(integrand, split, kCapacitySpec);

    result.capacity = std::max(body.value + tail.value, 0.0);
    result.gamma0 = gamma0;
    result.quadrature_error = body.error + tail.error;
    return result;
}

CapacityResult capacity_peak(const CapacityQuery& query) {
    const double alpha_eff = effective_alpha(query);
    const auto& scenario = query.scenario;

    CapacityResult result;
    result.method = CapacityMethod::ClosedFormIntegrand;
    if (scenario.is_awgn()) {
        result.capacity = awgn_capacity(alpha_eff);
        return result;
    }

    const RatioLaw law = ratio_law(scenario);
    const auto integrand = [&law, alpha_eff](double x) {
        const double p = law.pdf(x);
        return p == 0.0 ? 0.0 : std::log1p(alpha_eff * x) * kInvLn2 * p;
    };
    const auto q = numerics::integrate_semi_infinite(integrand, 0.0, kCapacitySpec);
    result.capacity = std::max(q.value, 0.0);
    result.quadrature_error = q.error;
    return result;
}

CapacityResult capacity_peak_mc(const CapacityQuery& query, std::uint64_t samples,
                                std::uint64_t seed) {
    CapacityQuery peak = query;
    peak.constraint = Constraint::PeakReceivedPower;
    const auto estimate = mc::mc_capacity(peak, samples, seed);

    CapacityResult result;
    result.capacity = estimate.value;
    result.method = CapacityMethod::MonteCarlo;
    result.std_error = estimate.std_error;
    result.samples = estimate.samples;
    return result;
}

CapacityResult capacity(const CapacityQuery& query) {
    return query.constraint == Constraint::AverageReceivedPower ? capacity_average(query)
                                                               : capacity_peak(query);
}

} // namespace crcap
