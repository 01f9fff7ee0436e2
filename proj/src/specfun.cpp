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

#include "crcap/specfun.hpp"

#include "crcap/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace crcap::specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Below this argument the power series is used; above it the asymptotic
// expansion's smallest term is ~e^{-2x} and therefore below double precision.
constexpr double kSeriesLimit = 20.0;

// sum_k (x^2/4)^k / (k!)^2
double i0_series(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 500; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (term < kEps * sum)
            break;
    }
    return sum;
}

// e^{-x} I0(x) ~ 1/sqrt(2 pi x) * sum_k ((2k-1)!!)^2 / (k! (8x)^k)
double i0e_asymptotic(double x) {
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 60; ++k) {
        const double next = term * (2.0 * k - 1.0) * (2.0 * k - 1.0) / (8.0 * k * x);
        if (next > term) // series has started to diverge
            break;
        term = next;
        sum += term;
        if (term < kEps * sum)
            break;
    }
    return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

// sum_{j>=0} Pois(j; outer) * P(Pois(inner) <= j - shift), shift in {0, 1}.
// Terms are all non-negative, so small results keep full relative accuracy.
double poisson_dominance(double outer, double inner, int shift) {
    if (outer == 0.0)
        return shift == 0 ? std::exp(-inner) : 0.0;

    const double log_outer = std::log(outer);
    const double log_inner = inner > 0.0 ? std::log(inner) : 0.0;
    const auto j_max = static_cast<long>(outer + 15.0 * std::sqrt(outer) + 40.0);

    double log_p_outer = -outer;
    double log_p_inner = -inner;
    double inner_cdf = 0.0;    // P(Pois(inner) <= j - shift)
    double inner_pending = 0.0; // pmf at j, added next step when shift == 1
    double sum = 0.0;

    for (long j = 0; j <= j_max; ++j) {
        if (j > 0) {
            const double lj = std::log(static_cast<double>(j));
            log_p_outer += log_outer - lj;
            log_p_inner = inner > 0.0 ? log_p_inner + log_inner - lj
                                      : -std::numeric_limits<double>::infinity();
        }
        const double p_inner = std::exp(log_p_inner);
        if (shift == 0) {
            inner_cdf += p_inner;
        } else {
            inner_cdf += inner_pending;
            inner_pending = p_inner;
        }
        sum += std::exp(log_p_outer) * std::min(inner_cdf, 1.0);
    }
    return sum;
}

} // namespace

double bessel_i0(double x) {
    detail::require_non_negative(x, "bessel_i0 argument");
    if (x < kSeriesLimit)
        return i0_series(x);
    return std::exp(x) * i0e_asymptotic(x);
}

double bessel_i0e(double x) {
    detail::require_non_negative(x, "bessel_i0e argument");
    if (x < kSeriesLimit)
        return std::exp(-x) * i0_series(x);
    return i0e_asymptotic(x);
}

double marcum_q1(double a, double b) {
    detail::require_non_negative(a, "marcum_q1 argument a");
    detail::require_non_negative(b, "marcum_q1 argument b");

    // Poisson-mixture form of the noncentral chi-square tail with two degrees
    // of freedom: Q1(a, b) = P(M <= J), J ~ Pois(a^2/2), M ~ Pois(b^2/2).
    const double mu = 0.5 * a * a;
    const double nu = 0.5 * b * b;
    if (a <= b)
        return std::min(poisson_dominance(mu, nu, 0), 1.0);
    // Q1 close to one: sum the complement P(M > J) = sum_m Pois(m; nu) P(J <= m - 1).
    return std::max(1.0 - poisson_dominance(nu, mu, 1), 0.0);
}

} // namespace crcap::specfun
