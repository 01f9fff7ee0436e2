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

#include "crcap/distributions.hpp"

#include "crcap/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace crcap {
namespace {

// Ratio arguments may be +inf (CDF 1, PDF 0) but never negative or NaN.
bool check_ratio_arg(double x, const char* fn) {
    if (!(x >= 0.0))
        throw std::domain_error(std::string(fn) + ": argument must be non-negative");
    return std::isfinite(x);
}

void check_k(double k, const char* fn) {
    if (!(k >= 0.0) || !std::isfinite(k))
        throw std::domain_error(std::string(fn) + ": K-factor must be finite and non-negative");
}

void check_n(int n, const char* fn) {
    if (n < 1 || n > kMaxPrimaries)
        throw std::domain_error(std::string(fn) + ": number of primaries must be in [1, 64]");
}

// (-1)^k C(n-1, k), evaluated in log space.
double signed_binomial(int n, int k) {
    const double log_c = std::lgamma(n) - std::lgamma(k + 1.0) - std::lgamma(n - k);
    double c = std::exp(log_c);
    if (c < 0x1.0p53)
        c = std::round(c);
    return (k % 2 == 0) ? c : -c;
}

} // namespace

FadingModel FadingModel::rician(double k_factor) {
    check_k(k_factor, "FadingModel::rician");
    return FadingModel(FadingKind::Rician, k_factor);
}

std::string FadingModel::describe() const {
    std::ostringstream os;
    switch (kind_) {
    case FadingKind::Rayleigh: os << "rayleigh"; break;
    case FadingKind::Rician: os << "rician(K=" << k_factor_ << ")"; break;
    case FadingKind::Awgn: os << "awgn"; break;
    }
    return os.str();
}

double sample_power_gain(const FadingModel& model, SplitMix64& rng) {
    switch (model.kind()) {
    case FadingKind::Awgn:
        return 1.0;
    case FadingKind::Rayleigh:
        return rng.exponential();
    case FadingKind::Rician: {
        const double k = model.k_factor();
        const double los = std::sqrt(k / (k + 1.0));
        const double sigma = std::sqrt(0.5 / (k + 1.0));
        const double re = los + sigma * rng.normal();
        const double im = sigma * rng.normal();
        return re * re + im * im;
    }
    }
    return 1.0;
}

RatioScenario::RatioScenario(FadingModel desired, FadingModel interference, int n_primaries)
    : desired_(desired), interference_(interference), n_primaries_(n_primaries) {
    check_n(n_primaries, "RatioScenario");
}

RatioScenario RatioScenario::swapped() const {
    if (n_primaries_ != 1)
        throw std::invalid_argument("RatioScenario::swapped: requires a single primary receiver");
    return RatioScenario(interference_, desired_, 1);
}

std::string RatioScenario::describe() const {
    std::ostringstream os;
    os << desired_.describe() << "/" << interference_.describe();
    if (n_primaries_ > 1)
        os << " n=" << n_primaries_;
    return os.str();
}

double ratio_cdf_ray_rice(double x, double k) {
    check_k(k, "ratio_cdf_ray_rice");
    if (!check_ratio_arg(x, "ratio_cdf_ray_rice"))
        return 1.0;
    // -K + (K^2+K)/(x+K+1) rewritten as -Kx/(x+K+1) to avoid cancellation.
    const double d = x + k + 1.0;
    return 1.0 - (k + 1.0) / d * std::exp(-k * x / d);
}

double ratio_pdf_ray_rice(double x, double k) {
    check_k(k, "ratio_pdf_ray_rice");
    if (!check_ratio_arg(x, "ratio_pdf_ray_rice"))
        return 0.0;
    const double d = x + k + 1.0;
    const double rational = (x + (k + 1.0) * (k + 1.0)) / d / d / d;
    return (k + 1.0) * rational * std::exp(-k * x / d);
}

double ratio_cdf_rice_ray(double y, double k) {
    check_k(k, "ratio_cdf_rice_ray");
    if (!check_ratio_arg(y, "ratio_cdf_rice_ray"))
        return 1.0;
    // e^{-K/D} - e^{-K + (Ky+K^2y)/D} / D with D = y + Ky + 1. Both exponents
    // equal -K/D, so the difference factors as e^{-K/D} (1 - 1/D).
    const double d = 1.0 + (1.0 + k) * y;
    return std::exp(-k / d) * ((1.0 + k) * y / d);
}

double ratio_pdf_rice_ray(double y, double k) {
    check_k(k, "ratio_pdf_rice_ray");
    if (!check_ratio_arg(y, "ratio_pdf_rice_ray"))
        return 0.0;
    const double d = 1.0 + (1.0 + k) * y;
    const double e = std::exp(-k / d);
    // The second term's factor (1 - K + (1+K)y) is negative for small y when
    // K > 1; the sum stays non-negative.
    const double first = k * (1.0 + k) / (d * d) * e;
    const double second = (1.0 + k) * (1.0 - k + (1.0 + k) * y) / (d * d * d) * e;
    return first + second;
}

double ratio_cdf_ray_ray(double x) {
    if (!check_ratio_arg(x, "ratio_cdf_ray_ray"))
        return 1.0;
    return x / (1.0 + x);
}

double ratio_pdf_ray_ray(double x) {
    if (!check_ratio_arg(x, "ratio_pdf_ray_ray"))
        return 0.0;
    return 1.0 / ((1.0 + x) * (1.0 + x));
}

double maxray_power_pdf(double g, int n) {
    check_n(n, "maxray_power_pdf");
    if (!check_ratio_arg(g, "maxray_power_pdf"))
        return 0.0;
    double sum = 0.0;
    for (int k = 0; k < n; ++k)
        sum += signed_binomial(n, k) * std::exp(-(1.0 + k) * g);
    return std::max(n * sum, 0.0);
}

double ratio_cdf_rice_maxray(double u, double k, int n) {
    check_k(k, "ratio_cdf_rice_maxray");
    check_n(n, "ratio_cdf_rice_maxray");
    if (!check_ratio_arg(u, "ratio_cdf_rice_maxray"))
        return 1.0;
    // 1 - n sum (-1)^j/(1+j) C(n-1,j) (1 - t_j), with n sum (-1)^j C(n-1,j)/(1+j) = 1,
    // reduces to n sum (-1)^j/(1+j) C(n-1,j) t_j.
    const double ku = (1.0 + k) * u;
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
        const double s = 1.0 + j;
        const double d = s + ku;
        sum += signed_binomial(n, j) / s * (ku / d) * std::exp(-s * k / d);
    }
    return std::clamp(n * sum, 0.0, 1.0);
}

double ratio_pdf_rice_maxray(double u, double k, int n) {
    check_k(k, "ratio_pdf_rice_maxray");
    check_n(n, "ratio_pdf_rice_maxray");
    if (!check_ratio_arg(u, "ratio_pdf_rice_maxray"))
        return 0.0;
    const double ku = (1.0 + k) * u;
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
        const double s = 1.0 + j;
        const double d = s + ku;
        const double shape = 1.0 + k + k * (k + 1.0) * (k + 1.0) * u / d;
        sum += signed_binomial(n, j) / (d * d) * std::exp(-s * k / d) * shape;
    }
    return std::max(n * sum, 0.0);
}

bool has_closed_form(const RatioScenario& scenario) noexcept {
    const auto& des = scenario.desired();
    const auto& itf = scenario.interference();
    if (des.kind() == FadingKind::Awgn || itf.kind() == FadingKind::Awgn)
        return false;
    if (itf.is_rayleigh_law())
        return true; // Rician or Rayleigh over max of n Rayleigh
    return des.is_rayleigh_law() && scenario.n_primaries() == 1;
}

RatioLaw::RatioLaw(RatioFamily family, double k_factor, int n_primaries)
    : family_(family), k_factor_(k_factor), n_primaries_(n_primaries) {
    check_k(k_factor, "RatioLaw");
    check_n(n_primaries, "RatioLaw");
    if (family != RatioFamily::RicianMaxRayleigh && n_primaries != 1)
        throw std::invalid_argument("RatioLaw: only the max-of-Rayleigh family admits n > 1");
}

double RatioLaw::cdf(double x) const {
    switch (family_) {
    case RatioFamily::RayleighRayleigh: return ratio_cdf_ray_ray(x);
    case RatioFamily::RayleighRician: return ratio_cdf_ray_rice(x, k_factor_);
    case RatioFamily::RicianRayleigh: return ratio_cdf_rice_ray(x, k_factor_);
    case RatioFamily::RicianMaxRayleigh: return ratio_cdf_rice_maxray(x, k_factor_, n_primaries_);
    }
    return 0.0;
}

double RatioLaw::pdf(double x) const {
    switch (family_) {
    case RatioFamily::RayleighRayleigh: return ratio_pdf_ray_ray(x);
    case RatioFamily::RayleighRician: return ratio_pdf_ray_rice(x, k_factor_);
    case RatioFamily::RicianRayleigh: return ratio_pdf_rice_ray(x, k_factor_);
    case RatioFamily::RicianMaxRayleigh: return ratio_pdf_rice_maxray(x, k_factor_, n_primaries_);
    }
    return 0.0;
}

RatioLaw ratio_law(const RatioScenario& scenario) {
    if (!has_closed_form(scenario))
        throw NoClosedFormError("no closed-form ratio law for " + scenario.describe() +
                                "; use the Monte Carlo estimator");
    const auto& des = scenario.desired();
    const auto& itf = scenario.interference();
    const int n = scenario.n_primaries();
    const double k_des = des.is_rayleigh_law() ? 0.0 : des.k_factor();

    if (itf.is_rayleigh_law()) {
        if (n > 1)
            return RatioLaw(RatioFamily::RicianMaxRayleigh, k_des, n);
        if (des.is_rayleigh_law())
            return RatioLaw(RatioFamily::RayleighRayleigh, 0.0, 1);
        return RatioLaw(RatioFamily::RicianRayleigh, k_des, 1);
    }
    return RatioLaw(RatioFamily::RayleighRician, itf.k_factor(), 1);
}

double sample_ratio(const RatioScenario& scenario, SplitMix64& rng) {
    const double g1 = sample_power_gain(scenario.desired(), rng);
    double g0 = 0.0;
    for (int i = 0; i < scenario.n_primaries(); ++i)
        g0 = std::max(g0, sample_power_gain(scenario.interference(), rng));
    return g1 / g0;
}

} // namespace crcap
