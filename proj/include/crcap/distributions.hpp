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

#ifndef CRCAP_DISTRIBUTIONS_HPP
#define CRCAP_DISTRIBUTIONS_HPP

#include "crcap/rng.hpp"

#include <string>

namespace crcap {

enum class FadingKind { Rayleigh, Rician, Awgn };

/// Amplitude law of one link, normalized to unit mean power E{g} = 1.
///
/// The K-factor is linear (LoS power over scattered power). A Rician model
/// with K = 0 is the Rayleigh law; `awgn()` is the no-fading reference g == 1.
class FadingModel {
public:
    static FadingModel rayleigh() noexcept { return FadingModel(FadingKind::Rayleigh, 0.0); }
    static FadingModel rician(double k_factor);
    static FadingModel awgn() noexcept { return FadingModel(FadingKind::Awgn, 0.0); }

    FadingKind kind() const noexcept { return kind_; }
    double k_factor() const noexcept { return k_factor_; }

    // True for Rayleigh and for Rician with K = 0.
    bool is_rayleigh_law() const noexcept {
        return kind_ == FadingKind::Rayleigh || (kind_ == FadingKind::Rician && k_factor_ == 0.0);
    }

    std::string describe() const;

    bool operator==(const FadingModel&) const = default;

private:
    FadingModel(FadingKind kind, double k) noexcept : kind_(kind), k_factor_(k) {}

    FadingKind kind_;
    double k_factor_;
};

// Draws a power gain g = |h|^2 with E{g} = 1. Rician draws use a LoS component of
// power K/(K+1) plus a complex Gaussian scatter of power 1/(K+1).
double sample_power_gain(const FadingModel& model, SplitMix64& rng);

/// Desired link law (of sqrt(g1)), interference link law (of each sqrt(g0i)),
/// and the number of primary receivers. The ratio of interest is g1 / max_i g0i.
class RatioScenario {
public:
    RatioScenario(FadingModel desired, FadingModel interference, int n_primaries = 1);

    const FadingModel& desired() const noexcept { return desired_; }
    const FadingModel& interference() const noexcept { return interference_; }
    int n_primaries() const noexcept { return n_primaries_; }

    bool is_awgn() const noexcept {
        return desired_.kind() == FadingKind::Awgn && interference_.kind() == FadingKind::Awgn;
    }

    // Desired and interference laws exchanged; only meaningful for one primary.
    RatioScenario swapped() const;

    std::string describe() const;

private:
    FadingModel desired_;
    FadingModel interference_;
    int n_primaries_;
};

// Largest n accepted by the max-of-n-Rayleigh forms. The alternating binomial
// sums lose roughly log10(C(n, n/2)) digits, which is negligible for small n.
inline constexpr int kMaxPrimaries = 64;

// Rayleigh desired over Rician(K) interference.
double ratio_cdf_ray_rice(double x, double k);
double ratio_pdf_ray_rice(double x, double k);

// Rician(K) desired over Rayleigh interference.
double ratio_cdf_rice_ray(double y, double k);
double ratio_pdf_rice_ray(double y, double k);

// Rayleigh over Rayleigh: F = x/(1+x), p = 1/(1+x)^2.
double ratio_cdf_ray_ray(double x);
double ratio_pdf_ray_ray(double x);

// Density of max_i g0i for n i.i.d. unit-mean exponential power gains.
double maxray_power_pdf(double g, int n);

// Rician(K) desired over the maximum of n Rayleigh interference gains.
double ratio_cdf_rice_maxray(double u, double k, int n);
double ratio_pdf_rice_maxray(double u, double k, int n);

bool has_closed_form(const RatioScenario& scenario) noexcept;

enum class RatioFamily { RayleighRayleigh, RayleighRician, RicianRayleigh, RicianMaxRayleigh };

/// Evaluable CDF/PDF pair of g1 / max_i g0i bound to one closed form.
class RatioLaw {
public:
    RatioLaw(RatioFamily family, double k_factor, int n_primaries);

    double cdf(double x) const;
    double pdf(double x) const;

    RatioFamily family() const noexcept { return family_; }
    double k_factor() const noexcept { return k_factor_; }
    int n_primaries() const noexcept { return n_primaries_; }

private:
    RatioFamily family_;
    double k_factor_;
    int n_primaries_;
};

// Throws NoClosedFormError when has_closed_form(scenario) is false.
RatioLaw ratio_law(const RatioScenario& scenario);

// One draw of g1 / max_i g0i with equal unit link powers.
double sample_ratio(const RatioScenario& scenario, SplitMix64& rng);

} // namespace crcap

#endif
