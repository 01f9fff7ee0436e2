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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crcap/distributions.hpp"
#include "crcap/errors.hpp"
#include "crcap/numerics.hpp"
#include "oracles.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

using namespace crcap;

namespace {

constexpr double kK6dB = 3.981071705534972;
constexpr double kK15dB = 31.622776601683793;
const double kKs[] = {0.0, 1.0, kK6dB, kK15dB};

std::vector<RatioLaw> all_laws() {
    std::vector<RatioLaw> laws;
    laws.emplace_back(RatioFamily::RayleighRayleigh, 0.0, 1);
    for (double k : kKs) {
        laws.emplace_back(RatioFamily::RayleighRician, k, 1);
        laws.emplace_back(RatioFamily::RicianRayleigh, k, 1);
        for (int n = 1; n <= 3; ++n)
            laws.emplace_back(RatioFamily::RicianMaxRayleigh, k, n);
    }
    return laws;
}

double integrate_pdf(const RatioLaw& law) {
    return numerics::integrate_semi_infinite([&law](double x) { return law.pdf(x); }).value;
}

} // namespace

TEST_CASE("FadingModel construction") {
    CHECK(FadingModel::rayleigh().is_rayleigh_law());
    CHECK(FadingModel::rician(0.0).is_rayleigh_law());
    CHECK_FALSE(FadingModel::rician(2.0).is_rayleigh_law());
    CHECK_THROWS_AS(FadingModel::rician(-1.0), std::domain_error);
    CHECK_THROWS_AS(FadingModel::rician(std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("sample_power_gain has unit mean") {
    for (const auto& model : {FadingModel::rayleigh(), FadingModel::rician(4.0), FadingModel::rician(kK15dB)}) {
        SplitMix64 rng(7);
        double sum = 0.0;
        const int n = 1'000'000;
        for (int i = 0; i < n; ++i)
            sum += sample_power_gain(model, rng);
        CAPTURE(model.describe());
        CHECK(std::abs(sum / n - 1.0) <= 0.004);
    }
    SplitMix64 rng(1);
    CHECK(sample_power_gain(FadingModel::awgn(), rng) == 1.0);
}

TEST_CASE("Rician K=0 draws follow the Rayleigh power law") {
    const int n = 1'000'000;
    SplitMix64 rng(99);
    std::vector<double> g(n);
    for (auto& v : g)
        v = sample_power_gain(FadingModel::rician(0.0), rng);
    const double d = oracle::ks_statistic(g, [](double x) { return 1.0 - std::exp(-x); });
    CHECK(d < 0.002);
}

TEST_CASE("Rayleigh/Rician ratio CDF and PDF values") {
    for (double k : kKs)
        CHECK(ratio_cdf_ray_rice(0.0, k) == 0.0);
    CHECK(ratio_cdf_ray_rice(1.0, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(ratio_cdf_ray_rice(2.0, 1.0) == doctest::Approx(0.6967346701436833).epsilon(1e-14));
    CHECK(ratio_pdf_ray_rice(0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    for (double x : {0.0, 0.3, 1.0, 7.0, 1e4})
        CHECK(ratio_pdf_ray_rice(x, 0.0) == doctest::Approx(1.0 / ((x + 1) * (x + 1))).epsilon(1e-14));
    const double d = oracle::central_diff([](double x) { return ratio_cdf_ray_rice(x, 4.0); }, 3.0, 1e-5);
    CHECK(std::abs(d - ratio_pdf_ray_rice(3.0, 4.0)) <= 1e-8);
}

TEST_CASE("Rician/Rayleigh ratio CDF and PDF values") {
    for (double k : kKs)
        CHECK(ratio_cdf_rice_ray(0.0, k) == 0.0);
    CHECK(ratio_cdf_rice_ray(1.0, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(ratio_cdf_rice_ray(2.0, 1.0) == doctest::Approx(0.8 * std::exp(-0.2)).epsilon(1e-14));
    for (double y : {0.0, 0.3, 1.0, 7.0, 1e4})
        CHECK(ratio_pdf_rice_ray(y, 0.0) == doctest::Approx(1.0 / ((y + 1) * (y + 1))).epsilon(1e-14));
}

TEST_CASE("Rician/Rayleigh PDF at the origin is the CDF slope there") {
    // Slope of the CDF at 0+ is (1 + K) e^{-K}: 3 e^{-2} for K = 2.
    const auto cdf = [](double y) { return ratio_cdf_rice_ray(y, 2.0); };
    const double h = 1e-8;
    const double forward = (cdf(h) - cdf(0.0)) / h;
    CHECK(std::abs(forward - 3.0 * std::exp(-2.0)) <= 1e-6);
    CHECK(ratio_pdf_rice_ray(0.0, 2.0) == doctest::Approx(3.0 * std::exp(-2.0)).epsilon(1e-14));
    const double central = oracle::central_diff(cdf, 1e-3, 1e-6);
    CHECK(std::abs(central - ratio_pdf_rice_ray(1e-3, 2.0)) <= 1e-8);
}

TEST_CASE("ratio CDF simplifications match the unsimplified two-exponential forms") {
    for (double k : kKs) {
        for (double x : oracle::log_grid(1e-4, 1e4, 200)) {
            CHECK(std::abs(ratio_cdf_rice_ray(x, k) - oracle::cdf_rice_ray_two_term(x, k)) <= 1e-13);
            CHECK(std::abs(ratio_cdf_ray_rice(x, k) - oracle::cdf_ray_rice_raw(x, k)) <= 1e-13);
        }
    }
}

TEST_CASE("maxray_power_pdf") {
    for (double g : {0.0, 0.5, 3.0})
        CHECK(maxray_power_pdf(g, 1) == doctest::Approx(std::exp(-g)).epsilon(1e-15));
    CHECK(maxray_power_pdf(0.0, 2) == 0.0);
    // n (1 - e^{-g})^{n-1} e^{-g}
    CHECK(maxray_power_pdf(0.7, 3) ==
          doctest::Approx(3.0 * std::pow(1 - std::exp(-0.7), 2) * std::exp(-0.7)).epsilon(1e-13));
    const auto q = numerics::integrate_semi_infinite([](double g) { return maxray_power_pdf(g, 3); });
    CHECK(std::abs(q.value - 1.0) <= 1e-10);
    CHECK_THROWS_AS(maxray_power_pdf(1.0, 0), std::domain_error);
    CHECK_THROWS_AS(maxray_power_pdf(1.0, kMaxPrimaries + 1), std::domain_error);
}

TEST_CASE("max-of-Rayleigh ratio law") {
    CHECK(ratio_cdf_rice_maxray(0.0, 2.0, 3) == 0.0);
    for (double k : kKs) {
        for (double u : oracle::log_grid(1e-3, 1e3, 101)) {
            CHECK(std::abs(ratio_cdf_rice_maxray(u, k, 1) - ratio_cdf_rice_ray(u, k)) <= 1e-12);
            CHECK(std::abs(ratio_pdf_rice_maxray(u, k, 1) - ratio_pdf_rice_ray(u, k)) <= 1e-12);
        }
    }
    const double d = oracle::central_diff([](double u) { return ratio_cdf_rice_maxray(u, 4.0, 3); }, 0.7, 1e-5);
    CHECK(std::abs(d - ratio_pdf_rice_maxray(0.7, 4.0, 3)) <= 1e-8);
    CHECK_THROWS_AS(ratio_cdf_rice_maxray(-0.1, 1.0, 2), std::domain_error);
    CHECK_THROWS_AS(ratio_pdf_rice_maxray(0.1, 1.0, 0), std::domain_error);
}

TEST_CASE("max-of-Rayleigh CDF agrees with conditioning on the maximum") {
    // P(g1 < u g0) = int F_g1(u t) p_max(t) dt with the Rician power CDF written
    // through the Poisson mixture of exponentials; Simpson on [0, 60].
    const double k = 2.0;
    const auto rician_cdf = [k](double g) {
        // 1 - sum_j Pois(j; K) P(Gamma(j+1) > (1+K) g)
        const double x = (1.0 + k) * g;
        double pois = std::exp(-k), tail_sum = 0.0;
        double term = std::exp(-x), gamma_tail = term;
        for (int j = 0; j < 200; ++j) {
            tail_sum += pois * gamma_tail;
            pois *= k / (j + 1);
            term *= x / (j + 1);
            gamma_tail += term;
        }
        return 1.0 - tail_sum;
    };
    for (double u : {0.2, 1.0, 5.0}) {
        const auto f = [&](double t) {
            return rician_cdf(u * t) * 3.0 * std::pow(1.0 - std::exp(-t), 2) * std::exp(-t);
        };
        CHECK(oracle::simpson(f, 0.0, 60.0, 20000) ==
              doctest::Approx(ratio_cdf_rice_maxray(u, k, 3)).epsilon(1e-9));
    }
}

TEST_CASE("domain errors for negative or NaN arguments") {
    CHECK_THROWS_AS(ratio_cdf_ray_rice(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(ratio_pdf_ray_rice(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(ratio_cdf_rice_ray(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(ratio_pdf_rice_ray(std::numeric_limits<double>::quiet_NaN(), 1.0), std::domain_error);
    CHECK_THROWS_AS(ratio_cdf_ray_rice(1.0, -2.0), std::domain_error);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(ratio_cdf_ray_rice(inf, 1.0) == 1.0);
    CHECK(ratio_pdf_rice_ray(inf, 1.0) == 0.0);
}

TEST_CASE("has_closed_form and ratio_law dispatch") {
    const auto ray = FadingModel::rayleigh();
    const auto rice = FadingModel::rician(4.0);
    CHECK(has_closed_form(RatioScenario(ray, ray)));
    CHECK(has_closed_form(RatioScenario(ray, rice)));
    CHECK(has_closed_form(RatioScenario(rice, ray)));
    CHECK(has_closed_form(RatioScenario(rice, ray, 3)));
    CHECK(has_closed_form(RatioScenario(ray, ray, 3)));
    CHECK_FALSE(has_closed_form(RatioScenario(ray, rice, 2)));
    CHECK_FALSE(has_closed_form(RatioScenario(rice, FadingModel::rician(2.0))));
    CHECK_FALSE(has_closed_form(RatioScenario(FadingModel::awgn(), FadingModel::awgn())));
    CHECK(has_closed_form(RatioScenario(rice, FadingModel::rician(0.0))));

    CHECK(ratio_law(RatioScenario(ray, ray)).pdf(1.0) == 0.25);

    const RatioLaw multi = ratio_law(RatioScenario(rice, ray, 2));
    CHECK(multi.family() == RatioFamily::RicianMaxRayleigh);
    for (double u : {0.1, 1.0, 10.0}) {
        CHECK(multi.cdf(u) == ratio_cdf_rice_maxray(u, 4.0, 2));
        CHECK(multi.pdf(u) == ratio_pdf_rice_maxray(u, 4.0, 2));
    }
    CHECK(ratio_law(RatioScenario(ray, rice)).family() == RatioFamily::RayleighRician);
    CHECK(ratio_law(RatioScenario(rice, ray)).family() == RatioFamily::RicianRayleigh);
    CHECK(ratio_law(RatioScenario(ray, ray, 2)).k_factor() == 0.0);
    CHECK_THROWS_AS(ratio_law(RatioScenario(ray, rice, 2)), NoClosedFormError);
    CHECK_THROWS_AS(RatioScenario(ray, ray, 0), std::domain_error);
    CHECK_THROWS_AS(RatioScenario(ray, ray, 2).swapped(), std::invalid_argument);
}

TEST_CASE("property: reciprocal duality between the two single-primary laws") {
    SplitMix64 rng(5);
    for (int i = 0; i < 2000; ++i) {
        const double x = std::exp(20.0 * rng.uniform() - 10.0);
        const double k = 40.0 * rng.uniform();
        CHECK(std::abs(ratio_cdf_ray_rice(x, k) - (1.0 - ratio_cdf_rice_ray(1.0 / x, k))) <= 1e-10);
    }
}

TEST_CASE("property: every CDF is a distribution function on a log grid") {
    const auto grid = oracle::log_grid(1e-6, 1e6, 1000);
    for (const auto& law : all_laws()) {
        CHECK(law.cdf(0.0) == 0.0);
        double prev = 0.0;
        bool monotone = true;
        for (double x : grid) {
            const double f = law.cdf(x);
            // Near 1 the CDF is only resolved to a few ulps.
            monotone = monotone && f >= prev - 1e-15 && f <= 1.0;
            prev = f;
        }
        CHECK(monotone);
        CHECK(law.cdf(1e6) > 1.0 - 1e-3);
    }
}

TEST_CASE("property: every PDF is non-negative, normalized and the CDF slope") {
    const auto grid = oracle::log_grid(1e-3, 1e3, 1000);
    for (const auto& law : all_laws()) {
        CAPTURE(static_cast<int>(law.family()));
        CAPTURE(law.k_factor());
        CAPTURE(law.n_primaries());
        bool non_negative = true;
        bool slope_ok = true;
        for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
            const double x = grid[i];
            const double p = law.pdf(x);
            non_negative = non_negative && p >= 0.0;
            const double h = 1e-4 * x;
            const double slope = oracle::central_diff([&law](double t) { return law.cdf(t); }, x, h);
            // The difference quotient carries roughly 1e-16 / h of roundoff.
            slope_ok = slope_ok && std::abs(slope - p) <= 1e-6 * p + 1e-15 / h;
        }
        CHECK(non_negative);
        CHECK(slope_ok);
        CHECK(std::abs(integrate_pdf(law) - 1.0) <= 1e-8);
    }
}

TEST_CASE("property: K = 0 collapses both single-primary laws onto 1/(x+1)^2") {
    for (double x : oracle::log_grid(1e-3, 1e3, 1000)) {
        const double ref = 1.0 / ((1.0 + x) * (1.0 + x));
        CHECK(std::abs(ratio_pdf_ray_rice(x, 0.0) - ref) <= 1e-12);
        CHECK(std::abs(ratio_pdf_rice_ray(x, 0.0) - ref) <= 1e-12);
    }
}

TEST_CASE("property: ratio samples follow the closed-form CDF (KS, 99% level)") {
    const auto ray = FadingModel::rayleigh();
    const std::vector<RatioScenario> scenarios = {
        RatioScenario(ray, ray),
        RatioScenario(ray, FadingModel::rician(kK6dB)),
        RatioScenario(FadingModel::rician(kK6dB), ray),
        RatioScenario(FadingModel::rician(kK15dB), ray),
        RatioScenario(FadingModel::rician(kK6dB), ray, 3),
        RatioScenario(ray, ray, 2),
    };
    const int n = 1'000'000;
    std::uint64_t seed = 400;
    for (const auto& s : scenarios) {
        SplitMix64 rng(seed++);
        std::vector<double> r(n);
        for (auto& v : r)
            v = sample_ratio(s, rng);
        const RatioLaw law = ratio_law(s);
        CAPTURE(s.describe());
        CHECK(oracle::ks_statistic(r, [&law](double x) { return law.cdf(x); }) < 1.63 / std::sqrt(n));
    }
}
