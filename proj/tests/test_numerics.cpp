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
#include <stdexcept>

using namespace crcap;
using namespace crcap::numerics;

TEST_CASE("integrate_semi_infinite analytic integrals") {
    const auto e = integrate_semi_infinite([](double x) { return std::exp(-x); });
    CHECK(std::abs(e.value - 1.0) <= 1e-12);
    const auto r = integrate_semi_infinite([](double x) { return 1.0 / ((1 + x) * (1 + x)); });
    CHECK(std::abs(r.value - 1.0) <= 1e-12);
    // int_1^inf ln u / u^2 du = 1
    const auto l = integrate_semi_infinite([](double x) { return std::log1p(x) / ((1 + x) * (1 + x)); });
    CHECK(std::abs(l.value - 1.0) <= 1e-10);
    CHECK(std::abs(l.value - 1.0) <= l.error);
}

TEST_CASE("integrate_semi_infinite with a shifted lower limit") {
    const auto q = integrate_semi_infinite([](double x) { return std::exp(-x); }, 3.0);
    CHECK(q.value == doctest::Approx(std::exp(-3.0)).epsilon(1e-11));
}

TEST_CASE("integrate_finite") {
    const double gamma = 2.75;
    CHECK(integrate_finite([](double) { return 1.0; }, 0.0, gamma).value == doctest::Approx(gamma).epsilon(1e-15));
    const auto q = integrate_finite([](double x) { return x / (1.0 + x); }, 0.0, 2.0);
    CHECK(std::abs(q.value - 0.9013877113318902) <= 1e-12);
    CHECK(integrate_finite([](double x) { return x; }, 1.0, 1.0).value == 0.0);
    CHECK_THROWS_AS(integrate_finite([](double x) { return x; }, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("integrate_finite of a ratio CDF against a dense trapezoid") {
    const auto f = [](double x) { return ratio_cdf_rice_ray(x, 1.0); };
    const double dense = oracle::trapezoid(f, 0.0, 5.0, 1'000'000);
    CHECK(std::abs(integrate_finite(f, 0.0, 5.0).value - dense) <= 1e-7);
}

TEST_CASE("non-convergence carries the best estimate") {
    QuadratureSpec tight;
    tight.max_subdivisions = 3;
    tight.abs_tol = 1e-16;
    tight.rel_tol = 1e-16;
    try {
        integrate_finite([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, tight);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.best_estimate() == doctest::Approx(2.0).epsilon(0.05));
        CHECK(e.achieved_error() > 0.0);
    }
    CHECK_THROWS_AS(integrate_finite([](double) { return std::nan(""); }, 0.0, 1.0), ConvergenceError);
}

TEST_CASE("QuadratureSpec validation") {
    QuadratureSpec bad;
    bad.abs_tol = 0.0;
    CHECK_THROWS_AS(integrate_finite([](double x) { return x; }, 0.0, 1.0, bad), std::invalid_argument);
    bad = {};
    bad.rel_tol = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = {};
    bad.max_subdivisions = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("property: converged results do not move when the subdivision budget doubles") {
    const auto f = [](double x) { return std::log1p(3.0 * x) * ratio_pdf_ray_rice(x, 3.981); };
    QuadratureSpec spec;
    const double base = integrate_semi_infinite(f, 0.0, spec).value;
    for (int budget : {4000, 8000, 16000}) {
        spec.max_subdivisions = budget;
        CHECK(std::abs(integrate_semi_infinite(f, 0.0, spec).value - base) <= 1e-9 * base);
    }
}

TEST_CASE("find_root_increasing") {
    CHECK(std::abs(find_root_increasing([](double g) { return g; }, 3.0) - 3.0) <= 1e-9);
    const auto h = [](double g) { return g - std::log1p(g); };
    // Frozen from a 30-digit bisection of g - ln(1 + g) = 1.
    CHECK(std::abs(find_root_increasing(h, 1.0) - 2.1461932206205836) <= 1e-9);
    const double independent = oracle::bisect_increasing(h, 1.0, 0.0, 10.0);
    CHECK(std::abs(independent - 2.1461932206205836) <= 1e-12);
    CHECK_THROWS_AS(find_root_increasing([](double g) { return 1.0 - std::exp(-g); }, 2.0), BracketError);
    CHECK_THROWS_AS(find_root_increasing([](double g) { return g + 5.0; }, 1.0), BracketError);
    CHECK(find_root_increasing([](double g) { return g * g; }, 0.0) <= 1e-8);
}

TEST_CASE("property: root satisfies the residual and bracket invariants") {
    const double tol = 1e-9;
    const double delta = 10.0 * tol;
    const std::function<double(double)> funcs[] = {
        [](double g) { return g - std::log1p(g); },
        [](double g) { return 1e-3 * g; },       // flat
        [](double g) { return 1e4 * g * g; },    // steep
        [](double g) { return std::sqrt(g); },
        [](double g) { return g < 1.0 ? 0.0 : g - 1.0; }, // flat then linear
    };
    for (const auto& h : funcs) {
        for (double target : {1e-6, 0.5, 3.0, 1e3}) {
            const double r = find_root_increasing(h, target, tol);
            CHECK(std::abs(h(r) - target) <= tol);
            CHECK(h(std::max(r - delta, 0.0)) <= target);
            CHECK(h(r + delta) >= target);
        }
    }
}
