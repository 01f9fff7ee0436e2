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

#include "crcap/validation.hpp"

#include "crcap/capacity.hpp"
#include "crcap/mc.hpp"
#include "crcap/numerics.hpp"
#include "crcap/rng.hpp"
#include "crcap/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace crcap::validation {
namespace {

constexpr double kK0dB = 1.0;
constexpr double kK6dB = 3.981071705534972;
constexpr double kK15dB = 31.622776601683793;

std::string fmt(const char* format, double a, double b = 0.0) {
    char buf[128];
    std::snprintf(buf, sizeof buf, format, a, b);
    return buf;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    return SplitMix64::mix(seed + salt * SplitMix64::kGoldenGamma);
}

std::vector<double> log_grid(double lo, double hi, int points) {
    std::vector<double> xs(static_cast<std::size_t>(points));
    const double step = std::log(hi / lo) / (points - 1);
    for (int i = 0; i < points; ++i)
        xs[i] = lo * std::exp(step * i);
    return xs;
}

CheckResult marcum_identity(std::uint64_t seed) {
    SplitMix64 rng(derive_seed(seed, 1));
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double a = 20.0 * rng.uniform();
        const double b = 20.0 * rng.uniform();
        const double lhs = specfun::marcum_q1(a, b) + specfun::marcum_q1(b, a);
        const double rhs = 1.0 + std::exp(-0.5 * (a - b) * (a - b)) * specfun::bessel_i0e(a * b);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return {"marcum-identity", worst <= 1e-9, fmt("max |residual| = %.3e over 1000 pairs", worst)};
}

CheckResult normalization() {
    double worst = 0.0;
    for (const auto& s : closed_form_scenarios()) {
        const RatioLaw law = ratio_law(s);
        const auto q = numerics::integrate_semi_infinite([&law](double x) { return law.pdf(x); });
        worst = std::max(worst, std::abs(q.value - 1.0));
    }
    return {"pdf-normalization", worst <= 1e-8, fmt("max |integral - 1| = %.3e", worst)};
}

CheckResult collapses() {
    const auto xs = log_grid(1e-3, 1e3, 1000);
    double k0 = 0.0, n1 = 0.0, dual = 0.0;
    for (double x : xs) {
        const double ref = 1.0 / ((1.0 + x) * (1.0 + x));
        k0 = std::max({k0, std::abs(ratio_pdf_ray_rice(x, 0.0) - ref),
                       std::abs(ratio_pdf_rice_ray(x, 0.0) - ref)});
        for (double k : {0.0, kK0dB, kK6dB, kK15dB}) {
            n1 = std::max({n1, std::abs(ratio_pdf_rice_maxray(x, k, 1) - ratio_pdf_rice_ray(x, k)),
                           std::abs(ratio_cdf_rice_maxray(x, k, 1) - ratio_cdf_rice_ray(x, k))});
            dual = std::max(dual, std::abs(ratio_cdf_ray_rice(x, k) - (1.0 - ratio_cdf_rice_ray(1.0 / x, k))));
        }
    }
    const double worst = std::max({k0, n1, dual});
    return {"degeneracy-collapses", worst <= 1e-12,
            fmt("K=0 %.2e, n=1 %.2e", k0, n1) + fmt(", duality %.2e", dual)};
}

CheckResult mc_cdf(const RatioScenario& s, const ValidationOptions& opt, std::uint64_t salt) {
    const RatioLaw law = ratio_law(s);
    const auto xs = cdf_grid();
    int inside = 0;
    double worst_z = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        // Independent sample sets per point, so the 18-of-20 allowance is a
        // statement about independent 3-sigma events.
        const auto est = mc::mc_ratio_cdf(s, xs[i], opt.samples,
                                          derive_seed(opt.seed, salt * 64 + i), opt.workers);
        const double closed = law.cdf(xs[i]) + opt.cdf_perturbation;
        const double sigma = std::max(est.std_error, 1.0 / static_cast<double>(opt.samples));
        const double z = std::abs(closed - est.value) / sigma;
        worst_z = std::max(worst_z, z);
        inside += z <= 3.0 ? 1 : 0;
    }
    return {"mc-cdf " + s.describe(), inside >= 18,
            fmt("%.0f/20 points within 3 sigma, max z = %.2f", inside, worst_z)};
}

CheckResult peak_anchor() {
    CapacityQuery q{Constraint::PeakReceivedPower, 1.0,
                    RatioScenario(FadingModel::rayleigh(), FadingModel::rayleigh()), 1.0};
    const double c = capacity_peak(q).capacity;
    const double expected = 1.0 / std::numbers::ln2;
    return {"peak-anchor rayleigh/rayleigh alpha=0dB", std::abs(c - expected) <= 1e-6,
            fmt("C = %.12f, expected %.12f", c, expected)};
}

std::vector<CheckResult> average_constraint(const ValidationOptions& opt) {
    const std::vector<RatioScenario> scenarios = {
        RatioScenario(FadingModel::rayleigh(), FadingModel::rayleigh()),
        RatioScenario(FadingModel::rayleigh(), FadingModel::rician(kK6dB)),
        RatioScenario(FadingModel::rician(kK6dB), FadingModel::rayleigh()),
        RatioScenario(FadingModel::rayleigh(), FadingModel::rician(kK15dB)),
    };
    std::vector<CheckResult> out;
    std::uint64_t salt = 100;
    for (const auto& s : scenarios) {
        const RatioLaw reciprocal = ratio_law(s.swapped());
        for (double alpha_db : {-10.0, 0.0, 10.0}) {
            const double alpha = std::pow(10.0, alpha_db / 10.0);
            const CapacityQuery q{Constraint::AverageReceivedPower, alpha, s, 1.0};
            const auto r = capacity_average(q);
            const double g0 = *r.gamma0;
            // Constraint restated through the density of g0/g1.
            const auto used = numerics::integrate_finite(
                [&](double x) { return (g0 - x) * reciprocal.pdf(x); }, 0.0, g0,
                numerics::QuadratureSpec{1e-13, 1e-12, 4000});
            const double constraint_err = std::abs(used.value - alpha);
            const auto est = mc::mc_capacity(q, opt.samples, derive_seed(opt.seed, salt++), opt.workers);
            const double z = std::abs(est.value - r.capacity) / est.std_error;
            out.push_back({"average " + s.describe() + fmt(" alpha=%gdB", alpha_db),
                           constraint_err <= 1e-6 && z <= 3.0,
                           fmt("constraint residual %.2e, C = %.6f", constraint_err, r.capacity) +
                               fmt(", MC z = %.2f", z)});
        }
    }
    return out;
}

std::vector<CheckResult> peak_mc(const ValidationOptions& opt) {
    const std::vector<RatioScenario> scenarios = {
        RatioScenario(FadingModel::rayleigh(), FadingModel::rician(kK6dB)),
        RatioScenario(FadingModel::rician(kK6dB), FadingModel::rayleigh()),
        RatioScenario(FadingModel::rician(kK6dB), FadingModel::rayleigh(), 2),
        RatioScenario(FadingModel::rician(kK6dB), FadingModel::rayleigh(), 3),
    };
    std::vector<CheckResult> out;
    std::uint64_t salt = 200;
    for (const auto& s : scenarios) {
        const CapacityQuery q{Constraint::PeakReceivedPower, 1.0, s, 1.0};
        const double closed = capacity_peak(q).capacity;
        const auto est = mc::mc_capacity(q, opt.samples, derive_seed(opt.seed, salt++), opt.workers);
        const double z = std::abs(est.value - closed) / est.std_error;
        out.push_back({"peak-mc " + s.describe() + " alpha=0dB", z <= 3.0,
                       fmt("C = %.6f, MC z = %.2f", closed, z)});
    }
    return out;
}

CheckResult c_scaling() {
    bool exact = true;
    const RatioScenario s(FadingModel::rayleigh(), FadingModel::rician(kK6dB));
    for (Constraint con : {Constraint::AverageReceivedPower, Constraint::PeakReceivedPower}) {
        for (double c : {0.1, 10.0}) {
            for (double alpha : {0.1, 1.0, 10.0}) {
                const double scaled = capacity(CapacityQuery{con, alpha, s, c}).capacity;
                const double folded = capacity(CapacityQuery{con, c * alpha, s, 1.0}).capacity;
                exact = exact && scaled == folded;
            }
        }
    }
    return {"c-scaling", exact, exact ? "capacity(alpha, c) == capacity(c alpha, 1)" : "mismatch"};
}

CheckResult monotone_alpha() {
    bool ok = true;
    int curves = 0;
    for (const auto& s : closed_form_scenarios()) {
        for (Constraint con : {Constraint::AverageReceivedPower, Constraint::PeakReceivedPower}) {
            if (con == Constraint::AverageReceivedPower && s.n_primaries() > 1)
                continue;
            double prev = -1.0;
            for (double a_db = -20.0; a_db <= 20.0; a_db += 5.0) {
                const double c = capacity(CapacityQuery{con, std::pow(10.0, a_db / 10.0), s, 1.0}).capacity;
                ok = ok && c > prev;
                prev = c;
            }
            ++curves;
        }
    }
    return {"monotone-in-alpha", ok, fmt("%.0f curves on -20..20 dB", curves)};
}

} // namespace

std::vector<RatioScenario> closed_form_scenarios() {
    const auto ray = FadingModel::rayleigh();
    std::vector<RatioScenario> s = {RatioScenario(ray, ray)};
    for (double k : {kK0dB, kK6dB, kK15dB})
        s.emplace_back(ray, FadingModel::rician(k));
    for (double k : {kK0dB, kK6dB, kK15dB})
        s.emplace_back(FadingModel::rician(k), ray);
    s.emplace_back(ray, ray, 2);
    s.emplace_back(FadingModel::rician(kK6dB), ray, 2);
    s.emplace_back(FadingModel::rician(kK6dB), ray, 3);
    s.emplace_back(FadingModel::rician(kK0dB), ray, 3);
    return s;
}

std::vector<double> cdf_grid() { return log_grid(0.05, 20.0, 20); }

bool ValidationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::string ValidationReport::render() const {
    std::ostringstream os;
    int failed = 0;
    for (const auto& c : checks) {
        os << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  " << c.detail << '\n';
        failed += c.passed ? 0 : 1;
    }
    os << checks.size() - failed << "/" << checks.size() << " checks passed\n";
    return os.str();
}

ValidationReport run_validation(const ValidationOptions& options) {
    ValidationReport report;
    auto& checks = report.checks;
    checks.push_back(marcum_identity(options.seed));
    checks.push_back(normalization());
    checks.push_back(collapses());
    std::uint64_t salt = 10;
    for (const auto& s : closed_form_scenarios())
        checks.push_back(mc_cdf(s, options, salt++));
    checks.push_back(peak_anchor());
    for (auto& c : average_constraint(options))
        checks.push_back(std::move(c));
    for (auto& c : peak_mc(options))
        checks.push_back(std::move(c));
    checks.push_back(c_scaling());
    checks.push_back(monotone_alpha());
    return report;
}

} // namespace crcap::validation
