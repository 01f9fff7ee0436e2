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

#include "crcap/numerics.hpp"

#include "crcap/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace crcap::numerics {
namespace {

// QUADPACK qk21 abscissae and weights.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208983220153, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for the 10-point rule, at kXgk[1], kXgk[3], ..., kXgk[9].
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
    double a;
    double b;
    double value;
    double error;
};

Panel gauss_kronrod21(const Integrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double kronrod = fc * kWgk[10];
    double gauss = 0.0;
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        const double fsum = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * fsum;
        if (j % 2 == 1)
            gauss += kWg[j / 2] * fsum;
    }
    kronrod *= half;
    gauss *= half;
    if (!std::isfinite(kronrod))
        throw ConvergenceError("quadrature: integrand returned a non-finite value", kronrod,
                               std::numeric_limits<double>::infinity());
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

bool by_error(const Panel& lhs, const Panel& rhs) { return lhs.error < rhs.error; }

} // namespace

void QuadratureSpec::validate() const {
    if (!(abs_tol > 0.0) || !std::isfinite(abs_tol) || !(rel_tol > 0.0) || !std::isfinite(rel_tol))
        throw std::invalid_argument("QuadratureSpec: tolerances must be positive and finite");
    if (max_subdivisions < 1)
        throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
}

QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  const QuadratureSpec& spec) {
    spec.validate();
    if (!(a <= b))
        throw std::invalid_argument("integrate_finite: requires a <= b");
    if (a == b)
        return {0.0, 0.0, 0};

    std::vector<Panel> heap;
    heap.reserve(static_cast<std::size_t>(spec.max_subdivisions) + 1);
    heap.push_back(gauss_kronrod21(f, a, b));
    double total = heap.front().value;
    double total_error = heap.front().error;

    // Aim a digit past the request: |K - G| is not always an upper bound.
    auto tolerance = [&](double value) {
        return 0.1 * std::max(spec.abs_tol, spec.rel_tol * std::abs(value));
    };

    while (total_error > tolerance(total)) {
        if (static_cast<int>(heap.size()) >= spec.max_subdivisions)
            throw ConvergenceError("quadrature: subdivision limit reached", total, total_error);

        std::pop_heap(heap.begin(), heap.end(), by_error);
        const Panel worst = heap.back();
        heap.pop_back();

        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b))
            throw ConvergenceError("quadrature: interval cannot be subdivided further", total,
                                   total_error);
        const Panel left = gauss_kronrod21(f, worst.a, mid);
        const Panel right = gauss_kronrod21(f, mid, worst.b);
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), by_error);
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), by_error);

        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
    }

    // Resum to drop the drift of the running updates.
    total = 0.0;
    total_error = 0.0;
    for (const auto& p : heap) {
        total += p.value;
        total_error += p.error;
    }
    return {total, total_error, static_cast<int>(heap.size())};
}

QuadratureResult integrate_semi_infinite(const Integrand& f, double a, const QuadratureSpec& spec) {
    if (!std::isfinite(a))
        throw std::invalid_argument("integrate_semi_infinite: lower limit must be finite");
    const Integrand mapped = [&f, a](double t) {
        const double s = 1.0 - t;
        return f(a + t / s) / (s * s);
    };
    return integrate_finite(mapped, 0.0, 1.0, spec);
}

double find_root_increasing(const std::function<double(double)>& h, double target, double tol) {
    if (!(tol > 0.0) || !std::isfinite(target))
        throw std::invalid_argument("find_root_increasing: tol must be positive, target finite");

    double lo = 0.0;
    double h_lo = h(lo);
    if (h_lo > target)
        throw BracketError("find_root_increasing: h(0) exceeds the target");

    constexpr double kMaxScale = 0x1.0p100;
    double hi = 1.0;
    double h_hi = h(hi);
    while (h_hi < target) {
        lo = hi;
        h_lo = h_hi;
        hi *= 2.0;
        if (hi > kMaxScale)
            throw BracketError("find_root_increasing: target not reached below 2^100");
        h_hi = h(hi);
    }

    const double width_goal = 10.0 * tol;
    for (int iter = 0; iter < 2000; ++iter) {
        const bool narrow = hi - lo <= width_goal;
        if (narrow) {
            const double r_lo = std::abs(h_lo - target);
            const double r_hi = std::abs(h_hi - target);
            if (r_lo <= tol || r_hi <= tol)
                return r_lo <= r_hi ? lo : hi;
        }
        const double mid = lo + 0.5 * (hi - lo);
        if (!(mid > lo && mid < hi))
            break;
        const double h_mid = h(mid);
        if (h_mid < target) {
            lo = mid;
            h_lo = h_mid;
        } else {
            hi = mid;
            h_hi = h_mid;
        }
    }
    return std::abs(h_lo - target) <= std::abs(h_hi - target) ? lo : hi;
}

} // namespace crcap::numerics
