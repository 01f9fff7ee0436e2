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

#ifndef CRCAP_NUMERICS_HPP
#define CRCAP_NUMERICS_HPP

#include <functional>

namespace crcap::numerics {

struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_subdivisions = 2000;

    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0; // estimated absolute error
    int intervals = 0;
};

using Integrand = std::function<double(double)>;

// Globally adaptive 21-point Gauss-Kronrod quadrature on [a, b]. Throws
// ConvergenceError (carrying the best estimate) when the subdivision budget
// runs out or the integrand returns a non-finite value.
QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  const QuadratureSpec& spec = {});

// Integral over [a, inf) through the map x = a + t / (1 - t), t in [0, 1).
QuadratureResult integrate_semi_infinite(const Integrand& f, double a = 0.0,
                                         const QuadratureSpec& spec = {});

// Root of h(x) = target for nondecreasing continuous h with h(0) <= target.
//
// The bracket [0, 1] is doubled until it contains the target (at most up to
// 2^100), then bisected. The returned r satisfies |h(r) - target| <= tol and
// lies in a final bracket of width <= 10 tol. Throws BracketError when the
// target is not reachable.
double find_root_increasing(const std::function<double(double)>& h, double target,
                            double tol = 1e-9);

} // namespace crcap::numerics

#endif
