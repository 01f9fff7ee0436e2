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

#ifndef CRCAP_SPECFUN_HPP
#define CRCAP_SPECFUN_HPP

namespace crcap::specfun {

// Zeroth-order modified Bessel function of the first kind, I0(x), for x >= 0.
// Overflows to +inf above x ~ 713.98; use bessel_i0e there.
// Throws std::domain_error on negative or non-finite input.
double bessel_i0(double x);

// Exponentially scaled companion e^{-x} I0(x); finite for every finite x >= 0.
double bessel_i0e(double x);

// First-order Marcum Q-function
//   Q1(a, b) = int_b^inf t exp(-(t^2 + a^2) / 2) I0(a t) dt,   a, b >= 0.
// Throws std::domain_error on negative or non-finite input.
double marcum_q1(double a, double b);

} // namespace crcap::specfun

#endif
