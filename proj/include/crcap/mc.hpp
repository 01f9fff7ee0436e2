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

#ifndef CRCAP_MC_HPP
#define CRCAP_MC_HPP

#include "crcap/capacity.hpp"
#include "crcap/distributions.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace crcap::mc {

struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kMinSamples = 1000;
inline constexpr std::uint64_t kDefaultSamples = 1'000'000;

// All estimators draw sample k from SplitMix64::substream(seed, k), so a
// result depends only on (seed, samples) and never on `workers`.

// Empirical P(g1 / max_i g0i < x) with binomial standard error.
McEstimate mc_ratio_cdf(const RatioScenario& scenario, double x, std::uint64_t samples,
                        std::uint64_t seed, unsigned workers = 1);

// Same as mc_ratio_cdf at every grid point, from one shared sample set.
std::vector<McEstimate> mc_ratio_cdf_grid(const RatioScenario& scenario,
                                          std::span<const double> xs, std::uint64_t samples,
                                          std::uint64_t seed, unsigned workers = 1);

// Sample mean of the achieved rate. Peak: log2(1 + alpha_eff g1 / max_i g0i).
// Average: rate of the water-filling-style policy with gamma0 = solve_gamma0.
McEstimate mc_capacity(const CapacityQuery& query, std::uint64_t samples, std::uint64_t seed,
                       unsigned workers = 1);

// mc_capacity at several effective alphas from one shared sample set, so the
// estimated curve is monotone in alpha.
std::vector<McEstimate> mc_capacity_sweep(Constraint constraint, const RatioScenario& scenario,
                                          std::span<const double> alpha_eff,
                                          std::uint64_t samples, std::uint64_t seed,
                                          unsigned workers = 1);

// Mean interference E{(gamma0 - g0 / g1)^+} caused by the average-constraint
// policy; equals alpha_eff when gamma0 is the solved threshold.
McEstimate mc_average_interference(const RatioScenario& scenario, double gamma0,
                                   std::uint64_t samples, std::uint64_t seed,
                                   unsigned workers = 1);

} // namespace crcap::mc

#endif
