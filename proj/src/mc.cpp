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

#include "crcap/mc.hpp"

#include "crcap/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace crcap::mc {
namespace {

constexpr std::uint64_t kChunk = 1u << 16;
constexpr double kInvLn2 = 1.0 / std::numbers::ln2;

struct Moments {
    double n = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void push(double x) noexcept {
        n += 1.0;
        const double delta = x - mean;
        mean += delta / n;
        m2 += delta * (x - mean);
    }

    void merge(const Moments& other) noexcept {
        if (other.n == 0.0)
            return;
        const double total = n + other.n;
        const double delta = other.mean - mean;
        mean += delta * other.n / total;
        m2 += other.m2 + delta * delta * n * other.n / total;
        n = total;
    }
};

void check_samples(std::uint64_t samples) {
    if (samples < kMinSamples)
        throw std::invalid_argument("Monte Carlo estimators need at least 1000 samples");
}

// Runs `kernel(rng, out)` once per sample, writing `width` observations. Chunks
// are reduced in index order, so the result does not depend on `workers`.
template <class Kernel>
std::vector<Moments> run(std::uint64_t samples, std::uint64_t seed, std::size_t width,
                         unsigned workers, const Kernel& kernel) {
    const std::uint64_t n_chunks = (samples + kChunk - 1) / kChunk;
    std::vector<std::vector<Moments>> chunks(n_chunks, std::vector<Moments>(width));

    const auto work = [&](std::uint64_t first, std::uint64_t stride) {
        std::vector<double> out(width);
        for (std::uint64_t c = first; c < n_chunks; c += stride) {
            auto& acc = chunks[c];
            const std::uint64_t end = std::min(samples, (c + 1) * kChunk);
            for (std::uint64_t i = c * kChunk; i < end; ++i) {
                auto rng = SplitMix64::substream(seed, i);
                kernel(rng, out);
                for (std::size_t j = 0; j < width; ++j)
                    acc[j].push(out[j]);
            }
        }
    };

    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n_chunks)));
    if (workers == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work, w, workers);
    }

    std::vector<Moments> total(width);
    for (const auto& chunk : chunks)
        for (std::size_t j = 0; j < width; ++j)
            total[j].merge(chunk[j]);
    return total;
}

McEstimate sample_mean(const Moments& m, std::uint64_t samples, std::uint64_t seed) {
    const double variance = m.n > 1.0 ? std::max(m.m2, 0.0) / (m.n - 1.0) : 0.0;
    return {m.mean, std::sqrt(variance / m.n), samples, seed};
}

McEstimate proportion(const Moments& m, std::uint64_t samples, std::uint64_t seed) {
    const double p = m.mean;
    return {p, std::sqrt(std::max(p * (1.0 - p), 0.0) / m.n), samples, seed};
}

double max_interference_gain(const RatioScenario& scenario, SplitMix64& rng) {
    double g0 = 0.0;
    for (int i = 0; i < scenario.n_primaries(); ++i)
        g0 = std::max(g0, sample_power_gain(scenario.interference(), rng));
    return g0;
}

} // namespace

std::vector<McEstimate> mc_ratio_cdf_grid(const RatioScenario& scenario,
                                          std::span<const double> xs, std::uint64_t samples,
                                          std::uint64_t seed, unsigned workers) {
    check_samples(samples);
    for (double x : xs)
        detail::require_non_negative(x, "mc_ratio_cdf: x");

    const auto moments = run(samples, seed, xs.size(), workers,
                             [&](SplitMix64& rng, std::span<double> out) {
                                 const double r = sample_ratio(scenario, rng);
                                 for (std::size_t j = 0; j < xs.size(); ++j)
                                     out[j] = r < xs[j] ? 1.0 : 0.0;
                             });
    std::vector<McEstimate> result;
    result.reserve(xs.size());
    for (const auto& m : moments)
        result.push_back(proportion(m, samples, seed));
    return result;
}

McEstimate mc_ratio_cdf(const RatioScenario& scenario, double x, std::uint64_t samples,
                        std::uint64_t seed, unsigned workers) {
    const double xs[] = {x};
    return mc_ratio_cdf_grid(scenario, xs, samples, seed, workers).front();
}

std::vector<McEstimate> mc_capacity_sweep(Constraint constraint, const RatioScenario& scenario,
                                          std::span<const double> alpha_eff,
                                          std::uint64_t samples, std::uint64_t seed,
                                          unsigned workers) {
    check_samples(samples);
    for (double a : alpha_eff)
        detail::require_positive(a, "alpha");

    std::vector<Moments> moments;
    if (constraint == Constraint::PeakReceivedPower) {
        moments = run(samples, seed, alpha_eff.size(), workers,
                      [&](SplitMix64& rng, std::span<double> out) {
                          const double r = sample_ratio(scenario, rng);
                          for (std::size_t j = 0; j < alpha_eff.size(); ++j)
                              out[j] = std::log1p(alpha_eff[j] * r) * kInvLn2;
                      });
    } else {
        if (scenario.n_primaries() != 1)
            throw std::invalid_argument(
                "average received-power constraint is only supported for one primary receiver");
        std::vector<double> gamma0;
        for (double a : alpha_eff)
            gamma0.push_back(solve_gamma0(scenario, a));
        moments = run(samples, seed, alpha_eff.size(), workers,
                      [&](SplitMix64& rng, std::span<double> out) {
                          const double g1 = sample_power_gain(scenario.desired(), rng);
                          const double g0 = sample_power_gain(scenario.interference(), rng);
                          // P = (gamma0/g0 - 1/g1)^+ gives rate log2(gamma0 g1 / g0) when positive.
                          for (std::size_t j = 0; j < alpha_eff.size(); ++j) {
                              const double snr = gamma0[j] * g1 / g0;
                              out[j] = snr > 1.0 ? std::log(snr) * kInvLn2 : 0.0;
                          }
                      });
    }

    std::vector<McEstimate> result;
    result.reserve(moments.size());
    for (const auto& m : moments)
        result.push_back(sample_mean(m, samples, seed));
    return result;
}

McEstimate mc_capacity(const CapacityQuery& query, std::uint64_t samples, std::uint64_t seed,
                       unsigned workers) {
    const double alpha[] = {effective_alpha(query)};
    return mc_capacity_sweep(query.constraint, query.scenario, alpha, samples, seed, workers)
        .front();
}

McEstimate mc_average_interference(const RatioScenario& scenario, double gamma0,
                                   std::uint64_t samples, std::uint64_t seed, unsigned workers) {
    check_samples(samples);
    detail::require_positive(gamma0, "gamma0");
    if (scenario.n_primaries() != 1)
        throw std::invalid_argument("mc_average_interference: requires a single primary receiver");
    const auto moments = run(samples, seed, 1, workers, [&](SplitMix64& rng, std::span<double> out) {
        const double g1 = sample_power_gain(scenario.desired(), rng);
        const double g0 = max_interference_gain(scenario, rng);
        out[0] = std::max(gamma0 - g0 / g1, 0.0);
    });
    return sample_mean(moments.front(), samples, seed);
}

} // namespace crcap::mc
