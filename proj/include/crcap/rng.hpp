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

#ifndef CRCAP_RNG_HPP
#define CRCAP_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

namespace crcap {

// SplitMix64 used as a counter-based generator: draw i of a stream seeded with
// s is mix(s + (i + 1) * golden_gamma). Substreams are disjoint counter blocks,
// so the value of sample k depends only on (seed, k).
class SplitMix64 {
public:
    static constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;
    static constexpr std::uint64_t kBlockSize = 1024;

    explicit SplitMix64(std::uint64_t seed, std::uint64_t counter = 0) noexcept
        : seed_(seed), counter_(counter) {}

    // Stream for sample `index`: draws [index * kBlockSize, (index + 1) * kBlockSize).
    static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) noexcept {
        return SplitMix64(seed, index * kBlockSize);
    }

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next() noexcept {
        ++counter_;
        return mix(seed_ + counter_ * kGoldenGamma);
    }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform on the open interval (0, 1).
    double uniform_open() noexcept {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; the second variate of each pair is cached.
    double normal() noexcept {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform_open()));
        const double theta = 2.0 * std::numbers::pi * uniform();
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    // Unit-mean exponential.
    double exponential() noexcept { return -std::log(uniform_open()); }

    std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace crcap

#endif
