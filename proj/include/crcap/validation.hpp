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

#ifndef CRCAP_VALIDATION_HPP
#define CRCAP_VALIDATION_HPP

#include "crcap/distributions.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace crcap::validation {

struct ValidationOptions {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 42;
    // Added to every closed-form CDF before comparing it with Monte Carlo.
    // Non-zero only for sensitivity checks of the suite itself.
    double cdf_perturbation = 0.0;
    // Sampling threads; results do not depend on this.
    unsigned workers = 1;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool passed() const;
    // One "PASS|FAIL  name  detail" line per check plus a summary line.
    std::string render() const;
};

// Every scenario with a closed-form ratio law exercised by the suite.
std::vector<RatioScenario> closed_form_scenarios();

// Log-spaced grid of 20 points on [0.05, 20] used for the CDF comparisons.
std::vector<double> cdf_grid();

ValidationReport run_validation(const ValidationOptions& options = {});

} // namespace crcap::validation

#endif
