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

#ifndef CRCAP_SWEEP_HPP
#define CRCAP_SWEEP_HPP

#include "crcap/capacity.hpp"
#include "crcap/distributions.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// CSV-producing front end shared by the command-line tool and its tests.
namespace crcap::sweep {

double db_to_linear(double db);
double linear_to_db(double linear);

// Shortest round-trip form, 17 significant digits ("%.17g").
std::string format_number(double value);

struct DbRange {
    double start_db = -20.0;
    double stop_db = 20.0;
    int points = 41;

    // start <= stop, finite, points >= 2 (or points == 1 with start == stop).
    void validate() const;
    std::vector<double> values() const;

    static DbRange single(double db) { return {db, db, 1}; }
    // "start:stop:points"; throws std::invalid_argument on malformed text.
    static DbRange parse(std::string_view text);
};

struct SweepConfig {
    DbRange alpha;
    Constraint constraint = Constraint::PeakReceivedPower;
    FadingModel desired = FadingModel::rayleigh();
    FadingModel interference = FadingModel::rayleigh();
    double c_db = 0.0;
    int n_primaries = 1;
    std::uint64_t mc_samples = 1'000'000;
    std::uint64_t seed = 1;
};

struct SweepRow {
    double alpha_db = 0.0;
    double capacity = 0.0;
    std::optional<double> gamma0;
    std::optional<double> std_error;
    double awgn = 0.0;
};

struct SweepResult {
    std::vector<std::string> comments; // emitted as '#' lines before the header
    std::vector<SweepRow> rows;
    bool has_gamma0 = false;
    bool monte_carlo = false;
};

// Closed-form capacity at every alpha point; peak-constraint scenarios without a
// closed form fall back to Monte Carlo with a warning comment. Throws
// NoClosedFormError for average-constraint scenarios without one and
// std::invalid_argument for invalid configurations.
SweepResult run_sweep(const SweepConfig& config);

// alpha_db,capacity_bits_per_hz[,gamma0][,std_error],awgn_bits_per_hz
void write_sweep_csv(std::ostream& os, const SweepResult& result);

enum class EvalKind { Cdf, Pdf };

// Header "x,value" then one row per grid point.
void write_eval_csv(std::ostream& os, EvalKind kind, const RatioScenario& scenario,
                    std::span<const double> xs);

struct FigureCurve {
    std::string label;
    SweepConfig config;
};

std::vector<std::string> figure_names();

// Curves of a named preset (fig2 .. fig8) over the given alpha grid.
std::vector<FigureCurve> figure_preset(std::string_view name, const DbRange& alpha,
                                       std::uint64_t mc_samples, std::uint64_t seed);

// Long format: curve,alpha_db,capacity_bits_per_hz,gamma0,std_error,awgn_bits_per_hz
// with empty cells where a column does not apply.
void write_figure_csv(std::ostream& os, std::span<const FigureCurve> curves,
                      std::span<const SweepResult> results);

// Plain-text "key = value" lines; '#' starts a comment, blank lines are
// ignored. Keys are flag names without the leading dashes.
std::vector<std::pair<std::string, std::string>> parse_config(std::istream& is);

// Removes "--config <path>" from a command line (argv[0] excluded) and
// inserts the file's pairs as flags right after the subcommand token, so that
// flags given on the command line, which come later, take precedence.
std::vector<std::string> splice_config(std::vector<std::string> args);

} // namespace crcap::sweep

#endif
