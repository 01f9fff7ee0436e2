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

// crcap command-line front end: eval, capacity, figure, validate.

#include "crcap/capacity.hpp"
#include "crcap/errors.hpp"
#include "crcap/mc.hpp"
#include "crcap/sweep.hpp"
#include "crcap/validation.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LinkOptions {
    std::string desired = "rayleigh";
    std::optional<double> desired_k_db;
    std::string interference = "rayleigh";
    std::optional<double> interference_k_db;
    int n_primaries = 1;

    void attach(CLI::App& app) {
        const std::vector<std::string> kinds{"rayleigh", "rician", "awgn"};
        app.add_option("--desired", desired, "Desired-link fading law")
            ->check(CLI::IsMember(kinds))
            ->capture_default_str();
        app.add_option("--desired-k-db", desired_k_db, "Desired-link Rician K-factor in dB");
        app.add_option("--interference", interference, "Interference-link fading law")
            ->check(CLI::IsMember(kinds))
            ->capture_default_str();
        app.add_option("--interference-k-db", interference_k_db,
                       "Interference-link Rician K-factor in dB");
        app.add_option("--n-primaries", n_primaries, "Number of primary receivers")
            ->check(CLI::Range(1, crcap::kMaxPrimaries))
            ->capture_default_str();
    }
};

crcap::FadingModel make_model(const std::string& kind, const std::optional<double>& k_db,
                              const char* flag) {
    if (kind == "rayleigh")
        return crcap::FadingModel::rayleigh();
    if (kind == "awgn")
        return crcap::FadingModel::awgn();
    if (!k_db)
        throw UsageError(std::string("rician fading needs ") + flag);
    return crcap::FadingModel::rician(crcap::sweep::db_to_linear(*k_db));
}

crcap::RatioScenario make_scenario(const LinkOptions& link) {
    return crcap::RatioScenario(make_model(link.desired, link.desired_k_db, "--desired-k-db"),
                                make_model(link.interference, link.interference_k_db,
                                           "--interference-k-db"),
                                link.n_primaries);
}

// Writes to the --output file when given, else to stdout.
template <class Writer>
void emit(const std::string& output, const Writer& write) {
    if (output.empty()) {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream file(output);
    if (!file)
        throw UsageError("cannot open output file '" + output + "'");
    write(file);
}

crcap::sweep::DbRange resolve_alpha(const std::optional<double>& alpha_db,
                                    const std::string& range) {
    if (alpha_db && !range.empty())
        throw UsageError("give either --alpha-db or --alpha-db-range, not both");
    if (alpha_db)
        return crcap::sweep::DbRange::single(*alpha_db);
    if (!range.empty())
        return crcap::sweep::DbRange::parse(range);
    throw UsageError("one of --alpha-db or --alpha-db-range is required");
}

int run(int argc, char** argv) {
    const CLI::Range kSampleRange(crcap::mc::kMinSamples, std::numeric_limits<std::uint64_t>::max());
    CLI::App app{"Ergodic capacity of spectrum-sharing links in asymmetric Rayleigh/Rician fading"};
    app.name("crcap");
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.set_help_all_flag("--help-all", "Help for every subcommand");
    // Handled before parsing; registered so it shows up in --help.
    std::string config_path;
    app.add_option("--config", config_path, "key = value file mirroring the flags");

    // eval
    auto* eval = app.add_subcommand("eval", "Evaluate a closed-form ratio CDF or PDF");
    std::string eval_kind;
    LinkOptions eval_link;
    std::vector<double> eval_x;
    std::string eval_range;
    std::string eval_output;
    eval->add_option("kind", eval_kind, "cdf or pdf")
        ->required()
        ->check(CLI::IsMember({"cdf", "pdf"}));
    eval_link.attach(*eval);
    eval->add_option("--x", eval_x, "Evaluation point (repeatable)")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    eval->add_option("--x-range", eval_range, "Linear grid start:stop:points");
    eval->add_option("--output", eval_output, "Output file (default stdout)");

    // capacity
    auto* cap = app.add_subcommand("capacity", "Capacity at one alpha or over an alpha sweep");
    LinkOptions cap_link;
    std::string constraint = "peak";
    std::optional<double> alpha_db;
    std::string alpha_range;
    double c_db = 0.0;
    std::uint64_t cap_samples = crcap::mc::kDefaultSamples;
    std::uint64_t cap_seed = 1;
    std::string cap_output;
    cap_link.attach(*cap);
    cap->add_option("--constraint", constraint, "avg or peak")
        ->check(CLI::IsMember({"avg", "peak"}))
        ->capture_default_str();
    cap->add_option("--alpha-db", alpha_db, "Interference-to-noise ratio in dB");
    cap->add_option("--alpha-db-range", alpha_range, "Sweep start:stop:points in dB");
    cap->add_option("--c-db", c_db, "Link power ratio E{g1}/E{g0} in dB")->capture_default_str();
    cap->add_option("--mc-samples", cap_samples, "Monte Carlo samples for fallback scenarios")
        ->check(kSampleRange)
        ->capture_default_str();
    cap->add_option("--seed", cap_seed, "Monte Carlo seed")->capture_default_str();
    cap->add_option("--output", cap_output, "Output file (default stdout)");

    // figure
    auto* fig = app.add_subcommand("figure", "Capacity curves of a named preset as CSV");
    std::string fig_name;
    std::string fig_range = "-20:20:41";
    std::uint64_t fig_samples = crcap::mc::kDefaultSamples;
    std::uint64_t fig_seed = 1;
    std::string fig_output;
    fig->add_option("name", fig_name, "Preset name")
        ->required()
        ->check(CLI::IsMember(crcap::sweep::figure_names()));
    fig->add_option("--alpha-db-range", fig_range, "Sweep start:stop:points in dB")
        ->capture_default_str();
    fig->add_option("--mc-samples", fig_samples, "Monte Carlo samples per curve")
        ->check(kSampleRange)
        ->capture_default_str();
    fig->add_option("--seed", fig_seed, "Monte Carlo seed")->capture_default_str();
    fig->add_option("--output", fig_output, "Directory for one CSV per curve (default: stdout)");

    // validate
    auto* val = app.add_subcommand("validate", "Monte Carlo versus closed-form agreement suite");
    crcap::validation::ValidationOptions vopt;
    val->add_option("--mc-samples", vopt.samples, "Samples per Monte Carlo check")
        ->check(kSampleRange)
        ->capture_default_str();
    val->add_option("--seed", vopt.seed, "Seed")->capture_default_str();
    val->add_option("--perturb-cdf", vopt.cdf_perturbation)->group(""); // sensitivity check
    vopt.workers = std::max(1u, std::thread::hardware_concurrency());
    val->add_option("--workers", vopt.workers, "Sampling threads (results do not depend on it)")
        ->capture_default_str();
    std::string val_output;
    val->add_option("--output", val_output, "Report file (default stdout)");

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        args = crcap::sweep::splice_config(std::move(args));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    std::reverse(args.begin(), args.end()); // CLI11 consumes the vector from the back
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (*eval) {
        std::vector<double> xs = eval_x;
        if (!eval_range.empty()) {
            const auto r = crcap::sweep::DbRange::parse(eval_range); // same start:stop:points syntax
            for (double x : r.values())
                xs.push_back(x);
        }
        if (xs.empty())
            throw UsageError("eval needs --x or --x-range");
        const auto scenario = make_scenario(eval_link);
        const auto kind = eval_kind == "cdf" ? crcap::sweep::EvalKind::Cdf : crcap::sweep::EvalKind::Pdf;
        std::ostringstream csv;
        crcap::sweep::write_eval_csv(csv, kind, scenario, xs);
        emit(eval_output, [&](std::ostream& os) { os << csv.str(); });
        return kExitOk;
    }

    if (*cap) {
        crcap::sweep::SweepConfig cfg;
        cfg.alpha = resolve_alpha(alpha_db, alpha_range);
        cfg.constraint = constraint == "avg" ? crcap::Constraint::AverageReceivedPower
                                             : crcap::Constraint::PeakReceivedPower;
        const auto scenario = make_scenario(cap_link);
        cfg.desired = scenario.desired();
        cfg.interference = scenario.interference();
        cfg.n_primaries = scenario.n_primaries();
        cfg.c_db = c_db;
        cfg.mc_samples = cap_samples;
        cfg.seed = cap_seed;
        const auto result = crcap::sweep::run_sweep(cfg);
        emit(cap_output, [&](std::ostream& os) { crcap::sweep::write_sweep_csv(os, result); });
        return kExitOk;
    }

    if (*fig) {
        const auto curves = crcap::sweep::figure_preset(
            fig_name, crcap::sweep::DbRange::parse(fig_range), fig_samples, fig_seed);
        std::vector<crcap::sweep::SweepResult> results;
        for (const auto& curve : curves)
            results.push_back(crcap::sweep::run_sweep(curve.config));
        if (fig_output.empty()) {
            crcap::sweep::write_figure_csv(std::cout, curves, results);
            return kExitOk;
        }
        std::filesystem::create_directories(fig_output);
        for (std::size_t i = 0; i < curves.size(); ++i) {
            const auto path = std::filesystem::path(fig_output) / (fig_name + "_" + curves[i].label + ".csv");
            emit(path.string(), [&](std::ostream& os) { crcap::sweep::write_sweep_csv(os, results[i]); });
            std::cerr << "wrote " << path.string() << '\n';
        }
        return kExitOk;
    }

    const auto report = crcap::validation::run_validation(vopt);
    emit(val_output, [&](std::ostream& os) { os << report.render(); });
    return report.passed() ? kExitOk : kExitValidation;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const crcap::NoClosedFormError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
}
