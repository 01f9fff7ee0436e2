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

#include "crcap/sweep.hpp"

#include "crcap/errors.hpp"
#include "crcap/mc.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace crcap::sweep {
namespace {

double parse_double(std::string_view text) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    return value;
}

std::string k_label(double k_db) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "k%gdb", k_db);
    return buf;
}

std::string c_label(double c_db) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "c%gdb", c_db);
    return buf;
}

std::string optional_cell(const std::optional<double>& v) {
    return v ? format_number(*v) : std::string();
}

} // namespace

double db_to_linear(double db) {
    if (!std::isfinite(db))
        throw std::invalid_argument("dB value must be finite");
    return std::pow(10.0, db / 10.0);
}

double linear_to_db(double linear) {
    detail::require_positive(linear, "linear ratio");
    return 10.0 * std::log10(linear);
}

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void DbRange::validate() const {
    if (!std::isfinite(start_db) || !std::isfinite(stop_db))
        throw std::invalid_argument("alpha range: bounds must be finite");
    if (start_db > stop_db)
        throw std::invalid_argument("alpha range: start must not exceed stop");
    if (points < 1 || (points == 1 && start_db != stop_db))
        throw std::invalid_argument("alpha range: need at least 2 points");
}

std::vector<double> DbRange::values() const {
    validate();
    std::vector<double> v(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i)
        v[i] = points == 1 ? start_db : start_db + (stop_db - start_db) * i / (points - 1);
    return v;
}

DbRange DbRange::parse(std::string_view text) {
    const auto first = text.find(':');
    const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
    if (second == std::string_view::npos)
        throw std::invalid_argument("range must look like start:stop:points");
    DbRange r;
    r.start_db = parse_double(text.substr(0, first));
    r.stop_db = parse_double(text.substr(first + 1, second - first - 1));
    const auto count = text.substr(second + 1);
    int points = 0;
    const auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), points);
    if (ec != std::errc() || ptr != count.data() + count.size())
        throw std::invalid_argument("range point count must be an integer");
    r.points = points;
    r.validate();
    return r;
}

SweepResult run_sweep(const SweepConfig& config) {
    const auto alpha_db = config.alpha.values();
    const RatioScenario scenario(config.desired, config.interference, config.n_primaries);
    const double c = db_to_linear(config.c_db);

    std::vector<CapacityQuery> queries;
    std::vector<double> alpha_eff;
    for (double a_db : alpha_db) {
        CapacityQuery q{config.constraint, db_to_linear(a_db), scenario, c};
        alpha_eff.push_back(effective_alpha(q));
        queries.push_back(q);
    }

    SweepResult result;
    result.has_gamma0 = config.constraint == Constraint::AverageReceivedPower;
    result.rows.resize(alpha_db.size());
    for (std::size_t i = 0; i < alpha_db.size(); ++i) {
        result.rows[i].alpha_db = alpha_db[i];
        result.rows[i].awgn = awgn_capacity(alpha_eff[i]);
    }

    if (scenario.is_awgn() || has_closed_form(scenario)) {
        for (std::size_t i = 0; i < queries.size(); ++i) {
            const auto r = capacity(queries[i]);
            result.rows[i].capacity = r.capacity;
            result.rows[i].gamma0 = r.gamma0;
        }
        return result;
    }

    if (config.constraint == Constraint::AverageReceivedPower)
        throw NoClosedFormError("no closed-form ratio law for " + scenario.describe() +
                                " under the average constraint");

    result.monte_carlo = true;
    result.comments.push_back("warning: no closed form for " + scenario.describe() +
                              "; Monte Carlo estimate with " +
                              std::to_string(config.mc_samples) + " samples, seed " +
                              std::to_string(config.seed));
    const auto estimates = mc::mc_capacity_sweep(config.constraint, scenario, alpha_eff,
                                                 config.mc_samples, config.seed);
    for (std::size_t i = 0; i < estimates.size(); ++i) {
        result.rows[i].capacity = estimates[i].value;
        result.rows[i].std_error = estimates[i].std_error;
    }
    return result;
}

void write_sweep_csv(std::ostream& os, const SweepResult& result) {
    for (const auto& c : result.comments)
        os << "# " << c << '\n';
    os << "alpha_db,capacity_bits_per_hz";
    if (result.has_gamma0)
        os << ",gamma0";
    if (result.monte_carlo)
        os << ",std_error";
    os << ",awgn_bits_per_hz\n";
    for (const auto& row : result.rows) {
        os << format_number(row.alpha_db) << ',' << format_number(row.capacity);
        if (result.has_gamma0)
            os << ',' << optional_cell(row.gamma0);
        if (result.monte_carlo)
            os << ',' << optional_cell(row.std_error);
        os << ',' << format_number(row.awgn) << '\n';
    }
}

void write_eval_csv(std::ostream& os, EvalKind kind, const RatioScenario& scenario,
                    std::span<const double> xs) {
    const RatioLaw law = ratio_law(scenario);
    os << "x,value\n";
    for (double x : xs)
        os << format_number(x) << ','
           << format_number(kind == EvalKind::Cdf ? law.cdf(x) : law.pdf(x)) << '\n';
}

std::vector<std::string> figure_names() {
    return {"fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8"};
}

std::vector<FigureCurve> figure_preset(std::string_view name, const DbRange& alpha,
                                       std::uint64_t mc_samples, std::uint64_t seed) {
    constexpr double kSweptKdb[] = {0.0, 6.0, 15.0};
    constexpr double kFixedKdb = 6.0;

    const auto base = [&](Constraint constraint) {
        SweepConfig cfg;
        cfg.alpha = alpha;
        cfg.constraint = constraint;
        cfg.mc_samples = mc_samples;
        cfg.seed = seed;
        return cfg;
    };
    const auto rice = [](double k_db) { return FadingModel::rician(db_to_linear(k_db)); };

    std::vector<FigureCurve> curves;
    const auto k_sweep = [&](Constraint constraint, bool rician_desired) {
        for (double k_db : kSweptKdb) {
            auto cfg = base(constraint);
            (rician_desired ? cfg.desired : cfg.interference) = rice(k_db);
            curves.push_back({(rician_desired ? "rician_rayleigh_" : "rayleigh_rician_") +
                                  k_label(k_db),
                              cfg});
        }
    };

    if (name == "fig2") {
        k_sweep(Constraint::AverageReceivedPower, false);
    } else if (name == "fig3") {
        k_sweep(Constraint::AverageReceivedPower, true);
    } else if (name == "fig4") {
        k_sweep(Constraint::PeakReceivedPower, false);
    } else if (name == "fig5") {
        k_sweep(Constraint::PeakReceivedPower, true);
    } else if (name == "fig6") {
        for (Constraint constraint : {Constraint::AverageReceivedPower, Constraint::PeakReceivedPower}) {
            for (bool rician_desired : {false, true}) {
                for (double c_db : {10.0, -10.0}) {
                    auto cfg = base(constraint);
                    (rician_desired ? cfg.desired : cfg.interference) = rice(kFixedKdb);
                    cfg.c_db = c_db;
                    curves.push_back(
                        {std::string(constraint == Constraint::AverageReceivedPower ? "avg_" : "peak_") +
                             (rician_desired ? "rician_rayleigh_" : "rayleigh_rician_") + c_label(c_db),
                         cfg});
                }
            }
        }
    } else if (name == "fig7" || name == "fig8") {
        const bool rician_desired = name == "fig7";
        for (int n = 1; n <= 3; ++n) {
            auto cfg = base(Constraint::PeakReceivedPower);
            (rician_desired ? cfg.desired : cfg.interference) = rice(kFixedKdb);
            cfg.n_primaries = n;
            curves.push_back({(rician_desired ? "rician_rayleigh_n" : "rayleigh_rician_n") +
                                  std::to_string(n),
                              cfg});
        }
    } else {
        throw std::invalid_argument("unknown figure preset '" + std::string(name) + "'");
    }
    return curves;
}

void write_figure_csv(std::ostream& os, std::span<const FigureCurve> curves,
                      std::span<const SweepResult> results) {
    if (curves.size() != results.size())
        throw std::invalid_argument("write_figure_csv: curve/result count mismatch");
    for (const auto& r : results)
        for (const auto& c : r.comments)
            os << "# " << c << '\n';
    os << "curve,alpha_db,capacity_bits_per_hz,gamma0,std_error,awgn_bits_per_hz\n";
    for (std::size_t i = 0; i < curves.size(); ++i) {
        for (const auto& row : results[i].rows) {
            os << curves[i].label << ',' << format_number(row.alpha_db) << ','
               << format_number(row.capacity) << ',' << optional_cell(row.gamma0) << ','
               << optional_cell(row.std_error) << ',' << format_number(row.awgn) << '\n';
        }
    }
}

std::vector<std::pair<std::string, std::string>> parse_config(std::istream& is) {
    const auto trim = [](std::string_view v) {
        const auto b = v.find_first_not_of(" \t\r");
        if (b == std::string_view::npos)
            return std::string();
        const auto e = v.find_last_not_of(" \t\r");
        return std::string(v.substr(b, e - b + 1));
    };
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const auto hash = line.find('#');
        const std::string body = trim(std::string_view(line).substr(0, hash));
        if (body.empty())
            continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": expected key = value");
        std::string key = trim(std::string_view(body).substr(0, eq));
        std::string value = trim(std::string_view(body).substr(eq + 1));
        while (!key.empty() && key.front() == '-')
            key.erase(key.begin());
        if (key.empty())
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": empty key");
        pairs.emplace_back(std::move(key), std::move(value));
    }
    return pairs;
}

std::vector<std::string> splice_config(std::vector<std::string> args) {
    std::vector<std::string> out;
    std::optional<std::string> path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size())
                throw std::invalid_argument("--config needs a file path");
            path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        } else {
            out.push_back(args[i]);
        }
    }
    if (!path)
        return out;
    std::ifstream file(*path);
    if (!file)
        throw std::invalid_argument("cannot open config file '" + *path + "'");
    std::vector<std::string> injected;
    for (auto& [key, value] : parse_config(file)) {
        injected.push_back("--" + key);
        if (!value.empty())
            injected.push_back(value);
    }
    // Flags belong to a subcommand, so they go after its name; for "figure"
    // the positional preset name must stay directly behind it.
    std::size_t at = out.empty() ? 0 : 1;
    if (!out.empty() && (out[0] == "figure" || out[0] == "eval") && out.size() > 1 &&
        out[1].rfind("-", 0) != 0)
        at = 2;
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(std::min(at, out.size())),
               injected.begin(), injected.end());
    return out;
}

} // namespace crcap::sweep
