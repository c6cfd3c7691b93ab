/*
 * Copyright 2026 the vircoad authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "vircoad/suites.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <numbers>

#include "suites_impl.hpp"
#include "vircoad/errors.hpp"

namespace vircoad {

namespace detail {

std::uint64_t derive_seed(std::uint64_t seed, const std::string& suite,
                          const std::string& name) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0xffu;
        h *= 1099511628211ull;
    };
    mix(suite);
    mix(name);
    return h ^ seed;
}

void Checker::check(const std::string& name, const std::string& anchor, double tolerance,
                    const Body& body) {
    CheckResult r;
    r.suite = suite_;
    r.name = name;
    r.anchor = anchor;
    auto it = sc_.tolerance_overrides.find(name);
    r.tolerance = it != sc_.tolerance_overrides.end() ? it->second : tolerance;

    Rng rng(derive_seed(sc_.seed, suite_, name));
    const auto t0 = std::chrono::steady_clock::now();
    try {
        r.max_residual = body(rng, r.note);
        r.pass = r.max_residual <= r.tolerance && std::isfinite(r.max_residual);
    } catch (const std::exception& e) {
        r.max_residual = std::numeric_limits<double>::infinity();
        r.pass = false;
        r.note = e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    out_.push_back(std::move(r));
}

void Checker::check_at_least(const std::string& name, const std::string& anchor,
                             double required, const Body& body) {
    check(name, anchor, 1e-15, [&](Rng& rng, std::string& note) {
        const double measured = body(rng, note);
        if (!note.empty()) note += "; ";
        note += "measured " + std::to_string(measured) + ", required >= " +
                std::to_string(required);
        return std::max(0.0, required - measured);
    });
}

double quadrature_oracle(const std::function<double(double)>& f, int points) {
    const double h = 2.0 * std::numbers::pi / points;
    double acc = 0.0;
    for (int j = 0; j < points; ++j) acc += f(h * j);
    return acc * h;
}

}  // namespace detail

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

double Report::total_wall_ms() const {
    double acc = 0.0;
    for (const auto& c : checks) acc += c.wall_ms;
    return acc;
}

const std::vector<std::string>& available_suites() {
    static const std::vector<std::string> names{
        "core", "density", "virasoro", "sturm", "superalg-ramond", "superalg-ns",
        "extalg", "agd"};
    return names;
}

Report run_suites(const SuiteConfig& cfg) {
    for (const auto& [name, tol] : cfg.tolerance_overrides)
        if (!(tol > 0.0)) throw ConfigError("tolerance override for \"" + name +
                                            "\" must be strictly positive");
    std::vector<std::string> selected = cfg.suites;
    if (selected.empty()) selected = available_suites();
    for (const auto& s : selected) {
        const auto& all = available_suites();
        if (std::find(all.begin(), all.end(), s) == all.end())
            throw ConfigError("unknown suite \"" + s + "\"");
    }

    Report report;
    report.seed = cfg.seed;
    for (const auto& s : selected) {
        if (s == "core") detail::run_core_suite(cfg, report.checks);
        else if (s == "density") detail::run_density_suite(cfg, report.checks);
        else if (s == "virasoro") detail::run_virasoro_suite(cfg, report.checks);
        else if (s == "sturm") detail::run_sturm_suite(cfg, report.checks);
        else if (s == "superalg-ramond") detail::run_superalg_suite(cfg, report.checks, false);
        else if (s == "superalg-ns") detail::run_superalg_suite(cfg, report.checks, true);
        else if (s == "extalg") detail::run_extalg_suite(cfg, report.checks);
        else if (s == "agd") detail::run_agd_suite(cfg, report.checks);
    }
    return report;
}

std::string render_jsonl(const Report& report, bool with_timing) {
    nlohmann::json header{{"record", "header"},
                          {"prng", report.prng},
                          {"seed", report.seed},
                          {"checks", report.checks.size()}};
    std::string out = header.dump();
    out += '\n';
    for (const auto& c : report.checks) {
        nlohmann::json j{{"suite", c.suite},     {"check", c.name},
                         {"anchor", c.anchor},   {"max_residual", c.max_residual},
                         {"tolerance", c.tolerance}, {"pass", c.pass}};
        if (!c.note.empty()) j["note"] = c.note;
        if (with_timing) j["wall_ms"] = c.wall_ms;
        out += j.dump();
        out += '\n';
    }
    return out;
}

}  // namespace vircoad
