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

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "vircoad/errors.hpp"
#include "vircoad/serialize.hpp"
#include "vircoad/suites.hpp"

namespace {

using vircoad::json;

// Accepts either a JSON object/array or a compact token: "sin", "cos",
// "sin3", "cos2", or a plain number (constant).
vircoad::TrigPoly parse_trig_arg(const std::string& arg) {
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
        return vircoad::trig_from_json(vircoad::parse_json(arg));
    }
    auto mode_of = [](const std::string& s, const char* prefix) -> std::optional<int> {
        const std::string p(prefix);
        if (s.rfind(p, 0) != 0) return std::nullopt;
        if (s.size() == p.size()) return 1;
        try {
            size_t used = 0;
            const int k = std::stoi(s.substr(p.size()), &used);
            if (used == s.size() - p.size() && k >= 0) return k;
        } catch (const std::exception&) {
        }
        return std::nullopt;
    };
    if (auto k = mode_of(arg, "sin")) return vircoad::TrigPoly::harmonic_sin(*k);
    if (auto k = mode_of(arg, "cos")) return vircoad::TrigPoly::harmonic_cos(*k);
    try {
        size_t used = 0;
        const double v = std::stod(arg, &used);
        if (used == arg.size()) return vircoad::TrigPoly(v);
    } catch (const std::exception&) {
    }
    throw vircoad::ParseError("cannot parse \"" + arg +
                              "\" as a trigonometric polynomial (JSON, sinK, cosK or number)");
}

vircoad::Density parse_density_arg(const std::string& arg, double fallback_weight) {
    const json j = vircoad::parse_json(arg);
    if (j.is_object() && j.contains("lambda")) return vircoad::density_from_json(j);
    return vircoad::Density(fallback_weight, vircoad::trig_from_json(j));
}

void apply_config_file(const std::string& path, vircoad::SuiteConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw vircoad::ConfigError("cannot open config file " + path);
    const std::string text((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
    const json j = vircoad::parse_json(text);
    if (!j.is_object()) throw vircoad::ConfigError("config file must hold a JSON object");
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("data_degree")) cfg.data_degree = j["data_degree"].get<int>();
    if (j.contains("rk4_steps")) cfg.rk4_steps = j["rk4_steps"].get<int>();
    if (j.contains("suites")) cfg.suites = j["suites"].get<std::vector<std::string>>();
    if (j.contains("tolerances"))
        for (const auto& [name, tol] : j["tolerances"].items())
            cfg.tolerance_overrides[name] = tol.get<double>();
    if (j.contains("numerics")) {
        const json& n = j["numerics"];
        if (n.contains("degree_cap")) cfg.numerics.degree_cap = n["degree_cap"].get<int>();
        if (n.contains("grid_size")) cfg.numerics.grid_size = n["grid_size"].get<int>();
        if (n.contains("eps_coeff")) cfg.numerics.eps_coeff = n["eps_coeff"].get<double>();
        if (n.contains("eps_proj")) cfg.numerics.eps_proj = n["eps_proj"].get<double>();
        if (n.contains("flow_steps")) cfg.numerics.flow_steps = n["flow_steps"].get<int>();
        if (n.contains("ode_steps")) cfg.numerics.ode_steps = n["ode_steps"].get<int>();
        if (n.contains("wronskian_tol"))
            cfg.numerics.wronskian_tol = n["wronskian_tol"].get<double>();
    }
}

int run_verify(vircoad::SuiteConfig cfg) {
    const vircoad::Report report = vircoad::run_suites(cfg);
    std::fputs(vircoad::render_jsonl(report, true).c_str(), stdout);
    return report.all_pass() ? 0 : 1;
}

int structured_error(const char* kind, const std::exception& e) {
    const json j{{"error", kind}, {"message", e.what()}};
    std::puts(j.dump().c_str());
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Computational toolkit for tensor densities on the circle: cocycles,\n"
        "Schwarzian derivatives, Hill-equation monodromy, superalgebra brackets\n"
        "and star-product transvectants, with a property-verification runner."};
    app.require_subcommand(1);

    // -------------------------------------------------------------- verify
    vircoad::SuiteConfig suite_cfg;
    std::vector<std::string> suites;
    std::string config_file;
    auto add_verify_options = [&](CLI::App* cmd) {
        cmd->add_option("--suite", suites, "suite name (repeatable); default runs all");
        cmd->add_option("--seed", suite_cfg.seed, "PRNG seed for the drawn test data");
        cmd->add_option("--config", config_file, "JSON file with suite configuration");
        cmd->add_option("--rk4-steps", suite_cfg.rk4_steps,
                        "fundamental-solution integration steps");
    };
    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    add_verify_options(verify);

    CLI::App* vir_verify =
        app.add_subcommand("virasoro-verify", "run the virasoro suite (alias)");
    CLI::App* ext_verify =
        app.add_subcommand("extalg-verify", "run the extended-algebra suite (alias)");
    CLI::App* agd_verify =
        app.add_subcommand("agd-verify", "run the star-product/transvectant suite (alias)");
    CLI::App* super_verify =
        app.add_subcommand("super-verify", "run a superalgebra suite (alias)");
    std::string sector = "ramond";
    super_verify->add_option("--sector", sector, "ramond|ns")
        ->check(CLI::IsMember({"ramond", "ns"}));
    for (CLI::App* cmd : {vir_verify, ext_verify, agd_verify, super_verify}) {
        cmd->add_option("--seed", suite_cfg.seed, "PRNG seed");
        cmd->add_option("--rk4-steps", suite_cfg.rk4_steps, "integration steps");
    }

    // ------------------------------------------------------------- compute
    std::string arg_f, arg_g, kind = "standard";
    CLI::App* schwarzian_cmd =
        app.add_subcommand("schwarzian", "Schwarzian derivative of a circle map");
    schwarzian_cmd->add_option("map", arg_f, "CircleDiffeo JSON {shift, p}")->required();
    schwarzian_cmd->add_option("--kind", kind, "standard|modified")
        ->check(CLI::IsMember({"standard", "modified"}));

    std::string arg_op;
    int steps = 4096;
    CLI::App* monodromy_cmd =
        app.add_subcommand("monodromy", "monodromy invariant of a second-order operator");
    monodromy_cmd->add_option("--op", arg_op, "SturmLiouville JSON {a, u}")->required();
    monodromy_cmd->add_option("--steps", steps, "RK4 steps (default 4096)");

    CLI::App* gf_cmd = app.add_subcommand("gf-cocycle", "2-cocycle value on two vector fields");
    gf_cmd->add_option("X", arg_f, "TrigPoly JSON or token (sinK/cosK/number)")->required();
    gf_cmd->add_option("Y", arg_g, "TrigPoly JSON or token")->required();
    gf_cmd->add_option("--kind", kind, "standard|modified")
        ->check(CLI::IsMember({"standard", "modified"}));

    int order = 4;
    CLI::App* star_cmd =
        app.add_subcommand("star", "star product of two Laurent polynomials");
    star_cmd->add_option("F", arg_f, "LaurentPoly2 JSON [[i,j,num,den],...]")->required();
    star_cmd->add_option("G", arg_g, "LaurentPoly2 JSON")->required();
    star_cmd->add_option("--order", order, "truncation order in hbar (default 4)");

    int tm = 1;
    CLI::App* trans_cmd =
        app.add_subcommand("transvectant", "bilinear projective operation on densities");
    trans_cmd->add_option("phi", arg_f, "Density JSON {lambda, value}")->required();
    trans_cmd->add_option("psi", arg_g, "Density JSON")->required();
    trans_cmd->add_option("-m,--order", tm, "transvectant order (default 1)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed() || vir_verify->parsed() || ext_verify->parsed() ||
            agd_verify->parsed() || super_verify->parsed()) {
            if (!config_file.empty()) apply_config_file(config_file, suite_cfg);
            if (!suites.empty()) suite_cfg.suites = suites;
            if (vir_verify->parsed()) suite_cfg.suites = {"virasoro"};
            if (ext_verify->parsed()) suite_cfg.suites = {"extalg"};
            if (agd_verify->parsed()) suite_cfg.suites = {"agd"};
            if (super_verify->parsed())
                suite_cfg.suites = {sector == "ns" ? "superalg-ns" : "superalg-ramond"};
            return run_verify(suite_cfg);
        }

        if (schwarzian_cmd->parsed()) {
            const vircoad::CircleDiffeo f =
                vircoad::diffeo_from_json(vircoad::parse_json(arg_f));
            const vircoad::SchwarzianKind k = kind == "modified"
                                                  ? vircoad::SchwarzianKind::modified
                                                  : vircoad::SchwarzianKind::standard;
            std::puts(vircoad::to_json(vircoad::schwarzian(f, k)).dump().c_str());
            return 0;
        }
        if (monodromy_cmd->parsed()) {
            const vircoad::SturmLiouville L =
                vircoad::sturm_from_json(vircoad::parse_json(arg_op));
            const vircoad::FundamentalPath path = vircoad::fundamental_path(L, steps);
            const vircoad::MonodromyInvariant inv = vircoad::monodromy_invariant(path);
            const char* cls = inv.cls == vircoad::MonodromyClass::elliptic     ? "elliptic"
                              : inv.cls == vircoad::MonodromyClass::hyperbolic ? "hyperbolic"
                                                                               : "parabolic";
            const json j{{"trace", inv.trace},
                         {"lift_index", inv.lift_index},
                         {"class", cls},
                         {"wronskian_drift", path.wronskian_drift}};
            std::puts(j.dump().c_str());
            return 0;
        }
        if (gf_cmd->parsed()) {
            const vircoad::TrigPoly X = parse_trig_arg(arg_f);
            const vircoad::TrigPoly Y = parse_trig_arg(arg_g);
            const vircoad::CocycleKind k = kind == "modified" ? vircoad::CocycleKind::modified
                                                              : vircoad::CocycleKind::standard;
            const json j{{"value", vircoad::gf_cocycle(X, Y, k)}};
            std::puts(j.dump().c_str());
            return 0;
        }
        if (star_cmd->parsed()) {
            const vircoad::LaurentPoly2 F =
                vircoad::laurent_from_json(vircoad::parse_json(arg_f));
            const vircoad::LaurentPoly2 G =
                vircoad::laurent_from_json(vircoad::parse_json(arg_g));
            std::puts(vircoad::to_json(vircoad::star(F, G, order)).dump().c_str());
            return 0;
        }
        if (trans_cmd->parsed()) {
            const vircoad::Density phi = parse_density_arg(arg_f, 0.0);
            const vircoad::Density psi = parse_density_arg(arg_g, 0.0);
            std::puts(vircoad::to_json(vircoad::transvectant(phi, psi, tm)).dump().c_str());
            return 0;
        }
    } catch (const vircoad::ParseError& e) {
        return structured_error("parse", e);
    } catch (const vircoad::ConfigError& e) {
        const int rc = structured_error("config", e);
        return rc ? 2 : 2;
    } catch (const vircoad::Error& e) {
        return structured_error("domain", e);
    } catch (const std::exception& e) {
        return structured_error("internal", e);
    }
    return 0;
}
