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

#ifndef VIRCOAD_SUITES_IMPL_HPP
#define VIRCOAD_SUITES_IMPL_HPP

#include <chrono>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "vircoad/rng.hpp"
#include "vircoad/suites.hpp"

namespace vircoad::detail {

/// Stable seed derivation (FNV-1a over suite/check names mixed with the
/// run seed) so each check owns an independent reproducible stream.
std::uint64_t derive_seed(std::uint64_t seed, const std::string& suite, const std::string& name);

/// Collects check results for one suite; runs each check body, times it,
/// and converts exceptions into failed records.
class Checker {
  public:
    Checker(std::string suite, const SuiteConfig& sc, std::vector<CheckResult>& out)
        : suite_(std::move(suite)), sc_(sc), out_(out) {}

    /// body(rng, note) returns the max residual.
    using Body = std::function<double(Rng&, std::string&)>;

    void check(const std::string& name, const std::string& anchor, double tolerance,
               const Body& body);

    /// For "the mutated/perturbed formula must fail loudly" and
    /// "convergence ratio must exceed" style checks: body returns the
    /// measured value, which must be >= required; the recorded residual is
    /// the shortfall max(0, required - measured).
    void check_at_least(const std::string& name, const std::string& anchor, double required,
                        const Body& body);

    const SuiteConfig& sc() const { return sc_; }
    const Config& num() const { return sc_.numerics; }

  private:
    std::string suite_;
    const SuiteConfig& sc_;
    std::vector<CheckResult>& out_;
};

/// High-resolution trapezoid quadrature of an arbitrary callable over one
/// period; the independent oracle for every integral identity (it never
/// touches the coefficient-level integrate_period shortcut).
double quadrature_oracle(const std::function<double(double)>& f, int points = 1 << 14);

void run_core_suite(const SuiteConfig& sc, std::vector<CheckResult>& out);
void run_density_suite(const SuiteConfig& sc, std::vector<CheckResult>& out);
void run_virasoro_suite(const SuiteConfig& sc, std::vector<CheckResult>& out);
void run_sturm_suite(const SuiteConfig& sc, std::vector<CheckResult>& out);
void run_superalg_suite(const SuiteConfig& sc, std::vector<CheckResult>& out, bool neveu_schwarz);
void run_extalg_suite(const SuiteConfig& sc, std::vector<CheckResult>& out);
void run_agd_suite(const SuiteConfig& sc, std::vector<CheckResult>& out);

}  // namespace vircoad::detail

#endif
