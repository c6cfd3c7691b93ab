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

#ifndef VIRCOAD_SUITES_HPP
#define VIRCOAD_SUITES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vircoad/config.hpp"

namespace vircoad {

/// Configuration of the verification run.  Every randomized check derives
/// its own generator from (seed, suite, check name), so results do not
/// depend on check ordering.
struct SuiteConfig {
    std::uint64_t seed = 20260810;
    int data_degree = 8;   ///< degree of random test polynomials
    int rk4_steps = 4096;  ///< fundamental-solution integration steps
    std::vector<std::string> suites;  ///< empty means all

    /// Per-check tolerance overrides by check name; values must be > 0.
    std::map<std::string, double> tolerance_overrides;

    Config numerics;
};

struct CheckResult {
    std::string suite;
    std::string name;
    std::string anchor;  ///< formula under test, for failure triage
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;  ///< max_residual <= tolerance and no exception
    double wall_ms = 0.0;
    std::string note;  ///< measured values / exception text
};

struct Report {
    std::uint64_t seed = 0;
    std::string prng = "mt19937_64";
    std::vector<CheckResult> checks;

    bool all_pass() const;
    double total_wall_ms() const;
};

/// Names accepted in SuiteConfig::suites and `verify --suite`.
const std::vector<std::string>& available_suites();

/// Runs the selected suites; throws ConfigError on unknown suite names or
/// nonpositive tolerance overrides.  Check failures are recorded, never
/// thrown.
Report run_suites(const SuiteConfig& cfg);

/// One JSON object per line: a header line, then one line per check.
/// The body is byte-identical across runs with the same config when
/// with_timing is false (wall_ms is the only nondeterministic field).
std::string render_jsonl(const Report& report, bool with_timing = true);

}  // namespace vircoad

#endif
