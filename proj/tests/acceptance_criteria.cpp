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

// Integration gate: runs the full verification suite with the default
// configuration and aggregates the checks into the release criteria, one
// pass/fail line each.  Exits nonzero if any criterion fails.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "vircoad/suites.hpp"

namespace {

struct Criterion {
    int number;
    std::string title;
    // (suite, check-name) pairs that must all pass
    std::vector<std::pair<std::string, std::string>> checks;
};

const std::vector<Criterion> kCriteria = {
    {1,
     "cocycle identities and anchor values",
     {{"virasoro", "cocycle_identity_standard"},
      {"virasoro", "cocycle_identity_modified"},
      {"virasoro", "cocycle_anchors"},
      {"virasoro", "coboundary_relation"},
      {"virasoro", "bott_identity"},
      {"virasoro", "bott_anchors"},
      {"extalg", "bracket_jacobi"},
      {"extalg", "bracket_anchors"}}},
    {2,
     "projective equivariance of the modified cocycles",
     {{"virasoro", "sl2_equivariance"},
      {"superalg-ns", "osp_even_kernel"},
      {"superalg-ns", "osp_odd_kernel_quarter"},
      {"superalg-ns", "osp_odd_kernel_printed_fails"}}},
    {3,
     "Schwarzian suite: kernels, group cocycle, pointwise anchor",
     {{"virasoro", "schwarzian_anchors"},
      {"virasoro", "schwarzian_cocycle_standard"},
      {"virasoro", "schwarzian_cocycle_modified"},
      {"virasoro", "modified_kernel"}}},
    {4,
     "coadjoint action equals the operator commutator",
     {{"sturm", "vect_act_matches_coad"}}},
    {5,
     "monodromy invariance under transport, with closed-form anchors",
     {{"sturm", "theorem2_invariance"},
      {"sturm", "fundamental_anchors"},
      {"sturm", "wronskian_conservation"}}},
    {6,
     "deformation fields solve the homotopy equation and close up",
     {{"sturm", "homotopy_field_residual"}, {"sturm", "homotopy_zero"}}},
    {7,
     "superalgebra suite: antisymmetry, Jacobi, duality, operator appearance",
     {{"superalg-ramond", "graded_antisymmetry"},
      {"superalg-ramond", "graded_jacobi"},
      {"superalg-ramond", "coadjoint_duality"},
      {"superalg-ramond", "sturm_liouville_appearance"},
      {"superalg-ns", "graded_antisymmetry"},
      {"superalg-ns", "graded_jacobi"},
      {"superalg-ns", "coadjoint_duality"},
      {"superalg-ns", "sturm_liouville_appearance"}}},
    {8,
     "extended-algebra suite: representation, duality, self-adjointness, dual routes",
     {{"extalg", "t_action_representation"},
      {"extalg", "theorem_duality"},
      {"extalg", "super_jacobi"},
      {"extalg", "self_adjointness"},
      {"extalg", "matrix_coad_routes"},
      {"extalg", "odd_coad_duality"}}},
    {9,
     "star-product and transvectant suite",
     {{"agd", "star_associativity"},
      {"agd", "transvectant_equivariance"},
      {"agd", "lift_correspondence"},
      {"agd", "agd_z_tangency"},
      {"agd", "projection_equivariance"}}},
    {10,
     "mutation smoke test: sign flips break the constrained checks",
     {{"virasoro", "mutation_detects_sign_flip"},
      {"sturm", "mutation_detects_transport_flip"}}},
};

}  // namespace

int main() {
    vircoad::SuiteConfig cfg;  // the pinned defaults are the acceptance config
    const vircoad::Report report = vircoad::run_suites(cfg);

    std::map<std::string, const vircoad::CheckResult*> index;
    for (const auto& c : report.checks) index[c.suite + "/" + c.name] = &c;

    int failures = 0;
    for (const auto& crit : kCriteria) {
        bool pass = true;
        std::string detail;
        for (const auto& [suite, name] : crit.checks) {
            const auto it = index.find(suite + "/" + name);
            if (it == index.end()) {
                pass = false;
                detail += " [missing " + suite + "/" + name + "]";
                continue;
            }
            if (!it->second->pass) {
                pass = false;
                detail += " [" + suite + "/" + name + " residual " +
                          std::to_string(it->second->max_residual) + " > tol " +
                          std::to_string(it->second->tolerance) + "]";
            }
        }
        if (!pass) ++failures;
        std::printf("criterion %2d: %s - %s%s\n", crit.number, pass ? "PASS" : "FAIL",
                    crit.title.c_str(), detail.c_str());
    }

    // Every remaining check must pass as well; surface any stragglers.
    int extra_failures = 0;
    for (const auto& c : report.checks) {
        if (!c.pass) {
            ++extra_failures;
            std::printf("check failure: %s/%s residual %g > tol %g %s\n", c.suite.c_str(),
                        c.name.c_str(), c.max_residual, c.tolerance, c.note.c_str());
        }
    }
    std::printf("%zu checks, %d criterion failures, %d failing checks, %.1f ms total\n",
                report.checks.size(), failures, extra_failures, report.total_wall_ms());
    return (failures == 0 && extra_failures == 0) ? 0 : 1;
}
