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

#include "vircoad/virasoro.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "vircoad/errors.hpp"

namespace vircoad {

double gf_cocycle(const TrigPoly& X, const TrigPoly& Y, CocycleKind kind) {
    if (kind == CocycleKind::standard) {
        const TrigPoly x1 = derivative(X), y1 = derivative(Y);
        const TrigPoly x2 = derivative(x1), y2 = derivative(y1);
        return 0.5 * (integrate_period(x1 * y2) - integrate_period(x2 * y1));
    }
    const TrigPoly x1 = derivative(X);
    return integrate_period((derivative(X, 3) + x1) * Y);
}

VirasoroElement vir_bracket(const VirasoroElement& a, const VirasoroElement& b,
                            CocycleKind kind) {
    TrigPoly v = a.X * derivative(b.X) - derivative(a.X) * b.X;
    return {std::move(v), gf_cocycle(a.X, b.X, kind)};
}

double bott_cocycle(const CircleDiffeo& f, const CircleDiffeo& g, const Config& cfg) {
    const QuadratureGrid grid(cfg.grid_size);
    const TrigPoly fp = f.fprime();
    const TrigPoly gp = g.fprime();
    const TrigPoly gpp = derivative(gp);
    double acc = 0.0;
    for (int j = 0; j < grid.size(); ++j) {
        const double x = grid.node(j);
        const double gpx = gp(x);
        acc += std::log(fp(g(x)) * gpx) * gpp(x) / gpx;
    }
    return acc * grid.weight();
}

VirasoroCovector coad(const VirasoroElement& a, const VirasoroCovector& mu, CocycleKind kind) {
    Density out = lie_derivative(a.X, mu.u);
    TrigPoly central_term = derivative(a.X, 3);
    if (kind == CocycleKind::modified) central_term += derivative(a.X);
    out = out - Density(2.0, mu.c * central_term);
    return {std::move(out), 0.0};
}

double vir_pairing(const VirasoroCovector& mu, const VirasoroElement& a) {
    return pairing(mu.u, Density(-1.0, a.X)) + mu.c * a.alpha;
}

Density schwarzian(const CircleDiffeo& f, SchwarzianKind kind, const Config& cfg) {
    const QuadratureGrid grid(cfg.grid_size);
    // projected maps carry a roundoff floor across all modes; the third
    // derivative amplifies mode k by k^3, so trim below the floor first
    const TrigPoly p_clean =
        trim_below(f.periodic_part(), 2e-15 * std::max(1.0, max_abs_coeff(f.periodic_part())));
    const TrigPoly f1 = TrigPoly(1.0) + derivative(p_clean);
    const TrigPoly f2 = derivative(f1);
    const TrigPoly f3 = derivative(f2);
    std::vector<double> samples(static_cast<size_t>(grid.size()));
    for (int j = 0; j < grid.size(); ++j) {
        const double x = grid.node(j);
        const double d1 = f1(x), d2 = f2(x), d3 = f3(x);
        double s = d3 / d1 - 1.5 * (d2 / d1) * (d2 / d1);
        if (kind == SchwarzianKind::modified) s += 0.5 * (d1 * d1 - 1.0);
        samples[static_cast<size_t>(j)] = s;
    }
    Projection proj = project_periodic(samples, cfg.degree_cap);
    if (proj.residual > cfg.eps_proj * sample_scale(samples))
        throw ProjectionOverflow("schwarzian: projection residual " +
                                 fmt_sci(proj.residual));
    return Density(2.0, std::move(proj.value));
}

VirasoroCovector group_coad(const CircleDiffeo& f, const VirasoroCovector& mu, CocycleKind kind,
                            const Config& cfg) {
    Density transported = pullback(f, mu.u, cfg);
    Density s = schwarzian(f, kind, cfg);
    return {transported - mu.c * s, mu.c};
}

}  // namespace vircoad
