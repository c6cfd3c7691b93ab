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

#include <cmath>
#include <numbers>

#include "suites_impl.hpp"
#include "vircoad/diffeo.hpp"
#include "vircoad/trig.hpp"

namespace vircoad::detail {

void run_core_suite(const SuiteConfig& sc, std::vector<CheckResult>& out) {
    Checker ck("core", sc, out);
    const Config& cfg = sc.numerics;
    const int deg = sc.data_degree;

    ck.check("derivative_exactness", "d/dx mode rule; int f' dx = 0", 1e-14,
             [&](Rng& rng, std::string&) {
                 double r = 0.0;
                 r = std::max(r, max_abs_coeff(derivative(TrigPoly(1.0))));
                 r = std::max(r, coeff_distance(derivative(TrigPoly::harmonic_sin(1)),
                                                TrigPoly::harmonic_cos(1)));
                 r = std::max(r, coeff_distance(derivative(derivative(derivative(
                                                    TrigPoly::harmonic_sin(2)))),
                                                TrigPoly::harmonic_cos(2, -8.0)));
                 for (int t = 0; t < 100; ++t) {
                     const TrigPoly f = random_trig(rng, deg);
                     r = std::max(r, std::abs(integrate_period(derivative(f))));
                 }
                 return r;
             });

    ck.check("leibniz_rule", "(fg)' = f'g + fg'", 1e-12, [&](Rng& rng, std::string&) {
        double r = 0.0;
        for (int t = 0; t < 100; ++t) {
            const TrigPoly f = random_trig(rng, deg), g = random_trig(rng, deg);
            r = std::max(r, coeff_distance(derivative(f * g),
                                           derivative(f) * g + f * derivative(g)));
        }
        for (int t = 0; t < 20; ++t) {
            const HalfTrigPoly f = random_half_trig(rng, deg);
            const HalfTrigPoly g = random_half_trig(rng, deg);
            r = std::max(r, coeff_distance(derivative(f * g),
                                           derivative(f) * g + f * derivative(g)));
        }
        return r;
    });

    ck.check("product_anchors", "sin*cos = sin(2x)/2; sin(x/2)^2 = (1-cos x)/2; 1*f = f",
             1e-14, [&](Rng& rng, std::string&) {
                 double r = coeff_distance(
                     TrigPoly::harmonic_sin(1) * TrigPoly::harmonic_cos(1),
                     TrigPoly::harmonic_sin(2, 0.5));
                 const HalfTrigPoly half_sin = HalfTrigPoly::harmonic_sin(0);
                 r = std::max(r, coeff_distance(half_sin * half_sin,
                                                TrigPoly(0.5) + TrigPoly::harmonic_cos(1, -0.5)));
                 const TrigPoly f = random_trig(rng, deg);
                 r = std::max(r, coeff_distance(TrigPoly(1.0) * f, f));
                 return r;
             });

    ck.check("integral_anchors", "int sin = 0, int 1 = 2pi, int cos^2 = pi (vs quadrature)",
             1e-12, [&](Rng&, std::string&) {
                 const TrigPoly c = TrigPoly::harmonic_cos(1);
                 double r = std::abs(integrate_period(TrigPoly::harmonic_sin(1)));
                 r = std::max(r, std::abs(integrate_period(TrigPoly(1.0)) -
                                          2.0 * std::numbers::pi));
                 r = std::max(r, std::abs(integrate_period(c * c) - std::numbers::pi));
                 const double oracle =
                     quadrature_oracle([&](double x) { return c(x) * c(x); });
                 r = std::max(r, std::abs(integrate_period(c * c) - oracle));
                 return r;
             });

    ck.check("compose_associativity", "(f.g).h = f.(g.h)", 10.0 * cfg.eps_proj,
             [&](Rng& rng, std::string&) {
                 double r = 0.0;
                 for (int t = 0; t < 10; ++t) {
                     const CircleDiffeo f = random_diffeo(rng, deg, 0.3, cfg);
                     const CircleDiffeo g = random_diffeo(rng, deg, 0.3, cfg);
                     const CircleDiffeo h = random_diffeo(rng, deg, 0.3, cfg);
                     r = std::max(r, distance(compose(compose(f, g, cfg), h, cfg),
                                              compose(f, compose(g, h, cfg), cfg)));
                 }
                 return r;
             });

    ck.check("compose_anchors", "id.f = f; rotations add", 1e-13,
             [&](Rng& rng, std::string&) {
                 const CircleDiffeo f = random_diffeo(rng, deg, 0.3, cfg);
                 double r = distance(compose(CircleDiffeo(), f, cfg), f);
                 const CircleDiffeo ra = CircleDiffeo::rotation(0.7);
                 const CircleDiffeo rb = CircleDiffeo::rotation(1.1);
                 r = std::max(r, distance(compose(ra, rb, cfg), CircleDiffeo::rotation(1.8)));
                 return r;
             });

    ck.check("invert_roundtrip", "f . f^{-1} = id", cfg.eps_proj, [&](Rng& rng, std::string&) {
        double r = 0.0;
        for (int t = 0; t < 10; ++t) {
            const CircleDiffeo f = random_diffeo(rng, deg, 0.4, cfg);
            r = std::max(r, distance(compose(f, invert(f, cfg), cfg), CircleDiffeo()));
            r = std::max(r, distance(compose(invert(f, cfg), f, cfg), CircleDiffeo()));
        }
        const CircleDiffeo rot = CircleDiffeo::rotation(0.9);
        r = std::max(r, distance(invert(rot, cfg), CircleDiffeo::rotation(-0.9)));
        // f(x) = x + 0.3 sin x fixes 0, so its inverse does too.
        const CircleDiffeo f(0.0, TrigPoly::harmonic_sin(1, 0.3), cfg);
        r = std::max(r, std::abs(invert(f, cfg)(0.0)));
        return r;
    });

    ck.check("flow_group_law", "flow(X,s) . flow(X,t) = flow(X,s+t)", 10.0 * cfg.eps_proj,
             [&](Rng& rng, std::string&) {
                 std::uniform_real_distribution<double> u(-1.0, 1.0);
                 double r = 0.0;
                 for (int t = 0; t < 6; ++t) {
                     const TrigPoly X = random_trig(rng, deg, 0.5);
                     const double s1 = u(rng), s2 = u(rng);
                     r = std::max(r, distance(compose(flow(X, s1, cfg), flow(X, s2, cfg), cfg),
                                              flow(X, s1 + s2, cfg)));
                 }
                 return r;
             });

    ck.check("flow_anchors", "flow(0,t) = id; flow(1,t) = rotation; sin-field fixes pi",
             1e-9, [&](Rng&, std::string&) {
                 double r = distance(flow(TrigPoly(), 0.8, cfg), CircleDiffeo());
                 r = std::max(r, distance(flow(TrigPoly(1.0), 0.8, cfg),
                                          CircleDiffeo::rotation(0.8)));
                 const TrigPoly sinx = TrigPoly::harmonic_sin(1);
                 for (double t : {0.25, 0.5, 1.0})
                     r = std::max(r, std::abs(flow(sinx, t, cfg)(std::numbers::pi) -
                                              std::numbers::pi));
                 return r;
             });
}

}  // namespace vircoad::detail
