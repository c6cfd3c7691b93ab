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
#include "vircoad/density.hpp"
#include "vircoad/errors.hpp"
#include "vircoad/diffeo.hpp"
#include "vircoad/virasoro.hpp"

namespace vircoad::detail {

namespace {

TrigPoly bracket_vec(const TrigPoly& X, const TrigPoly& Y) {
    return X * derivative(Y) - derivative(X) * Y;
}

}  // namespace

void run_density_suite(const SuiteConfig& sc, std::vector<CheckResult>& out) {
    Checker ck("density", sc, out);
    const Config& cfg = sc.numerics;
    const int deg = sc.data_degree;
    const double weights[] = {-1.0, -0.5, 0.0, 0.5, 1.5, 2.0, 3.0};

    ck.check("action_law", "g.(h.a) = (g.h).a over a spread of weights", 10.0 * cfg.eps_proj,
             [&](Rng& rng, std::string&) {
                 double r = 0.0;
                 for (double w : weights) {
                     const CircleDiffeo g = random_diffeo(rng, deg, 0.3, cfg);
                     const CircleDiffeo h = random_diffeo(rng, deg, 0.3, cfg);
                     const Density a(w, random_trig(rng, deg));
                     r = std::max(r, coeff_distance(diffeo_act(g, diffeo_act(h, a, cfg), cfg),
                                                    diffeo_act(compose(g, h, cfg), a, cfg)));
                 }
                 return r;
             });

    ck.check("act_anchors", "identity and rotations act by shift; weight-0 pointwise",
             cfg.eps_proj, [&](Rng& rng, std::string&) {
                 const Density a(1.5, TrigPoly::harmonic_sin(1));
                 double r = coeff_distance(diffeo_act(CircleDiffeo(), a, cfg), a);
                 // rotation by c maps sin x to sin(x - c)
                 const double c = 0.6;
                 const Density rotated = diffeo_act(CircleDiffeo::rotation(c), a, cfg);
                 r = std::max(r, coeff_distance(rotated,
                                                Density(1.5, TrigPoly::harmonic_sin(1) *
                                                                     std::cos(c) +
                                                                 TrigPoly::harmonic_cos(1) *
                                                                     -std::sin(c))));
                 // weight 0 transports by composition with g^{-1}
                 const CircleDiffeo g(0.0, TrigPoly::harmonic_sin(1, 0.3), cfg);
                 const CircleDiffeo gi = invert(g, cfg);
                 const Density b(0.0, TrigPoly::harmonic_cos(1));
                 const Density moved = diffeo_act(g, b, cfg);
                 double point = 0.0;
                 for (int j = 0; j < 64; ++j) {
                     const double x = 2.0 * std::numbers::pi * j / 64;
                     point = std::max(point, std::abs(moved(x) - std::cos(gi(x))));
                 }
                 r = std::max(r, point);
                 (void)rng;
                 return r;
             });

    ck.check("lie_derivative_anchors", "X=1 gives a'; weight 2 example on sin,cos", 1e-14,
             [&](Rng& rng, std::string&) {
                 const Density a(1.5, random_trig(rng, deg));
                 double r = coeff_distance(lie_derivative(TrigPoly(1.0), a),
                                           Density(1.5, derivative(a.periodic_value())));
                 // X = sin x, a = cos x, lambda = 2:
                 // sin*(-sin) + 2cos*cos = 1/2 + (3/2) cos 2x
                 const Density b(2.0, TrigPoly::harmonic_cos(1));
                 const Density got = lie_derivative(TrigPoly::harmonic_sin(1), b);
                 r = std::max(r, coeff_distance(got, Density(2.0, TrigPoly(0.5) +
                                                                      TrigPoly::harmonic_cos(2, 1.5))));
                 return r;
             });

    ck.check("flow_derivative_vs_lie",
             "d/dt of the transport along flow(X,t) at t=0 is -L_X", 1e-5,
             [&](Rng& rng, std::string&) {
                 const double h = 1e-3;
                 double r = 0.0;
                 for (double w : {0.0, 2.0, -0.5}) {
                     const TrigPoly X = random_trig(rng, 4, 0.5);
                     const Density a(w, random_trig(rng, 4));
                     const Density plus = diffeo_act(flow(X, h, cfg), a, cfg);
                     const Density minus = diffeo_act(flow(X, -h, cfg), a, cfg);
                     const Density diff = (1.0 / (2.0 * h)) * (plus - minus);
                     r = std::max(r, coeff_distance(diff, -1.0 * lie_derivative(X, a)));
                 }
                 return r;
             });

    ck.check("lie_bracket_action", "L_X L_Y - L_Y L_X = L_[X,Y]", 1e-12,
             [&](Rng& rng, std::string&) {
                 double r = 0.0;
                 for (int t = 0; t < 25; ++t) {
                     const TrigPoly X = random_trig(rng, deg), Y = random_trig(rng, deg);
                     const Density a(t % 2 == 0 ? 1.5 : -0.5,
                                     random_trig(rng, deg));
                     r = std::max(r, coeff_distance(
                                         lie_derivative(X, lie_derivative(Y, a)) -
                                             lie_derivative(Y, lie_derivative(X, a)),
                                         lie_derivative(bracket_vec(X, Y), a)));
                 }
                 for (int t = 0; t < 10; ++t) {
                     const TrigPoly X = random_trig(rng, deg), Y = random_trig(rng, deg);
                     const Density a(-0.5, random_half_trig(rng, deg));
                     r = std::max(r, coeff_distance(
                                         lie_derivative(X, lie_derivative(Y, a)) -
                                             lie_derivative(Y, lie_derivative(X, a)),
                                         lie_derivative(bracket_vec(X, Y), a)));
                 }
                 return r;
             });

    ck.check("pairing_invariance", "int (L_X a) b + int a (L_X b) = 0 at weights summing to 1",
             1e-12, [&](Rng& rng, std::string&) {
                 double r = 0.0;
                 for (int t = 0; t < 25; ++t) {
                     const TrigPoly X = random_trig(rng, deg);
                     const double w = (t % 5) * 0.5 - 1.0;
                     const Density a(w, random_trig(rng, deg));
                     const Density b(1.0 - w, random_trig(rng, deg));
                     r = std::max(r, std::abs(pairing(lie_derivative(X, a), b) +
                                              pairing(a, lie_derivative(X, b))));
                 }
                 for (int t = 0; t < 10; ++t) {
                     const TrigPoly X = random_trig(rng, deg);
                     const Density a(1.5, random_half_trig(rng, deg));
                     const Density b(-0.5, random_half_trig(rng, deg));
                     r = std::max(r, std::abs(pairing(lie_derivative(X, a), b) +
                                              pairing(a, lie_derivative(X, b))));
                 }
                 return r;
             });

    ck.check("pairing_anchors",
             "orthogonal modes; int 1 = 2pi; half-mode square integrates to pi", 1e-13,
             [&](Rng&, std::string&) {
                 double r = std::abs(pairing(Density(2.0, TrigPoly::harmonic_sin(1)),
                                             Density(-1.0, TrigPoly::harmonic_cos(1))));
                 r = std::max(r, std::abs(pairing(Density(2.0, TrigPoly(1.0)),
                                                  Density(-1.0, TrigPoly(1.0))) -
                                          2.0 * std::numbers::pi));
                 r = std::max(r, std::abs(pairing(Density(1.5, HalfTrigPoly::harmonic_sin(0)),
                                                  Density(-0.5, HalfTrigPoly::harmonic_sin(0))) -
                                          std::numbers::pi));
                 bool threw = false;
                 try {
                     pairing(Density(2.0, TrigPoly(1.0)), Density(0.5, TrigPoly(1.0)));
                 } catch (const WeightMismatch&) {
                     threw = true;
                 }
                 r = std::max(r, threw ? 0.0 : 1.0);
                 return r;
             });
}

void run_virasoro_suite(const SuiteConfig& sc, std::vector<CheckResult>& out) {
    Checker ck("virasoro", sc, out);
    const Config& cfg = sc.numerics;
    const int deg = sc.data_degree;
    const TrigPoly sinx = TrigPoly::harmonic_sin(1);
    const TrigPoly cosx = TrigPoly::harmonic_cos(1);

    for (CocycleKind kind : {CocycleKind::standard, CocycleKind::modified}) {
        const std::string tag = kind == CocycleKind::standard ? "standard" : "modified";
        ck.check("cocycle_identity_" + tag, "w(X,[Y,Z]) + w(Y,[Z,X]) + w(Z,[X,Y]) = 0", 1e-10,
                 [&, kind](Rng& rng, std::string&) {
                     double r = 0.0;
                     for (int t = 0; t < 100; ++t) {
                         const TrigPoly X = random_trig(rng, deg), Y = random_trig(rng, deg),
                                        Z = random_trig(rng, deg);
                         r = std::max(r, std::abs(gf_cocycle(X, bracket_vec(Y, Z), kind) +
                                                  gf_cocycle(Y, bracket_vec(Z, X), kind) +
                                                  gf_cocycle(Z, bracket_vec(X, Y), kind)));
                     }
                     return r;
                 });
    }

    ck.check("cocycle_anchors", "w(sin,cos) = -pi (vs quadrature); kernels", 1e-12,
             [&](Rng& rng, std::string&) {
                 double r = std::abs(gf_cocycle(sinx, cosx, CocycleKind::standard) +
                                     std::numbers::pi);
                 const double oracle = quadrature_oracle([](double x) {
                     // (1/2)(X'Y'' - X''Y') with X = sin, Y = cos
                     const double xp = std::cos(x), xpp = -std::sin(x);
                     const double yp = -std::sin(x), ypp = -std::cos(x);
                     return 0.5 * (xp * ypp - xpp * yp);
                 });
                 r = std::max(r, std::abs(gf_cocycle(sinx, cosx, CocycleKind::standard) - oracle));
                 const TrigPoly Y = random_trig(rng, deg);
                 r = std::max(r, std::abs(gf_cocycle(TrigPoly(1.0), Y, CocycleKind::standard)));
                 r = std::max(r, std::abs(gf_cocycle(sinx, Y, CocycleKind::modified)));
                 return r;
             });

    ck.check("coboundary_relation", "w_mod(X,Y) - w(X,Y) = int X'Y dx", 1e-12,
             [&](Rng& rng, std::string&) {
                 double r = 0.0;
                 for (int t = 0; t < 50; ++t) {
                     const TrigPoly X = random_trig(rng, deg), Y = random_trig(rng, deg);
                     r = std::max(r, std::abs(gf_cocycle(X, Y, CocycleKind::modified) -
                                              gf_cocycle(X, Y, CocycleKind::standard) -
                                              integrate_period(derivative(X) * Y)));
                 }
                 return r;
             });

    ck.check("sl2_equivariance", "w_mod(Z, X) = 0 for Z in {1, sin, cos}", 1e-12,
             [&](Rng& rng, std::string&) {
                 double r = 0.0;
                 for (int t = 0; t < 50; ++t) {
                     const TrigPoly X = random_trig(rng, deg);
                     for (const TrigPoly& Z : {TrigPoly(1.0), sinx, cosx})
                         r = std::max(r, std::abs(gf_cocycle(Z, X, CocycleKind::modified)));
                 }
                 return r;
             });

    ck.check("central_inertness", "[(0,a),(Y,b)] = (0, 0)", 1e-15, [&](Rng& rng, std::string&) {
        const VirasoroElement zero_vec{TrigPoly(), 1.3};
        const VirasoroElement other{random_trig(rng, deg), -0.4};
        const VirasoroElement b = vir_bracket(zero_vec, other, CocycleKind::standard);
        return std::max(max_abs_coeff(b.X), std::abs(b.alpha));
    });

    ck.check("bott_identity", "B(f,g) + B(f.g,h) = B(f,g.h) + B(g,h)", 1e-7,
             [&](Rng& rng, std::string&) {
                 // the group 2-cocycle identity carries all four terms; the
                 // central product is (f,a)(g,b) = (f.g, a + b + B(f,g))
                 double r = 0.0;
                 for (int t = 0; t < 10; ++t) {
                     const CircleDiffeo f = random_diffeo(rng, deg, 0.25, cfg);
                     const CircleDiffeo g = random_diffeo(rng, deg, 0.25, cfg);
                     const CircleDiffeo h = random_diffeo(rng, deg, 0.25, cfg);
                     r = std::max(r, std::abs(bott_cocycle(f, g, cfg) +
                                              bott_cocycle(compose(f, g, cfg), h, cfg) -
                                              bott_cocycle(f, compose(g, h, cfg), cfg) -
                                              bott_cocycle(g, h, cfg)));
                 }
                 return r;
             });

    ck.check("bott_anchors", "B(f,id) = 0 = B(id,g); grid-refinement stability", 1e-8,
             [&](Rng& rng, std::string&) {
                 const CircleDiffeo f = random_diffeo(rng, deg, 0.25, cfg);
                 const CircleDiffeo g = random_diffeo(rng, deg, 0.25, cfg);
                 double r = std::abs(bott_cocycle(f, CircleDiffeo(), cfg));
                 r = std::max(r, std::abs(bott_cocycle(CircleDiffeo(), g, cfg)));
                 const CircleDiffeo w(0.0, TrigPoly::harmonic_sin(1, 0.2), cfg);
                 Config fine = cfg;
                 fine.grid_size = 4 * cfg.grid_size;
                 fine.degree_cap = 2 * cfg.degree_cap;
                 r = std::max(r, std::abs(bott_cocycle(w, w, cfg) - bott_cocycle(w, w, fine)));
                 return r;
             });

    for (CocycleKind kind : {CocycleKind::standard, CocycleKind::modified}) {
        const std::string tag = kind == CocycleKind::standard ? "standard" : "modified";
        ck.check("coad_duality_" + tag, "<coad(a,mu), b> + <mu, [a,b]> = 0", 1e-10,
                 [&, kind](Rng& rng, std::string&) {
                     std::uniform_real_distribution<double> u(-1.0, 1.0);
                     double r = 0.0;
                     for (int t = 0; t < 50; ++t) {
                         const VirasoroElement a{random_trig(rng, deg), u(rng)};
                         const VirasoroElement b{random_trig(rng, deg), u(rng)};
                         const VirasoroCovector mu(random_trig(rng, deg), u(rng));
                         r = std::max(r, std::abs(vir_pairing(coad(a, mu, kind), b) +
                                                  vir_pairing(mu, vir_bracket(a, b, kind))));
                     }
                     return r;
                 });
    }

    ck.check("coad_anchors", "rotation field gives u'; c-term gives cos for X = sin", 1e-14,
             [&](Rng& rng, std::string&) {
                 const TrigPoly u = random_trig(rng, deg);
                 const VirasoroCovector mu(u, 0.8);
                 const VirasoroCovector rot = coad({TrigPoly(1.0), 0.0}, mu,
                                                   CocycleKind::standard);
                 double r = coeff_distance(rot.u, Density(2.0, derivative(u)));
                 r = std::max(r, std::abs(rot.c));
                 const VirasoroCovector pure(TrigPoly(), 1.0);
                 r = std::max(r, coeff_distance(
                                     coad({sinx, 0.0}, pure, CocycleKind::standard).u,
                                     Density(2.0, cosx)));
                 r = std::max(r, max_abs_coeff(coad({sinx, 0.0}, pure, CocycleKind::modified)
                                                   .u.periodic_value()));
                 return r;
             });

    ck.check("schwarzian_anchors", "S(rotation) = 0; S(x + 0.1 sin x)(0) = -1/11", 1e-12,
             [&](Rng&, std::string&) {
                 double r = max_abs_coeff(schwarzian(CircleDiffeo::rotation(1.2),
                                                     SchwarzianKind::standard, cfg)
                                              .periodic_value());
                 r = std::max(r, max_abs_coeff(schwarzian(CircleDiffeo::rotation(0.4),
                                                          SchwarzianKind::modified, cfg)
                                                   .periodic_value()));
                 const CircleDiffeo f(0.0, TrigPoly::harmonic_sin(1, 0.1), cfg);
                 const Density s = schwarzian(f, SchwarzianKind::standard, cfg);
                 r = std::max(r, std::abs(s(0.0) + 1.0 / 11.0));
                 return r;
             });

    for (CocycleKind kind : {CocycleKind::standard, CocycleKind::modified}) {
        const std::string tag = kind == CocycleKind::standard ? "standard" : "modified";
        ck.check("schwarzian_cocycle_" + tag,
                 "S(f.g) = S(f) pulled back through g + S(g)", 10.0 * cfg.eps_proj,
                 [&, kind](Rng& rng, std::string&) {
                     double r = 0.0;
                     for (int t = 0; t < 20; ++t) {
                         const CircleDiffeo f = random_diffeo(rng, deg, 0.3, cfg);
                         const CircleDiffeo g = random_diffeo(rng, deg, 0.3, cfg);
                         const Density lhs = schwarzian(compose(f, g, cfg), kind, cfg);
                         const Density rhs =
                             pullback(g, schwarzian(f, kind, cfg), cfg) + schwarzian(g, kind, cfg);
                         r = std::max(r, coeff_distance(lhs, rhs));
                     }
                     return r;
                 });
    }

    ck.check("modified_kernel", "S_mod(flow(Z,t)) = 0 for Z in {1, sin, cos}",
             10.0 * cfg.eps_proj, [&](Rng&, std::string&) {
                 double r = 0.0;
                 for (const TrigPoly& Z : {TrigPoly(1.0), sinx, cosx})
                     for (double t : {0.3, 0.7})
                         r = std::max(r, max_abs_coeff(schwarzian(flow(Z, t, cfg),
                                                                  SchwarzianKind::modified, cfg)
                                                           .periodic_value()));
                 return r;
             });

    for (CocycleKind kind : {CocycleKind::standard, CocycleKind::modified}) {
        const std::string tag = kind == CocycleKind::standard ? "standard" : "modified";
        ck.check("group_coad_flow_derivative_" + tag,
                 "d/dt of the group action along flow(X,t) at 0 is the algebra action", 1e-5,
                 [&, kind](Rng& rng, std::string&) {
                     const double h = 1e-3;
                     double r = 0.0;
                     for (int t = 0; t < 3; ++t) {
                         const TrigPoly X = random_trig(rng, 4, 0.5);
                         const VirasoroCovector mu(random_trig(rng, 4), 0.7);
                         const VirasoroCovector plus = group_coad(flow(X, h, cfg), mu, kind, cfg);
                         const VirasoroCovector minus =
                             group_coad(flow(X, -h, cfg), mu, kind, cfg);
                         const Density diff = (1.0 / (2.0 * h)) * (plus.u - minus.u);
                         r = std::max(r, coeff_distance(diff, coad({X, 0.0}, mu, kind).u));
                     }
                     return r;
                 });
    }

    ck.check("group_coad_composition", "the group action composes through g.f",
             10.0 * cfg.eps_proj, [&](Rng& rng, std::string&) {
                 double r = 0.0;
                 for (int t = 0; t < 5; ++t) {
                     const CircleDiffeo f = random_diffeo(rng, deg, 0.3, cfg);
                     const CircleDiffeo g = random_diffeo(rng, deg, 0.3, cfg);
                     const VirasoroCovector mu(random_trig(rng, deg), 0.9);
                     const VirasoroCovector lhs =
                         group_coad(f, group_coad(g, mu, CocycleKind::standard, cfg),
                                    CocycleKind::standard, cfg);
                     const VirasoroCovector rhs =
                         group_coad(compose(g, f, cfg), mu, CocycleKind::standard, cfg);
                     r = std::max(r, coeff_distance(lhs.u, rhs.u));
                 }
                 return r;
             });

    ck.check("group_coad_anchors", "identity fixes mu; u = 0 gives -c S(f)", 1e-12,
             [&](Rng& rng, std::string&) {
                 const VirasoroCovector mu(random_trig(rng, deg), 1.1);
                 const VirasoroCovector same =
                     group_coad(CircleDiffeo(), mu, CocycleKind::standard, cfg);
                 double r = coeff_distance(same.u, mu.u);
                 const CircleDiffeo f = random_diffeo(rng, deg, 0.3, cfg);
                 const VirasoroCovector pure(TrigPoly(), 1.1);
                 const VirasoroCovector moved = group_coad(f, pure, CocycleKind::standard, cfg);
                 r = std::max(r, coeff_distance(
                                     moved.u, -1.1 * schwarzian(f, SchwarzianKind::standard, cfg)));
                 return r;
             });

    ck.check("energy_shift_coordinates",
             "shifting u by c/2 swaps the standard and projective transformation laws",
             10.0 * cfg.eps_proj, [&](Rng& rng, std::string&) {
                 double r = 0.0;
                 for (int t = 0; t < 5; ++t) {
                     const TrigPoly u = random_trig(rng, deg);
                     const double c = 0.9;
                     const TrigPoly X = random_trig(rng, deg);
                     // exact algebra-level identity
                     const Density lhs = coad({X, 0.0}, VirasoroCovector(u, c),
                                              CocycleKind::standard)
                                             .u;
                     const Density rhs = coad({X, 0.0},
                                              VirasoroCovector(u + TrigPoly(0.5 * c), c),
                                              CocycleKind::modified)
                                             .u;
                     r = std::max(r, coeff_distance(lhs, rhs));
                     // group-level identity
                     const CircleDiffeo f = random_diffeo(rng, deg, 0.3, cfg);
                     const Density glhs =
                         group_coad(f, VirasoroCovector(u, c), CocycleKind::standard, cfg).u +
                         Density(2.0, TrigPoly(0.5 * c));
                     const Density grhs =
                         group_coad(f, VirasoroCovector(u + TrigPoly(0.5 * c), c),
                                    CocycleKind::modified, cfg)
                             .u;
                     r = std::max(r, coeff_distance(glhs, grhs));
                 }
                 return r;
             });

    ck.check_at_least("mutation_detects_sign_flip",
                      "flipping the c-term sign must break the duality identity", 1e-3,
                      [&](Rng& rng, std::string&) {
                          std::uniform_real_distribution<double> u(-1.0, 1.0);
                          double loudest = 0.0;
                          for (int t = 0; t < 10; ++t) {
                              const VirasoroElement a{random_trig(rng, deg), u(rng)};
                              const VirasoroElement b{random_trig(rng, deg), u(rng)};
                              const VirasoroCovector mu(random_trig(rng, deg), 1.0 + 0.5 * u(rng));
                              // mutated action: + c X''' instead of - c X'''
                              VirasoroCovector bad(
                                  lie_derivative(a.X, mu.u) +
                                      Density(2.0, mu.c * derivative(a.X, 3)),
                                  0.0);
                              loudest = std::max(
                                  loudest,
                                  std::abs(vir_pairing(bad, b) +
                                           vir_pairing(mu, vir_bracket(a, b,
                                                                       CocycleKind::standard))));
                          }
                          return loudest;
                      });
}

}  // namespace vircoad::detail
