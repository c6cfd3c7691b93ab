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
#include "vircoad/sturm.hpp"

namespace vircoad::detail {

namespace {

// The deformation equation's left side, exact on coefficients:
// X u' + 2 X' u + (a/2) X'''.
TrigPoly deformation_of(const TrigPoly& X, const SturmLiouville& L) {
    const TrigPoly& u = L.u.periodic_value();
    return X * derivative(u) + 2.0 * (derivative(X) * u) + 0.5 * L.a * derivative(X, 3);
}

}  // namespace

void run_sturm_suite(const SuiteConfig& sc, std::vector<CheckResult>& out) {
    Checker ck("sturm", sc, out);
    const Config& cfg = sc.numerics;
    const int deg = sc.data_degree;
    const int steps = sc.rk4_steps;
    const TrigPoly sinx = TrigPoly::harmonic_sin(1);

    ck.check("covector_map", "(u,c) <-> -2c d^2 + u round-trips", 1e-15,
             [&](Rng& rng, std::string&) {
                 const VirasoroCovector mu(random_trig(rng, deg), 0.7);
                 const SturmLiouville L = sl_from_covector(mu);
                 double r = std::abs(L.a + 2.0 * mu.c);
                 const VirasoroCovector back = covector_from_sl(L);
                 r = std::max(r, std::abs(back.c - mu.c));
                 r = std::max(r, coeff_distance(back.u, mu.u));
                 const SturmLiouville anchor = sl_from_covector(VirasoroCovector(sinx, 1.0));
                 r = std::max(r, std::abs(anchor.a + 2.0));
                 // the shifted realization: (0, 1) -> -2 d^2 + 1/2
                 const SturmLiouville sh = energy_shift(VirasoroCovector(TrigPoly(), 1.0));
                 r = std::max(r, std::abs(sh.a + 2.0));
                 r = std::max(r, coeff_distance(sh.u, Density(2.0, TrigPoly(0.5))));
                 // affine in u
                 const TrigPoly v = random_trig(rng, deg);
                 const SturmLiouville s1 = energy_shift(VirasoroCovector(mu.u, 0.7));
                 const SturmLiouville s2 = energy_shift(
                     VirasoroCovector(mu.u + Density(2.0, v), 0.7));
                 r = std::max(r, coeff_distance(s2.u - s1.u, Density(2.0, v)));
                 return r;
             });

    ck.check("fundamental_anchors",
             "free path is unipotent; trig and exponential closed forms", 1e-6,
             [&](Rng&, std::string& note) {
                 // u = 0, a = 1: psi'' = 0, frame [[1, x], [0, 1]]
                 const FundamentalPath free = fundamental_path(SturmLiouville(1.0, TrigPoly()),
                                                               256, cfg);
                 double r = 0.0;
                 for (size_t j = 0; j < free.T.size(); j += 16) {
                     const double x = 2.0 * std::numbers::pi * static_cast<double>(j) / 256.0;
                     r = std::max({r, std::abs(free.T[j][0] - 1.0), std::abs(free.T[j][1] - x),
                                   std::abs(free.T[j][2]), std::abs(free.T[j][3] - 1.0)});
                 }
                 const MonodromyInvariant free_inv = monodromy_invariant(free, cfg);
                 r = std::max(r, std::abs(free_inv.trace - 2.0));
                 r = std::max(r, free_inv.lift_index == 0 ? 0.0 : 1.0);
                 r = std::max(r, free_inv.cls == MonodromyClass::parabolic ? 0.0 : 1.0);

                 // a = -2, u = -2: psi'' = -psi, monodromy is the identity
                 const MonodromyInvariant trig = monodromy_invariant(
                     SturmLiouville(-2.0, TrigPoly(-2.0)), steps, cfg);
                 r = std::max(r, std::abs(trig.trace - 2.0));
                 r = std::max(r, trig.lift_index == 2 ? 0.0 : 1.0);

                 // a = -2, u = 2: psi'' = psi, trace e^{2pi} + e^{-2pi}
                 const MonodromyInvariant hyp = monodromy_invariant(
                     SturmLiouville(-2.0, TrigPoly(2.0)), steps, cfg);
                 const double expect = std::exp(2.0 * std::numbers::pi) +
                                       std::exp(-2.0 * std::numbers::pi);
                 note = "hyperbolic trace " + std::to_string(hyp.trace);
                 r = std::max(r, std::abs(hyp.trace - expect));
                 r = std::max(r, hyp.lift_index == 0 ? 0.0 : 1.0);
                 r = std::max(r, hyp.cls == MonodromyClass::hyperbolic ? 0.0 : 1.0);
                 return r;
             });

    ck.check("wronskian_conservation", "det of the solution frame stays 1", 1e-8,
             [&](Rng& rng, std::string&) {
                 double r = 0.0;
                 for (int t = 0; t < 20; ++t) {
                     const SturmLiouville L(-2.0, random_trig(rng, deg));
                     r = std::max(r, fundamental_path(L, steps, cfg).wronskian_drift);
                 }
                 return r;
             });

    ck.check_at_least("rk4_order", "halving the step roughly 16x-es the trace error", 8.0,
                      [&](Rng&, std::string& note) {
                          const SturmLiouville L(-2.0, TrigPoly(2.0));
                          const double expect = std::exp(2.0 * std::numbers::pi) +
                                                std::exp(-2.0 * std::numbers::pi);
                          auto err = [&](int n) {
                              const FundamentalPath p = fundamental_path(L, n, cfg);
                              return std::abs(p.monodromy()[0] + p.monodromy()[3] - expect);
                          };
                          const double e1 = err(1024), e2 = err(2048);
                          note = "error ratio " + std::to_string(e1 / e2);
                          return e1 / e2;
                      });

    ck.check("theorem2_invariance",
             "monodromy trace and winding survive diffeomorphism transport", 1e-6,
             [&](Rng& rng, std::string& note) {
                 // The narrowest-strip draws genuinely keep a few 1e-8 of
                 // potential mass above the degree cap; a truncation of that
                 // size moves the trace by well under the 1e-6 budget, so
                 // the transport runs with a wider projection guard.
                 Config relaxed = cfg;
                 relaxed.eps_proj = 1e-6;
                 std::uniform_real_distribution<double> u(0.5, 1.5);
                 double r = 0.0;
                 long lift_mismatches = 0;
                 for (int t = 0; t < 20; ++t) {
                     const SturmLiouville L(-2.0 * u(rng), random_trig(rng, deg));
                     const MonodromyInvariant base = monodromy_invariant(L, steps, cfg);
                     for (int d = 0; d < 10; ++d) {
                         const CircleDiffeo g = random_diffeo(rng, deg, 0.35, cfg);
                         const MonodromyInvariant moved =
                             monodromy_invariant(sl_diffeo_act(g, L, relaxed), steps, cfg);
                         r = std::max(r, std::abs(moved.trace - base.trace));
                         if (moved.lift_index != base.lift_index) ++lift_mismatches;
                     }
                 }
                 note = "lift mismatches " + std::to_string(lift_mismatches);
                 if (lift_mismatches > 0) r = std::max(r, 1.0);
                 return r;
             });

    ck.check("transport_closed_form",
             "conjugation equals the potential transport plus (a/2) S(g^{-1})",
             10.0 * cfg.eps_proj, [&](Rng& rng, std::string&) {
                 double r = 0.0;
                 for (int t = 0; t < 10; ++t) {
                     // milder maps: the dual route differentiates the
                     // projected inverse, whose trimmed tail costs ~k^3
                     const SturmLiouville L(-2.0, random_trig(rng, 5));
                     const CircleDiffeo g = random_diffeo(rng, 5, 0.25, cfg);
                     const CircleDiffeo gi = invert(g, cfg);
                     const SturmLiouville moved = sl_diffeo_act(g, L, cfg);
                     Density closed = pullback(gi, L.u, cfg);
                     closed = closed +
                              (0.5 * L.a) * schwarzian(gi, SchwarzianKind::standard, cfg);
                     r = std::max(r, coeff_distance(moved.u, closed));
                     r = std::max(r, std::abs(moved.a - L.a));
                 }
                 // rotations shift the potential
                 const SturmLiouville L(-2.0, TrigPoly::harmonic_cos(1));
                 const SturmLiouville rot = sl_diffeo_act(CircleDiffeo::rotation(0.5), L, cfg);
                 const TrigPoly expect = TrigPoly::harmonic_cos(1, std::cos(0.5)) +
                                         TrigPoly::harmonic_sin(1, std::sin(0.5));
                 r = std::max(r, coeff_distance(rot.u, Density(2.0, expect)));
                 return r;
             });

    // transporting by a composed (projected) map runs jets over trimmed
    // projection data, whose boundary modes cost ~k^4 * 2e-15; both the
    // internal guard and the budget are widened accordingly
    ck.check("transport_group_law", "g.(h.L) = (g.h).L", 1e-5,
             [&](Rng& rng, std::string&) {
                 Config relaxed = cfg;
                 relaxed.eps_proj = 1e-5;
                 double r = 0.0;
                 for (int t = 0; t < 5; ++t) {
                     const SturmLiouville L(-2.0, random_trig(rng, 4));
                     const CircleDiffeo g = random_diffeo(rng, 4, 0.25, cfg);
                     const CircleDiffeo h = random_diffeo(rng, 4, 0.25, cfg);
                     r = std::max(r, coeff_distance(
                                         sl_diffeo_act(g, sl_diffeo_act(h, L, cfg), cfg).u,
                                         sl_diffeo_act(compose(g, h, cfg), L, relaxed).u));
                 }
                 return r;
             });

    ck.check("covector_transport_consistency",
             "the group coadjoint action matches operator transport through the a = -2c map",
             1e-6, [&](Rng& rng, std::string&) {
                 // the operator route transports by a projected inverse, so
                 // its jets run on trimmed projection data (~k^4 * 2e-15)
                 Config relaxed = cfg;
                 relaxed.eps_proj = 1e-6;
                 double r = 0.0;
                 for (int t = 0; t < 5; ++t) {
                     const VirasoroCovector mu(random_trig(rng, 4), 0.8);
                     const CircleDiffeo f = random_diffeo(rng, 4, 0.25, cfg);
                     const SturmLiouville via_group =
                         sl_from_covector(group_coad(f, mu, CocycleKind::standard, cfg));
                     const SturmLiouville via_op =
                         sl_diffeo_act(invert(f, cfg), sl_from_covector(mu), relaxed);
                     r = std::max(r, coeff_distance(via_group.u, via_op.u));
                 }
                 return r;
             });

    ck.check("vect_act_matches_coad", "the operator commutator equals the coadjoint formula",
             1e-12, [&](Rng& rng, std::string&) {
                 std::uniform_real_distribution<double> u(-1.5, 1.5);
                 double r = 0.0;
                 for (int t = 0; t < 50; ++t) {
                     const TrigPoly X = random_trig(rng, deg);
                     const VirasoroCovector mu(random_trig(rng, deg), u(rng));
                     const SturmLiouville L = sl_from_covector(mu);
                     r = std::max(r, coeff_distance(sl_vect_act(X, L, cfg),
                                                    coad({X, 0.0}, mu,
                                                         CocycleKind::standard)
                                                        .u));
                 }
                 // anchors: X = 1 gives u'; u = 0, c = 1, X = sin gives cos
                 const VirasoroCovector mu(random_trig(rng, deg), 0.0);
                 r = std::max(r, coeff_distance(
                                     sl_vect_act(TrigPoly(1.0), sl_from_covector(mu), cfg),
                                     Density(2.0, derivative(mu.u.periodic_value()))));
                 const SturmLiouville pure = sl_from_covector(VirasoroCovector(TrigPoly(), 1.0));
                 r = std::max(r, coeff_distance(sl_vect_act(sinx, pure, cfg),
                                                Density(2.0, TrigPoly::harmonic_cos(1))));
                 return r;
             });

    ck.check("vect_act_is_flow_derivative",
             "finite difference of the transport along flow(X,t) matches the commutator",
             1e-5, [&](Rng& rng, std::string&) {
                 const double h = 1e-3;
                 double r = 0.0;
                 for (int t = 0; t < 3; ++t) {
                     const TrigPoly X = random_trig(rng, 4, 0.5);
                     const SturmLiouville L(-2.0, random_trig(rng, 4));
                     const SturmLiouville plus = sl_diffeo_act(flow(X, h, cfg), L, cfg);
                     const SturmLiouville minus = sl_diffeo_act(flow(X, -h, cfg), L, cfg);
                     const Density diff = (1.0 / (2.0 * h)) * (plus.u - minus.u);
                     r = std::max(r, coeff_distance(diff, -1.0 * sl_vect_act(X, L, cfg)));
                 }
                 return r;
             });

    ck.check("homotopy_field_residual",
             "the recovered field solves the deformation equation on orbit directions", 1e-6,
             [&](Rng& rng, std::string&) {
                 double r = 0.0;
                 for (int t = 0; t < 5; ++t) {
                     const SturmLiouville L(-2.0, random_trig(rng, 4, 0.6));
                     const TrigPoly Y = random_trig(rng, 4, 0.6);
                     const Density u_dot = sl_vect_act(Y, L, cfg);
                     const TrigPoly X = homotopy_field(L, u_dot, steps, cfg);
                     r = std::max(r, coeff_distance(deformation_of(X, L),
                                                    u_dot.periodic_value()));
                 }
                 return r;
             });

    ck.check("homotopy_zero", "no deformation recovers the zero field", 1e-12,
             [&](Rng& rng, std::string&) {
                 const SturmLiouville L(-2.0, random_trig(rng, 4, 0.6));
                 const TrigPoly X = homotopy_field(L, Density(2.0, TrigPoly()), steps, cfg);
                 return max_abs_coeff(X);
             });

    ck.check("sl2_triple", "half-mode solutions square to the {1, sin, cos} span", 1e-8,
             [&](Rng&, std::string&) {
                 // a = -2, u = -1/2: solutions cos(x/2) and 2 sin(x/2), W = 1
                 const SturmLiouville L(-2.0, TrigPoly(-0.5));
                 const auto triple = projective_sl2_triple(L, steps, cfg);
                 double r = coeff_distance(triple[0], TrigPoly(0.5) +
                                                          TrigPoly::harmonic_cos(1, 0.5));
                 r = std::max(r, coeff_distance(triple[1], TrigPoly::harmonic_sin(1)));
                 r = std::max(r, coeff_distance(triple[2], TrigPoly(2.0) +
                                                               TrigPoly::harmonic_cos(1, -2.0)));
                 // bracket table [E1,E2] = E1, [E1,E3] = 2 E2, [E2,E3] = E3
                 auto br = [](const TrigPoly& A, const TrigPoly& B) {
                     return A * derivative(B) - derivative(A) * B;
                 };
                 r = std::max(r, coeff_distance(br(triple[0], triple[1]), triple[0]));
                 r = std::max(r, coeff_distance(br(triple[0], triple[2]), 2.0 * triple[1]));
                 r = std::max(r, coeff_distance(br(triple[1], triple[2]), triple[2]));
                 return r;
             });

    ck.check_at_least("mutation_detects_transport_flip",
                      "flipping the Schwarzian term's sign must change the monodromy", 1e-3,
                      [&](Rng& rng, std::string&) {
                          double loudest = 0.0;
                          for (int t = 0; t < 3; ++t) {
                              const SturmLiouville L(-2.0, random_trig(rng, 4));
                              const CircleDiffeo g = random_diffeo(rng, 4, 0.35, cfg);
                              const CircleDiffeo gi = invert(g, cfg);
                              const MonodromyInvariant base = monodromy_invariant(L, steps, cfg);
                              Density bad = pullback(gi, L.u, cfg);
                              bad = bad -
                                    (0.5 * L.a) * schwarzian(gi, SchwarzianKind::standard, cfg);
                              const MonodromyInvariant moved = monodromy_invariant(
                                  SturmLiouville(L.a, bad), steps, cfg);
                              loudest = std::max(loudest, std::abs(moved.trace - base.trace));
                          }
                          return loudest;
                      });
}

}  // namespace vircoad::detail
