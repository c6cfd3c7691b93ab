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
#include "vircoad/agd.hpp"
#include "vircoad/diffop.hpp"
#include "vircoad/errors.hpp"

namespace vircoad::detail {

namespace {

LaurentPoly2 random_laurent(Rng& rng, int max_terms = 3) {
    std::uniform_int_distribution<int> e(-2, 2);
    std::uniform_int_distribution<int> c(-4, 4);
    std::uniform_int_distribution<int> n(1, max_terms);
    LaurentPoly2 f;
    const int terms = n(rng);
    for (int t = 0; t < terms; ++t) f.add_term(e(rng), e(rng), Rational(c(rng)));
    return f;
}

MonomialDensity random_monomial(Rng& rng) {
    std::uniform_int_distribution<int> a(-3, 4);
    std::uniform_int_distribution<int> tl(-4, 4);
    return MonomialDensity{a(rng), 0.5 * tl(rng)};
}

const double kWeights[] = {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0};

}  // namespace

void run_agd_suite(const SuiteConfig& sc, std::vector<CheckResult>& out) {
    Checker ck("agd", sc, out);
    const Config& cfg = sc.numerics;
    const int deg = sc.data_degree;
    const LaurentPoly2 P = LaurentPoly2::monomial(1, 0);
    const LaurentPoly2 Q = LaurentPoly2::monomial(0, 1);

    ck.check("moyal_anchors", "{p,q}_1 = 1; p*q = pq + hbar/2; F*1 = F; term parity",
             1e-15, [&](Rng& rng, std::string&) {
                 double fails = 0.0;
                 if (!(moyal_term(P, Q, 1) == LaurentPoly2::monomial(0, 0))) fails += 1.0;
                 const HbarSeries pq = star(P, Q, 3);
                 if (!(pq.at(0) == P * Q)) fails += 1.0;
                 if (!(pq.at(1) == LaurentPoly2::monomial(0, 0, Rational(1, 2)))) fails += 1.0;
                 if (!pq.at(2).is_zero() || !pq.at(3).is_zero()) fails += 1.0;
                 for (int t = 0; t < 20; ++t) {
                     const LaurentPoly2 F = random_laurent(rng);
                     const HbarSeries fs = star(F, LaurentPoly2::monomial(0, 0), 4);
                     if (!(fs.at(0) == F)) fails += 1.0;
                     for (int m = 1; m <= 4; ++m)
                         if (!fs.at(m).is_zero()) fails += 1.0;
                     const LaurentPoly2 G = random_laurent(rng);
                     for (int m = 0; m <= 4; ++m) {
                         const Rational sign = m % 2 == 0 ? Rational(1) : Rational(-1);
                         if (!(moyal_term(F, G, m) == sign * moyal_term(G, F, m))) fails += 1.0;
                     }
                 }
                 return fails;
             });

    ck.check("star_associativity", "(F*G)*H = F*(G*H) exactly through hbar^4", 1e-15,
             [&](Rng& rng, std::string&) {
                 double fails = 0.0;
                 for (int t = 0; t < 50; ++t) {
                     const LaurentPoly2 F = random_laurent(rng);
                     const LaurentPoly2 G = random_laurent(rng);
                     const LaurentPoly2 H = random_laurent(rng);
                     const HbarSeries lhs = star(star(F, G, 4), to_series(H, 4));
                     const HbarSeries rhs = star(to_series(F, 4), star(G, H, 4));
                     if (!(lhs == rhs)) fails += 1.0;
                 }
                 return fails;
             });

    ck.check("poisson_jacobi", "the first star term satisfies Jacobi exactly", 1e-15,
             [&](Rng& rng, std::string&) {
                 double fails = 0.0;
                 for (int t = 0; t < 20; ++t) {
                     const LaurentPoly2 F = random_laurent(rng);
                     const LaurentPoly2 G = random_laurent(rng);
                     const LaurentPoly2 H = random_laurent(rng);
                     LaurentPoly2 sum = poisson(F, poisson(G, H));
                     sum += poisson(G, poisson(H, F));
                     sum += poisson(H, poisson(F, G));
                     if (!sum.is_zero()) fails += 1.0;
                 }
                 return fails;
             });

    ck.check("lift_anchors", "vector field 1 lifts to p^2; t at weight 0 lifts to q",
             1e-15, [&](Rng&, std::string&) {
                 double fails = 0.0;
                 if (!(lift(MonomialDensity{0, -1.0}) == LaurentPoly2::monomial(2, 0)))
                     fails += 1.0;
                 if (!(lift(MonomialDensity{1, 0.0}) == LaurentPoly2::monomial(-1, 1)))
                     fails += 1.0;
                 bool threw = false;
                 try {
                     lift(MonomialDensity{0, 0.25});
                 } catch (const NonIntegerExponent&) {
                     threw = true;
                 }
                 if (!threw) fails += 1.0;
                 return fails;
             });

    ck.check("lift_poisson_bracket",
             "the Poisson bracket of lifted vector fields is twice the lifted commutator",
             1e-15, [&](Rng& rng, std::string&) {
                 std::uniform_int_distribution<int> e(-2, 3);
                 double fails = 0.0;
                 for (int t = 0; t < 20; ++t) {
                     const int a = e(rng), c = e(rng);
                     const MonomialDensity X{a, -1.0}, Y{c, -1.0};
                     const LaurentPoly2 br = poisson(lift(X), lift(Y));
                     const LaurentPoly2 expect =
                         Rational(2 * (c - a)) * lift(MonomialDensity{a + c - 1, -1.0});
                     if (!(br == expect)) fails += 1.0;
                 }
                 return fails;
             });

    ck.check("lift_correspondence",
             "star terms on lifts equal (-1)^m times the lifted chart transvectant", 1e-15,
             [&](Rng& rng, std::string& note) {
                 double fails = 0.0;
                 for (int m = 0; m <= 4; ++m) {
                     for (int t = 0; t < 20; ++t) {
                         const MonomialDensity phi = random_monomial(rng);
                         const MonomialDensity psi = random_monomial(rng);
                         const MonomialTransvectant j = transvectant(phi, psi, m);
                         const LaurentPoly2 lhs = moyal_term(lift(phi), lift(psi), m);
                         const Rational sign = m % 2 == 0 ? Rational(1) : Rational(-1);
                         const LaurentPoly2 rhs = (sign * j.coeff) * lift(j.result);
                         if (!(lhs == rhs)) fails += 1.0;
                     }
                 }
                 note = "correspondence constant (-1)^m, exact for every pair";
                 return fails;
             });

    ck.check("transvectant_low_orders",
             "m = 0 is the product; m = 1 is 2l f g' - 2m f' g", 1e-12,
             [&](Rng& rng, std::string&) {
                 double r = 0.0;
                 for (int t = 0; t < 20; ++t) {
                     const double lam = kWeights[static_cast<size_t>(t) % 8];
                     const double mu = kWeights[static_cast<size_t>(t + 3) % 8];
                     const Density phi(lam, random_trig(rng, deg));
                     const Density psi(mu, random_trig(rng, deg));
                     r = std::max(r, coeff_distance(transvectant(phi, psi, 0), phi * psi));
                     const TrigPoly& f = phi.periodic_value();
                     const TrigPoly& g = psi.periodic_value();
                     const Density expect(lam + mu + 1.0,
                                          2.0 * lam * (f * derivative(g)) -
                                              2.0 * mu * (derivative(f) * g));
                     r = std::max(r, coeff_distance(transvectant(phi, psi, 1), expect));
                 }
                 return r;
             });

    ck.check("transvectant_equivariance",
             "the {1, sin, cos} fields derive across both slots", 1e-9,
             [&](Rng& rng, std::string&) {
                 const TrigPoly fields[] = {TrigPoly(1.0), TrigPoly::harmonic_sin(1),
                                            TrigPoly::harmonic_cos(1)};
                 double r = 0.0;
                 for (int t = 0; t < 12; ++t) {
                     const double lam = kWeights[static_cast<size_t>(t) % 8];
                     const double mu = kWeights[static_cast<size_t>(t + 5) % 8];
                     const Density phi(lam, random_trig(rng, deg));
                     const Density psi(mu, random_trig(rng, deg));
                     for (int m = 1; m <= 3; ++m) {
                         for (const TrigPoly& Z : fields) {
                             const Density lhs =
                                 lie_derivative(Z, transvectant(phi, psi, m));
                             const Density rhs =
                                 transvectant(lie_derivative(Z, phi), psi, m) +
                                 transvectant(phi, lie_derivative(Z, psi), m);
                             r = std::max(r, coeff_distance(lhs, rhs));
                         }
                     }
                 }
                 return r;
             });

    ck.check("second_lie_consistency",
             "the mode-wise m = 2 transvectant equals the explicit operator at unit curvature",
             1e-10, [&](Rng& rng, std::string&) {
                 double r = 0.0;
                 for (int t = 0; t < 10; ++t) {
                     const double mu = kWeights[static_cast<size_t>(t) % 8];
                     const Density Z(-2.0, random_trig(rng, deg));
                     const Density phi(mu, random_trig(rng, deg));
                     const Density via_modes = second_lie(Z, phi);
                     const TrigPoly via_op =
                         apply(second_lie_op(Z.periodic_value(), mu), phi.periodic_value());
                     r = std::max(r, coeff_distance(via_modes, Density(mu, via_op)));
                     r = std::max(r, std::abs(via_modes.weight() - mu));
                 }
                 return r;
             });

    ck.check("second_lie_equivariance", "transporting along projective flows commutes",
             10.0 * cfg.eps_proj, [&](Rng& rng, std::string&) {
                 const TrigPoly fields[] = {TrigPoly(1.0), TrigPoly::harmonic_sin(1),
                                            TrigPoly::harmonic_cos(1)};
                 double r = 0.0;
                 for (const TrigPoly& F : fields) {
                     const CircleDiffeo g = flow(F, 0.3, cfg);
                     const Density Z(-2.0, random_trig(rng, 4, 0.7));
                     const Density phi(0.5, random_trig(rng, 4, 0.7));
                     const Density lhs = diffeo_act(g, second_lie(Z, phi), cfg);
                     const Density rhs =
                         second_lie(diffeo_act(g, Z, cfg), diffeo_act(g, phi, cfg));
                     r = std::max(r, coeff_distance(lhs, rhs));
                 }
                 return r;
             });

    ck.check("third_vect_anchors", "X = 1 advects; the empty operator feeds 2 X'''", 1e-12,
             [&](Rng& rng, std::string&) {
                 const ThirdOrderOp A(Density(2.0, random_trig(rng, deg)),
                                      Density(3.0, random_trig(rng, deg)));
                 const auto d = third_vect_act(TrigPoly(1.0), A, cfg);
                 double r = coeff_distance(
                     d.first, Density(2.0, derivative(A.u.periodic_value())));
                 r = std::max(r, coeff_distance(
                                     d.second, Density(3.0, derivative(A.w.periodic_value()))));
                 const ThirdOrderOp empty;
                 const TrigPoly X = random_trig(rng, deg);
                 const auto e = third_vect_act(X, empty, cfg);
                 r = std::max(r, coeff_distance(e.first,
                                                Density(2.0, 2.0 * derivative(X, 3))));
                 r = std::max(r, max_abs_coeff(e.second.periodic_value()));
                 return r;
             });

    ck.check("third_diffeo_consistency",
             "conjugation route, closed form and the flow derivative all agree",
             1e-5, [&](Rng& rng, std::string&) {
                 double r = 0.0;
                 for (int t = 0; t < 3; ++t) {
                     const ThirdOrderOp A(Density(2.0, random_trig(rng, 4)),
                                          Density(3.0, random_trig(rng, 4)));
                     const CircleDiffeo g = random_diffeo(rng, 4, 0.3, cfg);
                     const ThirdOrderOp moved = third_diffeo_act(g, A, cfg);  // self-checking
                     (void)moved;
                     const double h = 1e-3;
                     const TrigPoly X = random_trig(rng, 4, 0.5);
                     const ThirdOrderOp fp = third_diffeo_act(flow(X, h, cfg), A, cfg);
                     const ThirdOrderOp fm = third_diffeo_act(flow(X, -h, cfg), A, cfg);
                     const auto d = third_vect_act(X, A, cfg);
                     r = std::max(r, coeff_distance(
                                         (1.0 / (2.0 * h)) * (fp.u - fm.u), -1.0 * d.first));
                     r = std::max(r, coeff_distance(
                                         (1.0 / (2.0 * h)) * (fp.w - fm.w), -1.0 * d.second));
                 }
                 return r;
             });

    ck.check("third_w_is_cubic_density",
             "w transports with no Schwarzian admixture", 10.0 * cfg.eps_proj,
             [&](Rng& rng, std::string&) {
                 double r = 0.0;
                 for (int t = 0; t < 3; ++t) {
                     const ThirdOrderOp A(Density(2.0, random_trig(rng, 4)),
                                          Density(3.0, random_trig(rng, 4)));
                     const CircleDiffeo g = random_diffeo(rng, 4, 0.3, cfg);
                     const ThirdOrderOp moved = third_diffeo_act(g, A, cfg);
                     const Density expect = pullback(invert(g, cfg), A.w, cfg);
                     r = std::max(r, coeff_distance(moved.w, expect));
                 }
                 return r;
             });

    ck.check("agd_x_equals_first_order_action",
             "the first functional family reproduces the vector-field action", 1e-12,
             [&](Rng& rng, std::string&) {
                 const ThirdOrderOp A(Density(2.0, random_trig(rng, deg)),
                                      Density(3.0, random_trig(rng, deg)));
                 const TrigPoly X = random_trig(rng, deg);
                 const AgdTangent t = agd_field_x(X, A, cfg);
                 const auto d = third_vect_act(X, A, cfg);
                 double r = coeff_distance(t.du, d.first.periodic_value());
                 r = std::max(r, coeff_distance(
                                     t.dv, d.second.periodic_value() +
                                               0.5 * derivative(d.first.periodic_value())));
                 return r;
             });

    ck.check("agd_z_tangency",
             "the second-order commutator collapses to a tangent of the operator space",
             1e-9, [&](Rng& rng, std::string&) {
                 double r = 0.0;
                 for (int t = 0; t < 50; ++t) {
                     const ThirdOrderOp A(Density(2.0, random_trig(rng, 6)),
                                          Density(3.0, random_trig(rng, 6)));
                     const Density Z(-2.0, random_trig(rng, 6));
                     const TrigPoly& zv = Z.periodic_value();
                     const TrigPoly& uv = A.u.periodic_value();
                     const DiffOp comm =
                         compose(second_lie_op(zv, 2.0, uv), A.as_operator()) -
                         compose(A.as_operator(), second_lie_op(zv, -1.0, uv));
                     r = std::max(r, comm.max_coeff_above(2));
                     const AgdTangent tan = agd_field_z(Z, A, cfg);  // rethrows if not tangent
                     (void)tan;
                 }
                 return r;
             });

    ck.check("agd_z_regression",
             "the bare third-derivative operator: du = 0, dv = -2 Z^(5)", 1e-12,
             [&](Rng&, std::string&) {
                 const ThirdOrderOp bare;
                 const Density Z(-2.0, TrigPoly::harmonic_cos(1));
                 const AgdTangent t = agd_field_z(Z, bare, default_config());
                 double r = max_abs_coeff(t.du);
                 // Z = cos: Z^(5) = -sin, so dv = 2 sin
                 r = std::max(r, coeff_distance(t.dv, TrigPoly::harmonic_sin(1, 2.0)));
                 const AgdTangent zero = agd_field_z(Density(-2.0, TrigPoly()), bare,
                                                     default_config());
                 r = std::max(r, max_abs_coeff(zero.du) + max_abs_coeff(zero.dv));
                 return r;
             });

    ck.check("projection_equivariance",
             "forgetting w commutes with transport; w never enters", 10.0 * cfg.eps_proj,
             [&](Rng& rng, std::string&) {
                 double r = 0.0;
                 for (int t = 0; t < 3; ++t) {
                     const ThirdOrderOp A(Density(2.0, random_trig(rng, 4)),
                                          Density(3.0, random_trig(rng, 4)));
                     const CircleDiffeo g = random_diffeo(rng, 4, 0.3, cfg);
                     const SturmLiouville lhs = project_to_sturm(third_diffeo_act(g, A, cfg));
                     const SturmLiouville rhs = sl_diffeo_act(g, project_to_sturm(A), cfg);
                     r = std::max(r, coeff_distance(lhs.u, rhs.u));
                     r = std::max(r, std::abs(lhs.a - rhs.a));
                     const ThirdOrderOp B(A.u, Density(3.0, random_trig(rng, 4)));
                     r = std::max(r, coeff_distance(project_to_sturm(B).u,
                                                    project_to_sturm(A).u));
                 }
                 return r;
             });
}

}  // namespace vircoad::detail
