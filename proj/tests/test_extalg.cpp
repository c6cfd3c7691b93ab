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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_oracles.hpp"
#include "vircoad/errors.hpp"
#include "vircoad/extalg.hpp"
#include "vircoad/rng.hpp"

using namespace vircoad;

namespace {
const TrigPoly sinx = TrigPoly::harmonic_sin(1);
const TrigPoly cosx = TrigPoly::harmonic_cos(1);
}  // namespace

TEST_CASE("type invariants") {
    CHECK_THROWS_AS(MatrixSL(Density(1.0, TrigPoly()), Density(1.0, TrigPoly()),
                             {0.0, 0.0, 0.0}),
                    WeightMismatch);
    CHECK_THROWS_AS(DensityPair(Density(0.0, TrigPoly()), Density(2.0, TrigPoly())),
                    WeightMismatch);
    CHECK_THROWS_AS(SElement::from_odd(Density(0.5, TrigPoly()), Density(0.5, TrigPoly())),
                    WeightMismatch);
}

TEST_CASE("bracket anchors against quadrature") {
    GElement A, B;
    A.a = cosx;
    B.a = sinx;
    const GElement ab = g_bracket(A, B);
    CHECK(ab.X.is_zero());
    CHECK(ab.a.is_zero());
    CHECK(ab.center[0] == 0.0);
    CHECK(ab.center[1] == 0.0);
    CHECK(ab.center[2] == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-14));
    CHECK(ab.center[2] == doctest::Approx(oracles::quad([](double x) {
                              return 2.0 * std::cos(x) * std::cos(x);
                          })).epsilon(1e-12));

    GElement C, D;
    C.X = sinx;
    D.a = sinx;
    const GElement cd = g_bracket(C, D);
    CHECK(coeff_distance(cd.a, TrigPoly::harmonic_sin(2, 0.5)) < 1e-16);
    CHECK(cd.center[1] == doctest::Approx(-std::numbers::pi).epsilon(1e-14));
}

TEST_CASE("module action anchors, including the duality-pinned coupling sign") {
    Rng rng(1);
    GElement A;
    A.X = random_trig(rng, 6);
    const DensityPair p(Density(0.5, random_trig(rng, 6)),
                        Density(1.5, random_trig(rng, 6)));
    const DensityPair moved = t_action(A, p);
    CHECK(coeff_distance(moved.phi, lie_derivative(A.X, p.phi)) == 0.0);
    CHECK(coeff_distance(moved.psi, lie_derivative(A.X, p.psi)) == 0.0);

    GElement B;
    B.a = sinx;
    const DensityPair unit(Density(-0.5, TrigPoly(1.0)), Density(0.5, TrigPoly()));
    const DensityPair gained = t_action(B, unit);
    CHECK(gained.phi.is_zero());
    CHECK(coeff_distance(gained.psi, Density(0.5, TrigPoly::harmonic_cos(1, -0.5))) == 0.0);
}

TEST_CASE("representation property of the module action") {
    Rng rng(2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (double lambda : {-0.5, 0.0, 1.0}) {
        GElement A, B;
        A.X = random_trig(rng, 5);
        A.a = random_trig(rng, 5);
        B.X = random_trig(rng, 5);
        B.a = random_trig(rng, 5);
        const DensityPair p(Density(lambda, random_trig(rng, 5)),
                            Density(lambda + 1.0, random_trig(rng, 5)));
        const DensityPair lhs1 = t_action(A, t_action(B, p));
        const DensityPair lhs2 = t_action(B, t_action(A, p));
        const DensityPair rhs = t_action(g_bracket(A, B), p);
        CHECK(coeff_distance(lhs1.phi - lhs2.phi, rhs.phi) < 1e-13);
        CHECK(coeff_distance(lhs1.psi - lhs2.psi, rhs.psi) < 1e-13);
    }
}

TEST_CASE("matrix coadjoint: closed form, commutator route, and duality") {
    // X = 0, a = sin, u = v = 0, c = (0, 1, 1): du = -sin, dv = 2 cos
    GElement A;
    A.a = sinx;
    const MatrixSL L(TrigPoly(), TrigPoly(), {0.0, 1.0, 1.0});
    const auto d = matrix_coad(A, L);
    CHECK(coeff_distance(d.first, Density(2.0, -1.0 * sinx)) < 1e-14);
    CHECK(coeff_distance(d.second, Density(1.0, 2.0 * cosx)) < 1e-14);

    Rng rng(3);
    for (int t = 0; t < 10; ++t) {
        GElement B;
        B.X = random_trig(rng, 5);
        B.a = random_trig(rng, 5);
        GElement C;
        C.X = random_trig(rng, 5);
        C.a = random_trig(rng, 5);
        const MatrixSL M(random_trig(rng, 5), random_trig(rng, 5), {0.7, -0.3, 0.5});
        CHECK(matrix_coad_duality_residual(B, M, C) < 1e-11);
    }
}

TEST_CASE("self-adjointness of the matrix operator") {
    Rng rng(4);
    const MatrixSL L(random_trig(rng, 6), random_trig(rng, 6), {0.4, 0.9, -0.2});
    const Density phi(-0.5, random_trig(rng, 6));
    const Density alpha(0.5, random_trig(rng, 6));
    const Density psi(-0.5, random_trig(rng, 6));
    const Density beta(0.5, random_trig(rng, 6));
    CHECK(matrix_pairing(matrix_apply(L, phi, alpha), psi, beta) ==
          doctest::Approx(matrix_pairing(matrix_apply(L, psi, beta), phi, alpha))
              .epsilon(1e-12));
}

TEST_CASE("generalized superalgebra: anchors and the odd coadjoint action") {
    // alpha = beta = cos: the third central value is 4 pi
    const SElement A =
        SElement::from_odd(Density(-0.5, TrigPoly()), Density(0.5, cosx));
    const SElement sq = s_bracket(A, A);
    CHECK(sq.even.center[2] == doctest::Approx(4.0 * std::numbers::pi).epsilon(1e-14));

    Rng rng(5);
    const Density phi(-0.5, random_trig(rng, 5));
    const Density alpha(0.5, random_trig(rng, 5));
    // no central charges: (u phi + v alpha, v phi)
    const MatrixSL L0(random_trig(rng, 5), random_trig(rng, 5), {0.0, 0.0, 0.0});
    const auto d0 = s_coad_odd(phi, alpha, L0);
    CHECK(coeff_distance(d0.first,
                         Density(1.5, L0.u.periodic_value() * phi.periodic_value() +
                                          L0.v.periodic_value() * alpha.periodic_value())) ==
          0.0);
    CHECK(coeff_distance(d0.second,
                         Density(0.5, L0.v.periodic_value() * phi.periodic_value())) == 0.0);

    const MatrixSL L1(random_trig(rng, 5), random_trig(rng, 5), {0.7, 0.2, -0.4});
    const SElement B = SElement::from_odd(Density(-0.5, random_trig(rng, 5)),
                                          Density(0.5, random_trig(rng, 5)));
    CHECK(s_coad_odd_duality_residual(phi, alpha, L1, B) < 1e-11);
}

TEST_CASE("graded jacobi on mixed triples of the generalized superalgebra") {
    Rng rng(6);
    GElement E;
    E.X = random_trig(rng, 5);
    E.a = random_trig(rng, 5);
    const SElement A = SElement::from_even(E);
    const SElement B = SElement::from_odd(Density(-0.5, random_trig(rng, 5)),
                                          Density(0.5, random_trig(rng, 5)));
    const SElement C = SElement::from_odd(Density(-0.5, random_trig(rng, 5)),
                                          Density(0.5, random_trig(rng, 5)));
    CHECK(s_jacobi_residual(A, B, C) < 1e-11);
    CHECK(s_jacobi_residual(A, SElement::from_even(E), B) < 1e-11);
}
