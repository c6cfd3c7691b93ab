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
#include "vircoad/rng.hpp"
#include "vircoad/superalg.hpp"

using namespace vircoad;

TEST_CASE("sector and carrier must agree") {
    CHECK_THROWS_AS(SuperElement::odd(Density(-0.5, TrigPoly::harmonic_sin(1)),
                                      Sector::neveu_schwarz),
                    SectorMismatch);
    CHECK_THROWS_AS(SuperElement::odd(Density(-0.5, HalfTrigPoly::harmonic_sin(0)),
                                      Sector::ramond),
                    SectorMismatch);
    CHECK_THROWS_AS(SuperElement::odd(Density(0.5, TrigPoly::harmonic_sin(1)),
                                      Sector::ramond),
                    WeightMismatch);

    const SuperElement r = SuperElement::even(TrigPoly::harmonic_sin(1), 0.0, Sector::ramond);
    const SuperElement n =
        SuperElement::even(TrigPoly::harmonic_sin(1), 0.0, Sector::neveu_schwarz);
    CHECK_THROWS_AS(super_bracket(r, n), SectorMismatch);
}

TEST_CASE("bracket anchors from half-angle integrals") {
    // Neveu-Schwarz: xi = sin(x/2)
    const SuperElement a =
        SuperElement::odd(Density(-0.5, HalfTrigPoly::harmonic_sin(0)), Sector::neveu_schwarz);
    const SuperElement sq = super_bracket(a, a);
    CHECK(coeff_distance(sq.X(), TrigPoly(0.5) + TrigPoly::harmonic_cos(1, -0.5)) < 1e-16);
    CHECK(sq.alpha() == doctest::Approx(0.5 * std::numbers::pi).epsilon(1e-14));
    CHECK(sq.alpha() == doctest::Approx(oracles::quad([](double x) {
                            const double d = 0.5 * std::cos(0.5 * x);
                            return 2.0 * d * d;
                        })).epsilon(1e-12));

    // module action: [(X, 0), (0, eta)] = L_X eta at weight -1/2
    Rng rng(1);
    const TrigPoly X = random_trig(rng, 6);
    const Density eta(-0.5, random_half_trig(rng, 6));
    const SuperElement m =
        super_bracket(SuperElement::even(X, 0.0, Sector::neveu_schwarz),
                      SuperElement::odd(eta, Sector::neveu_schwarz));
    CHECK(m.X().is_zero());
    CHECK(coeff_distance(m.xi(), lie_derivative(X, eta)) == 0.0);
}

TEST_CASE("even elements reproduce the plain algebra") {
    Rng rng(2);
    const TrigPoly X = random_trig(rng, 6), Y = random_trig(rng, 6);
    const SuperElement sb = super_bracket(SuperElement::even(X, 0.2, Sector::ramond),
                                          SuperElement::even(Y, -0.7, Sector::ramond));
    const VirasoroElement vb = vir_bracket({X, 0.2}, {Y, -0.7}, CocycleKind::standard);
    CHECK(coeff_distance(sb.X(), vb.X) == 0.0);
    CHECK(sb.alpha() == doctest::Approx(vb.alpha).epsilon(1e-15));
}

TEST_CASE("graded jacobi on a mixed triple") {
    Rng rng(3);
    for (Sector sector : {Sector::ramond, Sector::neveu_schwarz}) {
        const SuperElement A = SuperElement::even(random_trig(rng, 6), 0.4, sector);
        Density xi = sector == Sector::ramond ? Density(-0.5, random_trig(rng, 6))
                                              : Density(-0.5, random_half_trig(rng, 6));
        Density eta = sector == Sector::ramond ? Density(-0.5, random_trig(rng, 6))
                                               : Density(-0.5, random_half_trig(rng, 6));
        const SuperElement B = SuperElement::odd(xi, sector);
        const SuperElement C = SuperElement::odd(eta, sector);
        CHECK(super_jacobi_residual(A, B, C) < 1e-11);
    }
}

TEST_CASE("the odd coadjoint action applies the second-order operator") {
    Rng rng(4);
    for (Sector sector : {Sector::ramond, Sector::neveu_schwarz}) {
        const bool anti = sector == Sector::neveu_schwarz;
        Density xi = anti ? Density(-0.5, random_half_trig(rng, 6))
                          : Density(-0.5, random_trig(rng, 6));
        const TrigPoly u = random_trig(rng, 6);
        const double c = 0.8;
        const SuperCovector mu(Density(2.0, u), c, zero_odd_density(1.5, sector));
        const SuperCovector moved = super_coad(SuperElement::odd(xi, sector), mu);
        Density expect = anti
                             ? Density(1.5, u * xi.antiperiodic_value() -
                                                2.0 * c * derivative(derivative(
                                                              xi.antiperiodic_value())))
                             : Density(1.5, u * xi.periodic_value() -
                                                2.0 * c * derivative(derivative(
                                                              xi.periodic_value())));
        CHECK(coeff_distance(moved.phi, expect) < 1e-15);
        CHECK(moved.c == 0.0);
    }
}

TEST_CASE("duality residual vanishes for homogeneous pairs") {
    Rng rng(5);
    for (Sector sector : {Sector::ramond, Sector::neveu_schwarz}) {
        const bool anti = sector == Sector::neveu_schwarz;
        auto odd_density = [&](double w) {
            return anti ? Density(w, random_half_trig(rng, 5))
                        : Density(w, random_trig(rng, 5));
        };
        const SuperCovector mu(Density(2.0, random_trig(rng, 5)), 0.6, odd_density(1.5));
        const SuperElement Ae = SuperElement::even(random_trig(rng, 5), 0.1, sector);
        const SuperElement Ao = SuperElement::odd(odd_density(-0.5), sector);
        const SuperElement Be = SuperElement::even(random_trig(rng, 5), -0.3, sector);
        const SuperElement Bo = SuperElement::odd(odd_density(-0.5), sector);
        CHECK(super_duality_residual(Ae, mu, Be) < 1e-11);
        CHECK(super_duality_residual(Ae, mu, Bo) < 1e-11);
        CHECK(super_duality_residual(Ao, mu, Be) < 1e-11);
        CHECK(super_duality_residual(Ao, mu, Bo) < 1e-11);
    }
}

TEST_CASE("projectively equivariant cocycle: only the quarter variant kills the generators") {
    const Density zeta(-0.5, HalfTrigPoly::harmonic_sin(0));
    const SuperElement A = SuperElement::odd(zeta, Sector::neveu_schwarz);
    CHECK(std::abs(osp_cocycle(A, A, OspVariant::quarter)) < 1e-14);
    CHECK(osp_cocycle(A, A, OspVariant::printed) ==
          doctest::Approx(7.5 * std::numbers::pi).epsilon(1e-12));

    const SuperElement ramond = SuperElement::even(TrigPoly(1.0), 0.0, Sector::ramond);
    CHECK_THROWS_AS(osp_cocycle(ramond, ramond), SectorMismatch);
}
