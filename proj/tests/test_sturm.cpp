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

#include "vircoad/errors.hpp"
#include "vircoad/rng.hpp"
#include "vircoad/sturm.hpp"

using namespace vircoad;

TEST_CASE("covector map and the shifted realization") {
    const SturmLiouville L = sl_from_covector(VirasoroCovector(TrigPoly::harmonic_sin(1), 1.0));
    CHECK(L.a == -2.0);
    CHECK(coeff_distance(L.u, Density(2.0, TrigPoly::harmonic_sin(1))) == 0.0);

    Rng rng(1);
    const VirasoroCovector mu(random_trig(rng, 5), -0.4);
    const VirasoroCovector back = covector_from_sl(sl_from_covector(mu));
    CHECK(back.c == mu.c);
    CHECK(coeff_distance(back.u, mu.u) == 0.0);

    const SturmLiouville sh = energy_shift(VirasoroCovector(TrigPoly(), 1.0));
    CHECK(sh.a == -2.0);
    CHECK(coeff_distance(sh.u, Density(2.0, TrigPoly(0.5))) == 0.0);
}

TEST_CASE("fundamental path: the free equation is unipotent") {
    const FundamentalPath p = fundamental_path(SturmLiouville(1.0, TrigPoly()), 128);
    const auto& M = p.monodromy();
    CHECK(M[0] == doctest::Approx(1.0));
    CHECK(M[1] == doctest::Approx(2.0 * std::numbers::pi));
    CHECK(M[2] == doctest::Approx(0.0));
    CHECK(M[3] == doctest::Approx(1.0));
    CHECK(p.wronskian_drift < 1e-12);

    const MonodromyInvariant inv = monodromy_invariant(p);
    CHECK(inv.trace == doctest::Approx(2.0));
    CHECK(inv.lift_index == 0);
    CHECK(inv.cls == MonodromyClass::parabolic);

    CHECK_THROWS_AS(fundamental_path(SturmLiouville(0.0, TrigPoly(1.0)), 128), ConfigError);
}

TEST_CASE("closed-form monodromy anchors") {
    // psi'' = -psi: solutions cos, sin; the monodromy is the identity and
    // sin has zeros at pi and 2pi.
    const MonodromyInvariant trig =
        monodromy_invariant(SturmLiouville(-2.0, TrigPoly(-2.0)), 4096);
    CHECK(trig.trace == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(trig.lift_index == 2);

    // psi'' = +psi: e^{x}, e^{-x}
    const MonodromyInvariant hyp =
        monodromy_invariant(SturmLiouville(-2.0, TrigPoly(2.0)), 4096);
    const double expect = std::exp(2 * std::numbers::pi) + std::exp(-2 * std::numbers::pi);
    CHECK(hyp.trace == doctest::Approx(expect).epsilon(1e-9));
    CHECK(hyp.lift_index == 0);
    CHECK(hyp.cls == MonodromyClass::hyperbolic);

    // psi'' = -psi/4: anti-periodic solutions, trace -2, one zero of 2sin(x/2)
    const MonodromyInvariant half =
        monodromy_invariant(SturmLiouville(-2.0, TrigPoly(-0.5)), 4096);
    CHECK(half.trace == doctest::Approx(-2.0).epsilon(1e-9));
    CHECK(half.lift_index == 1);
    CHECK(half.cls == MonodromyClass::parabolic);

    // elliptic window: psi'' = -omega^2 psi with omega = 0.75
    const MonodromyInvariant ell =
        monodromy_invariant(SturmLiouville(-2.0, TrigPoly(-2.0 * 0.75 * 0.75)), 4096);
    CHECK(ell.trace == doctest::Approx(2.0 * std::cos(1.5 * std::numbers::pi)).epsilon(1e-8));
    CHECK(ell.lift_index == 1);
    CHECK(ell.cls == MonodromyClass::elliptic);
}

TEST_CASE("wronskian guard fires when the tolerance cannot be met") {
    Config strict;
    strict.wronskian_tol = 1e-18;
    CHECK_THROWS_AS(fundamental_path(SturmLiouville(-2.0, TrigPoly(2.0)), 4096, strict),
                    StepCountTooSmall);
}

TEST_CASE("transport: rotations shift the potential, conjugation matches the closed form") {
    const SturmLiouville L(-2.0, TrigPoly::harmonic_cos(1));
    const SturmLiouville rot = sl_diffeo_act(CircleDiffeo::rotation(0.4), L);
    CHECK(rot.a == -2.0);
    const TrigPoly expect = TrigPoly::harmonic_cos(1, std::cos(0.4)) +
                            TrigPoly::harmonic_sin(1, std::sin(0.4));
    CHECK(coeff_distance(rot.u, Density(2.0, expect)) < 1e-10);

    Rng rng(2);
    const SturmLiouville M(-2.0, random_trig(rng, 5));
    const CircleDiffeo g = random_diffeo(rng, 5, 0.3);
    const CircleDiffeo gi = invert(g);
    const SturmLiouville moved = sl_diffeo_act(g, M);
    Density closed = pullback(gi, M.u);
    closed = closed + (0.5 * M.a) * schwarzian(gi, SchwarzianKind::standard);
    CHECK(coeff_distance(moved.u, closed) < 1e-8);

    // a pure charge turns into a Schwarzian
    const SturmLiouville pure(-2.0, TrigPoly());
    const SturmLiouville ps = sl_diffeo_act(g, pure);
    CHECK(coeff_distance(ps.u, -1.0 * schwarzian(gi, SchwarzianKind::standard)) < 1e-8);
}

TEST_CASE("the infinitesimal action collapses to multiplication") {
    Rng rng(3);
    const TrigPoly X = random_trig(rng, 6);
    const VirasoroCovector mu(random_trig(rng, 6), 0.9);
    const SturmLiouville L = sl_from_covector(mu);
    CHECK(coeff_distance(sl_vect_act(X, L), coad({X, 0.0}, mu, CocycleKind::standard).u) <
          1e-13);
    CHECK(coeff_distance(sl_vect_act(TrigPoly(1.0), L),
                         Density(2.0, derivative(mu.u.periodic_value()))) < 1e-14);
}

TEST_CASE("homotopy field: no deformation, orbit directions, and the periodicity guard") {
    Rng rng(4);
    const SturmLiouville L(-2.0, random_trig(rng, 4, 0.5));

    CHECK(max_abs_coeff(homotopy_field(L, Density(2.0, TrigPoly()), 2048)) < 1e-13);

    const TrigPoly Y = random_trig(rng, 4, 0.5);
    const Density u_dot = sl_vect_act(Y, L);
    const TrigPoly X = homotopy_field(L, u_dot, 4096);
    const TrigPoly lhs = X * derivative(L.u.periodic_value()) +
                         2.0 * (derivative(X) * L.u.periodic_value()) +
                         0.5 * L.a * derivative(X, 3);
    CHECK(coeff_distance(lhs, u_dot.periodic_value()) < 1e-6);

    // a constant shift of the potential moves the trace: not monodromy-preserving
    CHECK_THROWS_AS(homotopy_field(L, Density(2.0, TrigPoly(1.0)), 2048), NotPeriodic);
}

TEST_CASE("solution products span the projective frame") {
    const SturmLiouville L(-2.0, TrigPoly(-0.5));
    const auto triple = projective_sl2_triple(L, 4096);
    CHECK(coeff_distance(triple[0], TrigPoly(0.5) + TrigPoly::harmonic_cos(1, 0.5)) < 1e-9);
    CHECK(coeff_distance(triple[1], TrigPoly::harmonic_sin(1)) < 1e-9);
    CHECK(coeff_distance(triple[2], TrigPoly(2.0) + TrigPoly::harmonic_cos(1, -2.0)) < 1e-9);

    // generic monodromy: products fail to close
    CHECK_THROWS_AS(projective_sl2_triple(SturmLiouville(-2.0, TrigPoly(0.7)), 2048),
                    NotPeriodic);
}
