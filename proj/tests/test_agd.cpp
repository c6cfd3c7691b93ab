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

#include "vircoad/agd.hpp"
#include "vircoad/diffop.hpp"
#include "vircoad/errors.hpp"
#include "vircoad/rng.hpp"

using namespace vircoad;

TEST_CASE("laurent arithmetic is exact") {
    const LaurentPoly2 p = LaurentPoly2::monomial(1, 0);
    const LaurentPoly2 q = LaurentPoly2::monomial(0, 1);
    CHECK((p * q) == LaurentPoly2::monomial(1, 1));
    LaurentPoly2 f = p + q;
    f -= p;
    CHECK(f == q);
    CHECK((f * Rational(0)).is_zero());

    // Laurent derivatives handle negative exponents
    const LaurentPoly2 inv = LaurentPoly2::monomial(-2, 3);
    CHECK(inv.deriv_p() == LaurentPoly2::monomial(-3, 3, Rational(-2)));
    CHECK(inv.deriv_q() == LaurentPoly2::monomial(-2, 2, Rational(3)));
}

TEST_CASE("star product: first terms and associativity") {
    const LaurentPoly2 p = LaurentPoly2::monomial(1, 0);
    const LaurentPoly2 q = LaurentPoly2::monomial(0, 1);
    CHECK(moyal_term(p, q, 0) == p * q);
    CHECK(moyal_term(p, q, 1) == LaurentPoly2::monomial(0, 0));

    const HbarSeries s = star(p, q, 4);
    CHECK(s.at(0) == p * q);
    CHECK(s.at(1) == LaurentPoly2::monomial(0, 0, Rational(1, 2)));
    CHECK(s.at(2).is_zero());

    // (p^2 * q) * q = p^2 * (q * q) exactly through hbar^4
    const LaurentPoly2 p2 = LaurentPoly2::monomial(2, 0);
    CHECK(star(star(p2, q, 4), to_series(q, 4)) == star(to_series(p2, 4), star(q, q, 4)));
}

TEST_CASE("homogeneous lift") {
    CHECK(lift(MonomialDensity{0, -1.0}) == LaurentPoly2::monomial(2, 0));
    CHECK(lift(MonomialDensity{1, 0.0}) == LaurentPoly2::monomial(-1, 1));
    CHECK_THROWS_AS(lift(MonomialDensity{0, 0.25}), NonIntegerExponent);
}

TEST_CASE("monomial transvectants: product, Wronskian-type bracket, lift correspondence") {
    const MonomialDensity f{2, 1.0}, g{1, 0.5};
    const MonomialTransvectant m0 = transvectant(f, g, 0);
    CHECK(m0.coeff == Rational(1));
    CHECK(m0.result.exponent == 3);
    CHECK(m0.result.lambda == doctest::Approx(1.5));

    // at weights -1/2 the first transvectant of t^0, t^1 is the constant -1
    const MonomialTransvectant w =
        transvectant(MonomialDensity{0, -0.5}, MonomialDensity{1, -0.5}, 1);
    CHECK(w.result.exponent == 0);
    CHECK(w.coeff == Rational(-1));

    Rng rng(1);
    std::uniform_int_distribution<int> e(-3, 4), tl(-4, 4);
    for (int m = 0; m <= 4; ++m) {
        for (int t = 0; t < 10; ++t) {
            const MonomialDensity phi{e(rng), 0.5 * tl(rng)};
            const MonomialDensity psi{e(rng), 0.5 * tl(rng)};
            const MonomialTransvectant j = transvectant(phi, psi, m);
            const Rational sign = m % 2 == 0 ? Rational(1) : Rational(-1);
            CHECK(moyal_term(lift(phi), lift(psi), m) == (sign * j.coeff) * lift(j.result));
        }
    }
}

TEST_CASE("circle transvectants: low orders and equivariance") {
    Rng rng(2);
    const Density phi(1.5, random_trig(rng, 5));
    const Density psi(-0.5, random_trig(rng, 5));
    CHECK(coeff_distance(transvectant(phi, psi, 0), phi * psi) < 1e-13);

    const Density j1 = transvectant(phi, psi, 1);
    const Density expect(2.0, 2.0 * 1.5 * (phi.periodic_value() *
                                           derivative(psi.periodic_value())) -
                                  2.0 * -0.5 * (derivative(phi.periodic_value()) *
                                                psi.periodic_value()));
    CHECK(coeff_distance(j1, expect) < 1e-13);
    CHECK(j1.weight() == doctest::Approx(2.0));

    for (const TrigPoly& Z : {TrigPoly(1.0), TrigPoly::harmonic_sin(1),
                              TrigPoly::harmonic_cos(1)}) {
        const Density lhs = lie_derivative(Z, transvectant(phi, psi, 2));
        const Density rhs = transvectant(lie_derivative(Z, phi), psi, 2) +
                            transvectant(phi, lie_derivative(Z, psi), 2);
        CHECK(coeff_distance(lhs, rhs) < 1e-11);
    }
}

TEST_CASE("second-order derivative: weight bookkeeping and the operator form") {
    Rng rng(3);
    const Density Z(-2.0, random_trig(rng, 5));
    for (double w : {-1.0, 0.0, 2.0, 3.0}) {
        const Density phi(w, random_trig(rng, 5));
        const Density out = second_lie(Z, phi);
        CHECK(out.weight() == doctest::Approx(w));
        const TrigPoly via_op =
            apply(second_lie_op(Z.periodic_value(), w), phi.periodic_value());
        CHECK(coeff_distance(out, Density(w, via_op)) < 1e-11);
    }
    CHECK_THROWS_AS(second_lie(Density(-1.0, TrigPoly(1.0)), Density(0.0, TrigPoly(1.0))),
                    WeightMismatch);
}

TEST_CASE("third-order operators: decomposition and actions") {
    Rng rng(4);
    const TrigPoly u = random_trig(rng, 5), v = random_trig(rng, 5);
    const ThirdOrderOp A = ThirdOrderOp::from_uv(u, v);
    CHECK(coeff_distance(A.v(), v) < 1e-15);
    CHECK(A.as_operator().order() == 3);

    const auto d1 = third_vect_act(TrigPoly(1.0), A);
    CHECK(coeff_distance(d1.first, Density(2.0, derivative(u))) < 1e-13);
    CHECK(coeff_distance(d1.second, Density(3.0, derivative(A.w.periodic_value()))) < 1e-13);

    const ThirdOrderOp empty;
    const TrigPoly X = random_trig(rng, 5);
    const auto d2 = third_vect_act(X, empty);
    CHECK(coeff_distance(d2.first, Density(2.0, 2.0 * derivative(X, 3))) < 1e-13);
    CHECK(d2.second.is_zero(1e-14));

    // rotations shift both coefficients
    const ThirdOrderOp rot = third_diffeo_act(CircleDiffeo::rotation(0.5), A);
    for (double x : {0.3, 2.0})
        CHECK(rot.u(x) == doctest::Approx(A.u(x - 0.5)).epsilon(1e-9));
}

TEST_CASE("hamiltonian families: tangency and the frozen bare-operator value") {
    const ThirdOrderOp bare;
    const AgdTangent t = agd_field_z(Density(-2.0, TrigPoly::harmonic_cos(1)), bare);
    CHECK(max_abs_coeff(t.du) < 1e-14);
    CHECK(coeff_distance(t.dv, TrigPoly::harmonic_sin(1, 2.0)) < 1e-13);

    Rng rng(5);
    const ThirdOrderOp A(Density(2.0, random_trig(rng, 5)),
                         Density(3.0, random_trig(rng, 5)));
    const Density Z(-2.0, random_trig(rng, 5));
    CHECK_NOTHROW(agd_field_z(Z, A));

    const TrigPoly X = random_trig(rng, 5);
    const AgdTangent x_field = agd_field_x(X, A);
    const auto dv = third_vect_act(X, A);
    CHECK(coeff_distance(x_field.du, dv.first.periodic_value()) == 0.0);
}

TEST_CASE("projection to second order forgets w equivariantly") {
    Rng rng(6);
    const ThirdOrderOp A(Density(2.0, random_trig(rng, 4)),
                         Density(3.0, random_trig(rng, 4)));
    const SturmLiouville L = project_to_sturm(A);
    CHECK(L.a == 4.0);
    CHECK(coeff_distance(L.u, A.u) == 0.0);

    const ThirdOrderOp B(A.u, Density(3.0, random_trig(rng, 4)));
    CHECK(coeff_distance(project_to_sturm(B).u, L.u) == 0.0);

    const CircleDiffeo g = random_diffeo(rng, 4, 0.3);
    CHECK(coeff_distance(project_to_sturm(third_diffeo_act(g, A)).u,
                         sl_diffeo_act(g, L).u) < 1e-8);
}
