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
#include "vircoad/density.hpp"
#include "vircoad/errors.hpp"
#include "vircoad/rng.hpp"

using namespace vircoad;

TEST_CASE("weights multiply additively and carriers stay consistent") {
    const Density a(1.5, TrigPoly::harmonic_sin(1));
    const Density b(-0.5, TrigPoly::harmonic_cos(1));
    CHECK((a * b).weight() == 1.0);
    CHECK_FALSE((a * b).antiperiodic());

    const Density h(0.5, HalfTrigPoly::harmonic_sin(0));
    CHECK((h * h).weight() == 1.0);
    CHECK_FALSE((h * h).antiperiodic());  // half x half closes
    CHECK((a * h).antiperiodic());
}

TEST_CASE("lie derivative: translation field, functions, and a frozen expansion") {
    Rng rng(1);
    const Density a(0.7, random_trig(rng, 6));
    CHECK(coeff_distance(lie_derivative(TrigPoly(1.0), a),
                         Density(0.7, derivative(a.periodic_value()))) == 0.0);

    const Density f0(0.0, random_trig(rng, 6));
    const TrigPoly X = random_trig(rng, 6);
    CHECK(coeff_distance(lie_derivative(X, f0),
                         Density(0.0, X * derivative(f0.periodic_value()))) == 0.0);

    // X = sin x, a = cos x at weight 2: sin(-sin) + 2cos cos = 1/2 + (3/2)cos 2x
    const Density a2(2.0, TrigPoly::harmonic_cos(1));
    CHECK(coeff_distance(lie_derivative(TrigPoly::harmonic_sin(1), a2),
                         Density(2.0, TrigPoly(0.5) + TrigPoly::harmonic_cos(2, 1.5))) <
          1e-16);
}

TEST_CASE("push-forward: identity, rotations, pointwise oracle at weight 0") {
    const Density a(1.5, TrigPoly::harmonic_sin(1));
    CHECK(coeff_distance(diffeo_act(CircleDiffeo(), a), a) == 0.0);

    const double c = 0.35;
    const Density moved = diffeo_act(CircleDiffeo::rotation(c), a);
    for (double x : {0.0, 1.0, 4.4})
        CHECK(moved(x) == doctest::Approx(std::sin(x - c)).epsilon(1e-12));

    const CircleDiffeo g(0.0, TrigPoly::harmonic_sin(1, 0.3));
    const CircleDiffeo gi = invert(g);
    const Density b(0.0, TrigPoly::harmonic_cos(1));
    const Density gb = diffeo_act(g, b);
    for (double x : {0.2, 2.6, 5.1})
        CHECK(gb(x) == doctest::Approx(std::cos(gi(x))).epsilon(1e-9));
}

TEST_CASE("pull-back inverts the push-forward") {
    Rng rng(8);
    const CircleDiffeo g = random_diffeo(rng, 5, 0.3);
    const Density a(2.0, random_trig(rng, 5));
    CHECK(coeff_distance(pullback(g, diffeo_act(g, a)), a) < 1e-10);
}

TEST_CASE("anti-periodic densities are not transported") {
    const Density h(-0.5, HalfTrigPoly::harmonic_sin(0));
    CHECK_THROWS_AS(diffeo_act(CircleDiffeo::rotation(0.3), h), Unsupported);
}

TEST_CASE("pairing: orthogonality, constants, half modes, and weight guard") {
    CHECK(pairing(Density(2.0, TrigPoly::harmonic_sin(1)),
                  Density(-1.0, TrigPoly::harmonic_cos(1))) == 0.0);
    CHECK(pairing(Density(2.0, TrigPoly(1.0)), Density(-1.0, TrigPoly(1.0))) ==
          doctest::Approx(2.0 * std::numbers::pi));

    const double got = pairing(Density(1.5, HalfTrigPoly::harmonic_sin(0)),
                               Density(-0.5, HalfTrigPoly::harmonic_sin(0)));
    CHECK(got == doctest::Approx(std::numbers::pi).epsilon(1e-14));
    CHECK(got == doctest::Approx(oracles::quad([](double x) {
                     const double s = std::sin(0.5 * x);
                     return s * s;
                 })).epsilon(1e-12));

    CHECK_THROWS_AS(pairing(Density(2.0, TrigPoly(1.0)), Density(0.5, TrigPoly(1.0))),
                    WeightMismatch);
    CHECK_THROWS_AS(pairing(Density(1.5, TrigPoly(1.0)),
                            Density(-0.5, HalfTrigPoly::harmonic_sin(0))),
                    WeightMismatch);
}

TEST_CASE("pairing is invariant under the infinitesimal action") {
    Rng rng(10);
    for (int t = 0; t < 20; ++t) {
        const TrigPoly X = random_trig(rng, 6);
        const Density a(1.5, random_trig(rng, 6));
        const Density b(-0.5, random_trig(rng, 6));
        CHECK(std::abs(pairing(lie_derivative(X, a), b) + pairing(a, lie_derivative(X, b))) <
              1e-13);
    }
}
