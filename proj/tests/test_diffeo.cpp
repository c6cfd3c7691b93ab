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

#include "vircoad/diffeo.hpp"
#include "vircoad/errors.hpp"
#include "vircoad/rng.hpp"

using namespace vircoad;

TEST_CASE("construction normalizes the mean into the shift and checks orientation") {
    // p with a nonzero mean: the mean moves into the shift
    CircleDiffeo f(0.25, TrigPoly(0.5) + TrigPoly::harmonic_sin(1, 0.3));
    CHECK(f.shift() == doctest::Approx(0.75));
    CHECK(f.periodic_part().a0() == 0.0);
    CHECK(f(1.0) == doctest::Approx(1.0 + 0.75 + 0.3 * std::sin(1.0)));
    CHECK(f(1.0 + 2 * std::numbers::pi) ==
          doctest::Approx(f(1.0) + 2 * std::numbers::pi));

    CHECK_THROWS_AS(CircleDiffeo(0.0, TrigPoly::harmonic_sin(1, 1.2)),
                    NotOrientationPreserving);
}

TEST_CASE("composition: identity element and the rotation subgroup") {
    Rng rng(2);
    const CircleDiffeo f = random_diffeo(rng, 6);
    CHECK(distance(compose(CircleDiffeo(), f), f) < 1e-13);
    CHECK(distance(compose(f, CircleDiffeo()), f) < 1e-13);
    CHECK(distance(compose(CircleDiffeo::rotation(0.4), CircleDiffeo::rotation(0.6)),
                   CircleDiffeo::rotation(1.0)) < 1e-15);
    CHECK(compose(f, f).projection_residual() < 1e-9);
}

TEST_CASE("inversion: rotations, fixed points, round trip") {
    CHECK(distance(invert(CircleDiffeo()), CircleDiffeo()) < 1e-14);
    CHECK(distance(invert(CircleDiffeo::rotation(0.8)), CircleDiffeo::rotation(-0.8)) <
          1e-12);

    const CircleDiffeo f(0.0, TrigPoly::harmonic_sin(1, 0.3));
    CHECK(std::abs(invert(f)(0.0)) < 1e-12);  // f(0) = 0 forces f^{-1}(0) = 0
    CHECK(distance(compose(f, invert(f)), CircleDiffeo()) < 1e-9);

    Config strict;
    strict.newton_max_iter = 1;
    CHECK_THROWS_AS(invert(f, strict), NewtonDivergence);
}

TEST_CASE("projection overflow is reported when the degree cap is too tight") {
    Rng rng(4);
    const CircleDiffeo f = random_diffeo(rng, 8, 0.45);
    Config tight;
    tight.degree_cap = 3;
    tight.map_degree_cap = 3;
    tight.grid_size = 64;
    CHECK_THROWS_AS(compose(f, f, tight), ProjectionOverflow);
}

TEST_CASE("flows: zero field, constant field, fixed point of sin") {
    CHECK(flow(TrigPoly(), 0.9).is_identity());
    CHECK(distance(flow(TrigPoly(1.0), 0.9), CircleDiffeo::rotation(0.9)) < 1e-14);
    CHECK(flow(TrigPoly::harmonic_sin(1), 0.0).is_identity());

    const TrigPoly sinx = TrigPoly::harmonic_sin(1);
    for (double t : {0.3, 0.9})
        CHECK(flow(sinx, t)(std::numbers::pi) == doctest::Approx(std::numbers::pi));
}

TEST_CASE("flow group law on a random field") {
    Rng rng(6);
    const TrigPoly X = random_trig(rng, 5, 0.5);
    const CircleDiffeo a = flow(X, 0.45);
    const CircleDiffeo b = flow(X, 0.3);
    CHECK(distance(compose(a, b), flow(X, 0.75)) < 1e-8);
}
