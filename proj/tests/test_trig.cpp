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
#include "vircoad/trig.hpp"

using namespace vircoad;

TEST_CASE("construction trims and evaluates periodically") {
    TrigPoly f(0.5, {1.0, 0.0, 0.0}, {0.0, 2.0, 0.0});
    CHECK(f.degree() == 2);
    CHECK(f.a0() == 0.5);
    CHECK(f.cos_coeff(1) == 1.0);
    CHECK(f.sin_coeff(2) == 2.0);
    CHECK(f.cos_coeff(7) == 0.0);
    const double x = 1.234;
    CHECK(f(x) == doctest::Approx(f(x + 2.0 * std::numbers::pi)).epsilon(1e-14));
    CHECK(f(x) == doctest::Approx(0.5 + std::cos(x) + 2.0 * std::sin(2 * x)));
}

TEST_CASE("half-integer carrier flips sign over a period") {
    HalfTrigPoly f({0.3, 0.1}, {0.2, -0.4});
    const double x = 0.77;
    CHECK(f(x + 2.0 * std::numbers::pi) == doctest::Approx(-f(x)).epsilon(1e-13));
}

TEST_CASE("derivative follows the mode rule") {
    CHECK(derivative(TrigPoly(1.0)).is_zero());
    CHECK(coeff_distance(derivative(TrigPoly::harmonic_sin(1)), TrigPoly::harmonic_cos(1)) ==
          0.0);
    // third derivative of sin 2x is -8 cos 2x (mode rule applied three times)
    CHECK(coeff_distance(derivative(TrigPoly::harmonic_sin(2), 3),
                         TrigPoly::harmonic_cos(2, -8.0)) == 0.0);

    // finite-difference cross-check on a random polynomial
    Rng rng(7);
    const TrigPoly f = random_trig(rng, 6);
    const TrigPoly df = derivative(f);
    for (double x : {0.1, 2.3, 4.0})
        CHECK(df(x) == doctest::Approx(oracles::diff([&](double t) { return f(t); }, x))
                           .epsilon(1e-7));

    // anti-periodic: d/dx sin(x/2) = cos(x/2)/2
    CHECK(coeff_distance(derivative(HalfTrigPoly::harmonic_sin(0)),
                         HalfTrigPoly::harmonic_cos(0, 0.5)) == 0.0);
}

TEST_CASE("products convolve modes exactly") {
    const TrigPoly sinx = TrigPoly::harmonic_sin(1);
    const TrigPoly cosx = TrigPoly::harmonic_cos(1);
    CHECK(coeff_distance(sinx * cosx, TrigPoly::harmonic_sin(2, 0.5)) < 1e-16);

    Rng rng(11);
    const TrigPoly f = random_trig(rng, 5);
    CHECK(coeff_distance(TrigPoly(1.0) * f, f) == 0.0);

    // half x half closes to periodic: sin(x/2)^2 = (1 - cos x)/2
    const HalfTrigPoly h = HalfTrigPoly::harmonic_sin(0);
    CHECK(coeff_distance(h * h, TrigPoly(0.5) + TrigPoly::harmonic_cos(1, -0.5)) < 1e-16);

    // half x periodic stays anti-periodic: cos x * sin(x/2) has modes 1/2, 3/2
    const HalfTrigPoly m = cosx * h;
    CHECK(m.size() == 2);
    CHECK(m.sin_coeff(0) == doctest::Approx(-0.5));
    CHECK(m.sin_coeff(1) == doctest::Approx(0.5));

    // degrees add
    CHECK((TrigPoly::harmonic_cos(3) * TrigPoly::harmonic_cos(4)).degree() == 7);
}

TEST_CASE("leibniz rule holds coefficientwise") {
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        const TrigPoly f = random_trig(rng, 8), g = random_trig(rng, 8);
        CHECK(coeff_distance(derivative(f * g), derivative(f) * g + f * derivative(g)) <
              1e-13);
    }
}

TEST_CASE("period integral is 2 pi a0") {
    CHECK(integrate_period(TrigPoly::harmonic_sin(1)) == 0.0);
    CHECK(integrate_period(TrigPoly(1.0)) == doctest::Approx(2.0 * std::numbers::pi));
    const TrigPoly c = TrigPoly::harmonic_cos(1);
    const double lhs = integrate_period(c * c);
    CHECK(lhs == doctest::Approx(std::numbers::pi).epsilon(1e-14));
    CHECK(lhs == doctest::Approx(oracles::quad([](double x) {
                     return std::cos(x) * std::cos(x);
                 })).epsilon(1e-12));

    // derivative of anything integrates to zero
    Rng rng(5);
    for (int t = 0; t < 20; ++t)
        CHECK(std::abs(integrate_period(derivative(random_trig(rng, 8)))) < 1e-14);
}

TEST_CASE("projection is exact on band-limited samples and reports residuals") {
    Rng rng(9);
    const TrigPoly f = random_trig(rng, 10);
    const QuadratureGrid grid(64);
    std::vector<double> samples(64);
    for (int j = 0; j < 64; ++j) samples[static_cast<size_t>(j)] = f(grid.node(j));
    const Projection p = project_periodic(samples, 16);
    CHECK(coeff_distance(p.value, f) < 1e-14);
    CHECK(p.residual < 1e-13);

    // truncation shows up in the residual
    const Projection q = project_periodic(samples, 4);
    CHECK(q.residual > 1e-6);
}

TEST_CASE("quadrature grid validates its size") {
    CHECK_THROWS_AS(QuadratureGrid(48), ConfigError);
    CHECK_THROWS_AS(QuadratureGrid(1), ConfigError);
    const QuadratureGrid g(8);
    CHECK(g.weight() == doctest::Approx(std::numbers::pi / 4.0));
}
