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
#include "vircoad/rng.hpp"
#include "vircoad/virasoro.hpp"

using namespace vircoad;

namespace {
const TrigPoly sinx = TrigPoly::harmonic_sin(1);
const TrigPoly cosx = TrigPoly::harmonic_cos(1);
}  // namespace

TEST_CASE("cocycle values: kernel elements and the sin/cos anchor") {
    Rng rng(1);
    const TrigPoly Y = random_trig(rng, 8);
    CHECK(gf_cocycle(TrigPoly(1.0), Y, CocycleKind::standard) == 0.0);
    CHECK(gf_cocycle(sinx, Y, CocycleKind::modified) == doctest::Approx(0.0).epsilon(1e-15));

    const double anchor = gf_cocycle(sinx, cosx, CocycleKind::standard);
    CHECK(anchor == doctest::Approx(-std::numbers::pi).epsilon(1e-14));
    CHECK(anchor == doctest::Approx(oracles::quad([](double x) {
                        const double xp = std::cos(x), xpp = -std::sin(x);
                        const double yp = -std::sin(x), ypp = -std::cos(x);
                        return 0.5 * (xp * ypp - xpp * yp);
                    })).epsilon(1e-12));
}

TEST_CASE("bracket: constants commute and the center is inert") {
    const VirasoroElement one{TrigPoly(1.0), 0.0};
    const VirasoroElement b = vir_bracket(one, one, CocycleKind::standard);
    CHECK(b.X.is_zero());
    CHECK(b.alpha == 0.0);

    Rng rng(2);
    const VirasoroElement center{TrigPoly(), 2.0};
    const VirasoroElement y{random_trig(rng, 6), -1.0};
    const VirasoroElement c = vir_bracket(center, y, CocycleKind::standard);
    CHECK(c.X.is_zero());
    CHECK(c.alpha == 0.0);

    const VirasoroElement sc = vir_bracket({sinx, 0.0}, {cosx, 0.0}, CocycleKind::standard);
    CHECK(coeff_distance(sc.X, TrigPoly(-1.0)) < 1e-16);
    CHECK(sc.alpha == doctest::Approx(-std::numbers::pi));
}

TEST_CASE("coadjoint action formulas") {
    Rng rng(3);
    const TrigPoly u = random_trig(rng, 6);
    const VirasoroCovector mu(u, 0.7);
    const VirasoroCovector r1 = coad({TrigPoly(1.0), 0.0}, mu, CocycleKind::standard);
    CHECK(coeff_distance(r1.u, Density(2.0, derivative(u))) == 0.0);
    CHECK(r1.c == 0.0);

    const VirasoroCovector pure(TrigPoly(), 1.0);
    CHECK(coeff_distance(coad({sinx, 0.0}, pure, CocycleKind::standard).u,
                         Density(2.0, cosx)) < 1e-16);
    CHECK(coad({sinx, 0.0}, pure, CocycleKind::modified).u.is_zero(1e-16));
}

TEST_CASE("duality pins the coadjoint formula") {
    Rng rng(4);
    for (CocycleKind kind : {CocycleKind::standard, CocycleKind::modified}) {
        for (int t = 0; t < 10; ++t) {
            const VirasoroElement a{random_trig(rng, 6), 0.3};
            const VirasoroElement b{random_trig(rng, 6), -0.9};
            const VirasoroCovector mu(random_trig(rng, 6), 1.2);
            CHECK(std::abs(vir_pairing(coad(a, mu, kind), b) +
                           vir_pairing(mu, vir_bracket(a, b, kind))) < 1e-11);
        }
    }
}

TEST_CASE("bott values vanish against the identity") {
    Rng rng(5);
    const CircleDiffeo f = random_diffeo(rng, 5, 0.25);
    CHECK(std::abs(bott_cocycle(f, CircleDiffeo())) < 1e-14);
    CHECK(std::abs(bott_cocycle(CircleDiffeo(), f)) < 1e-12);
}

TEST_CASE("schwarzian: rotations, the pointwise anchor, and the modified kernel") {
    CHECK(schwarzian(CircleDiffeo::rotation(1.1), SchwarzianKind::standard).is_zero(1e-15));
    CHECK(schwarzian(CircleDiffeo::rotation(1.1), SchwarzianKind::modified).is_zero(1e-15));

    // f = x + 0.1 sin x at 0: f' = 1.1, f'' = 0, f''' = -0.1, so -0.1/1.1
    const CircleDiffeo f(0.0, TrigPoly::harmonic_sin(1, 0.1));
    CHECK(schwarzian(f, SchwarzianKind::standard)(0.0) ==
          doctest::Approx(-1.0 / 11.0).epsilon(1e-13));

    // the extra term kills projective flows
    CHECK(schwarzian(flow(sinx, 0.5), SchwarzianKind::modified).is_zero(1e-8));
}

TEST_CASE("group coadjoint action: identity, pure charge, flow derivative") {
    Rng rng(6);
    const VirasoroCovector mu(random_trig(rng, 5), 0.8);
    const VirasoroCovector same = group_coad(CircleDiffeo(), mu, CocycleKind::standard);
    CHECK(coeff_distance(same.u, mu.u) == 0.0);
    CHECK(same.c == mu.c);

    const CircleDiffeo f = random_diffeo(rng, 5, 0.3);
    const VirasoroCovector pure(TrigPoly(), 0.8);
    CHECK(coeff_distance(group_coad(f, pure, CocycleKind::standard).u,
                         -0.8 * schwarzian(f, SchwarzianKind::standard)) < 1e-12);

    const double h = 1e-3;
    const TrigPoly X = random_trig(rng, 4, 0.5);
    const Density diff = (1.0 / (2.0 * h)) *
                         (group_coad(flow(X, h), mu, CocycleKind::standard).u -
                          group_coad(flow(X, -h), mu, CocycleKind::standard).u);
    CHECK(coeff_distance(diff, coad({X, 0.0}, mu, CocycleKind::standard).u) < 1e-5);
}
