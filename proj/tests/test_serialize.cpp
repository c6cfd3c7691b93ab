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

#include "vircoad/errors.hpp"
#include "vircoad/rng.hpp"
#include "vircoad/serialize.hpp"

using namespace vircoad;

TEST_CASE("round trips through the wire formats") {
    Rng rng(1);
    for (int t = 0; t < 20; ++t) {
        const TrigPoly f = random_trig(rng, 8);
        CHECK(coeff_distance(trig_from_json(parse_json(to_json(f).dump())), f) == 0.0);

        const HalfTrigPoly h = random_half_trig(rng, 8);
        CHECK(coeff_distance(half_trig_from_json(parse_json(to_json(h).dump())), h) == 0.0);

        const CircleDiffeo g = random_diffeo(rng, 6, 0.4);
        const CircleDiffeo g2 = diffeo_from_json(parse_json(to_json(g).dump()));
        CHECK(distance(g, g2) < 1e-15);

        const Density a(1.5, random_trig(rng, 6));
        const Density a2 = density_from_json(parse_json(to_json(a).dump()));
        CHECK(a2.weight() == a.weight());
        CHECK(coeff_distance(a, a2) == 0.0);
    }

    const Density anti(-0.5, HalfTrigPoly::harmonic_sin(0));
    const Density anti2 = density_from_json(parse_json(to_json(anti).dump()));
    CHECK(anti2.antiperiodic());
    CHECK(coeff_distance(anti, anti2) == 0.0);

    const SturmLiouville L(-2.0, TrigPoly::harmonic_cos(2, 0.3));
    const SturmLiouville L2 = sturm_from_json(parse_json(to_json(L).dump()));
    CHECK(L2.a == L.a);
    CHECK(coeff_distance(L2.u, L.u) == 0.0);

    const MatrixSL M(TrigPoly::harmonic_sin(1), TrigPoly(0.5), {0.1, -0.2, 0.3});
    const MatrixSL M2 = matrix_sl_from_json(parse_json(to_json(M).dump()));
    CHECK(M2.c == M.c);
    CHECK(coeff_distance(M2.u, M.u) == 0.0);
    CHECK(coeff_distance(M2.v, M.v) == 0.0);
}

TEST_CASE("laurent polynomials serialize exact rationals") {
    LaurentPoly2 f;
    f.add_term(-2, 3, Rational(7, 3));
    f.add_term(0, 0, Rational(-1, 2));
    const LaurentPoly2 f2 = laurent_from_json(parse_json(to_json(f).dump()));
    CHECK(f == f2);

    // very large rationals survive via decimal strings
    LaurentPoly2 g;
    g.add_term(1, 1, Rational(boost::multiprecision::cpp_int("123456789012345678901234567890"),
                              boost::multiprecision::cpp_int(7)));
    CHECK(laurent_from_json(parse_json(to_json(g).dump())) == g);

    // plain integer terms are accepted too
    CHECK(laurent_from_json(parse_json("[[2, 0, 1, 1]]")) == LaurentPoly2::monomial(2, 0));
}

TEST_CASE("malformed inputs raise ParseError") {
    CHECK_THROWS_AS(parse_json("{"), ParseError);
    CHECK_THROWS_AS(trig_from_json(parse_json("{\"a0\": 1}")), ParseError);
    CHECK_THROWS_AS(trig_from_json(parse_json("[1, 2]")), ParseError);
    CHECK_THROWS_AS(sturm_from_json(parse_json("{\"a\": 1}")), ParseError);
    CHECK_THROWS_AS(matrix_sl_from_json(parse_json(
                        "{\"u\": {\"a0\":0,\"cos\":[],\"sin\":[]}, "
                        "\"v\": {\"a0\":0,\"cos\":[],\"sin\":[]}, \"c\": [1, 2]}")),
                    ParseError);
    CHECK_THROWS_AS(laurent_from_json(parse_json("[[1, 2, 3]]")), ParseError);
    CHECK_THROWS_AS(laurent_from_json(parse_json("[[1, 2, 3, 0]]")), ParseError);
    CHECK_THROWS_AS(half_trig_from_json(parse_json("{\"a0\": 0}")), ParseError);
}
