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

#include "vircoad/laurent.hpp"

#include <algorithm>

namespace vircoad {

Rational binom_rational(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    Rational r(1);
    for (int i = 1; i <= k; ++i) r = r * Rational(n - k + i) / Rational(i);
    return r;
}

Rational factorial_rational(int n) {
    Rational r(1);
    for (int i = 2; i <= n; ++i) r *= Rational(i);
    return r;
}

Rational falling_rational(const Rational& start, int count) {
    Rational r(1);
    Rational v = start;
    for (int i = 0; i < count; ++i) {
        r *= v;
        v -= 1;
    }
    return r;
}

LaurentPoly2 LaurentPoly2::monomial(int i, int j, Rational coeff) {
    LaurentPoly2 f;
    f.add_term(i, j, coeff);
    return f;
}

void LaurentPoly2::add_term(int i, int j, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly2 LaurentPoly2::deriv_p() const {
    LaurentPoly2 out;
    for (const auto& [key, c] : terms_)
        if (key.first != 0) out.add_term(key.first - 1, key.second, c * Rational(key.first));
    return out;
}

LaurentPoly2 LaurentPoly2::deriv_q() const {
    LaurentPoly2 out;
    for (const auto& [key, c] : terms_)
        if (key.second != 0) out.add_term(key.first, key.second - 1, c * Rational(key.second));
    return out;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& g) {
    for (const auto& [key, c] : g.terms_) add_term(key.first, key.second, c);
    return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& g) {
    for (const auto& [key, c] : g.terms_) add_term(key.first, key.second, -c);
    return *this;
}

LaurentPoly2& LaurentPoly2::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, c] : terms_) c *= s;
    return *this;
}

LaurentPoly2 operator+(LaurentPoly2 f, const LaurentPoly2& g) { return f += g; }
LaurentPoly2 operator-(LaurentPoly2 f, const LaurentPoly2& g) { return f -= g; }

LaurentPoly2 operator*(const LaurentPoly2& f, const LaurentPoly2& g) {
    LaurentPoly2 out;
    for (const auto& [ka, ca] : f.terms())
        for (const auto& [kb, cb] : g.terms())
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

LaurentPoly2 operator*(LaurentPoly2 f, const Rational& s) { return f *= s; }
LaurentPoly2 operator*(const Rational& s, LaurentPoly2 f) { return f *= s; }

LaurentPoly2 moyal_term(const LaurentPoly2& F, const LaurentPoly2& G, int m) {
    LaurentPoly2 out;
    for (int i = 0; i <= m; ++i) {
        LaurentPoly2 df = F;
        for (int k = 0; k < m - i; ++k) df = df.deriv_p();
        for (int k = 0; k < i; ++k) df = df.deriv_q();
        LaurentPoly2 dg = G;
        for (int k = 0; k < i; ++k) dg = dg.deriv_p();
        for (int k = 0; k < m - i; ++k) dg = dg.deriv_q();
        const Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
        out += (sign * binom_rational(m, i)) * (df * dg);
    }
    return out;
}

LaurentPoly2 poisson(const LaurentPoly2& F, const LaurentPoly2& G) {
    return moyal_term(F, G, 1);
}

HbarSeries star(const LaurentPoly2& F, const LaurentPoly2& G, int K) {
    HbarSeries s(K);
    Rational denom(1);  // 2^m m!
    for (int m = 0; m <= K; ++m) {
        if (m > 0) denom *= Rational(2 * m);
        s.coeff[static_cast<size_t>(m)] = moyal_term(F, G, m) * (Rational(1) / denom);
    }
    return s;
}

HbarSeries star(const HbarSeries& F, const HbarSeries& G) {
    const int K = std::min(F.order, G.order);
    HbarSeries s(K);
    Rational denom(1);
    std::vector<Rational> inv_denom(static_cast<size_t>(K + 1));
    for (int m = 0; m <= K; ++m) {
        if (m > 0) denom *= Rational(2 * m);
        inv_denom[static_cast<size_t>(m)] = Rational(1) / denom;
    }
    for (int i = 0; i <= K; ++i)
        for (int j = 0; i + j <= K; ++j)
            for (int m = 0; i + j + m <= K; ++m)
                s.coeff[static_cast<size_t>(i + j + m)] +=
                    moyal_term(F.at(i), G.at(j), m) * inv_denom[static_cast<size_t>(m)];
    return s;
}

HbarSeries to_series(const LaurentPoly2& F, int K) {
    HbarSeries s(K);
    s.coeff[0] = F;
    return s;
}

}  // namespace vircoad
