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

#ifndef VIRCOAD_LAURENT_HPP
#define VIRCOAD_LAURENT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <utility>
#include <vector>

namespace vircoad {

/// Exact rational scalar used on the symplectic-plane side, where every
/// identity is checked with zero tolerance.
using Rational = boost::multiprecision::cpp_rational;

Rational binom_rational(int n, int k);
Rational factorial_rational(int n);
/// Falling factorial start*(start-1)*...*(start-count+1) over the rationals.
Rational falling_rational(const Rational& start, int count);

/// Laurent polynomial sum c_{ij} p^i q^j with exact rational coefficients
/// and finitely many terms; exponents may be negative.
class LaurentPoly2 {
  public:
    using Key = std::pair<int, int>;  // (i, j) exponents of p, q

    LaurentPoly2() = default;

    static LaurentPoly2 monomial(int i, int j, Rational coeff = Rational(1));

    void add_term(int i, int j, const Rational& coeff);
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LaurentPoly2 deriv_p() const;
    LaurentPoly2 deriv_q() const;

    LaurentPoly2& operator+=(const LaurentPoly2& g);
    LaurentPoly2& operator-=(const LaurentPoly2& g);
    LaurentPoly2& operator*=(const Rational& s);

    friend bool operator==(const LaurentPoly2& f, const LaurentPoly2& g) {
        return f.terms_ == g.terms_;
    }

  private:
    std::map<Key, Rational> terms_;
};

LaurentPoly2 operator+(LaurentPoly2 f, const LaurentPoly2& g);
LaurentPoly2 operator-(LaurentPoly2 f, const LaurentPoly2& g);
LaurentPoly2 operator*(const LaurentPoly2& f, const LaurentPoly2& g);
LaurentPoly2 operator*(LaurentPoly2 f, const Rational& s);
LaurentPoly2 operator*(const Rational& s, LaurentPoly2 f);

/// m-th bilinear term of the star product:
///   {F,G}_m = sum_{i=0..m} (-1)^i C(m,i) d^m F/dp^{m-i} dq^i . d^m G/dp^i dq^{m-i}
/// {F,G}_0 = FG and {F,G}_1 is the Poisson bracket F_p G_q - F_q G_p.
LaurentPoly2 moyal_term(const LaurentPoly2& F, const LaurentPoly2& G, int m);

LaurentPoly2 poisson(const LaurentPoly2& F, const LaurentPoly2& G);

/// Truncated formal series in hbar with LaurentPoly2 coefficients.
struct HbarSeries {
    int order = 0;  // coefficients 0..order are tracked
    std::vector<LaurentPoly2> coeff;

    explicit HbarSeries(int order_ = 0)
        : order(order_), coeff(static_cast<size_t>(order_ + 1)) {}

    const LaurentPoly2& at(int m) const { return coeff[static_cast<size_t>(m)]; }
    bool operator==(const HbarSeries& other) const = default;
};

/// F * G truncated at hbar^K: the hbar^m coefficient is {F,G}_m / (2^m m!).
HbarSeries star(const LaurentPoly2& F, const LaurentPoly2& G, int K);

/// Series-by-series product (orders add, truncated at the smaller order).
HbarSeries star(const HbarSeries& F, const HbarSeries& G);

HbarSeries to_series(const LaurentPoly2& F, int K);

}  // namespace vircoad

#endif
