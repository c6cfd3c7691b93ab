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

// Third-order jets for pointwise-exact evaluation of transported operator
// coefficients.  Conjugated operators need up to three derivatives of
// compositions like chi(g(x)) (g'(x))^s; differentiating projected
// intermediates would amplify their truncation tails by k^3, so everything
// here is evaluated through exact chain/Leibniz rules on the original data.

#ifndef VIRCOAD_JETS_HPP
#define VIRCOAD_JETS_HPP

#include <cmath>

#include "vircoad/diffeo.hpp"
#include "vircoad/trig.hpp"

namespace vircoad::detail {

struct Jet3 {
    double v = 0.0, d1 = 0.0, d2 = 0.0, d3 = 0.0;
};

inline Jet3 operator+(const Jet3& a, const Jet3& b) {
    return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2, a.d3 + b.d3};
}

inline Jet3 operator*(double s, const Jet3& a) {
    return {s * a.v, s * a.d1, s * a.d2, s * a.d3};
}

inline Jet3 operator*(const Jet3& a, const Jet3& b) {
    return {a.v * b.v, a.d1 * b.v + a.v * b.d1,
            a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2,
            a.d3 * b.v + 3.0 * a.d2 * b.d1 + 3.0 * a.d1 * b.d2 + a.v * b.d3};
}

/// f(g) by Faa di Bruno; `outer` holds f's derivatives at g's value.
inline Jet3 compose(const Jet3& outer, const Jet3& inner) {
    Jet3 r;
    r.v = outer.v;
    r.d1 = outer.d1 * inner.d1;
    r.d2 = outer.d2 * inner.d1 * inner.d1 + outer.d1 * inner.d2;
    r.d3 = outer.d3 * inner.d1 * inner.d1 * inner.d1 +
           3.0 * outer.d2 * inner.d1 * inner.d2 + outer.d1 * inner.d3;
    return r;
}

/// a^s for a.v > 0.
inline Jet3 pow(const Jet3& a, double s) {
    const double p0 = std::pow(a.v, s);
    const double p1 = s * p0 / a.v;
    const double p2 = (s - 1.0) * p1 / a.v;
    const double p3 = (s - 2.0) * p2 / a.v;
    Jet3 r;
    r.v = p0;
    r.d1 = p1 * a.d1;
    r.d2 = p2 * a.d1 * a.d1 + p1 * a.d2;
    r.d3 = p3 * a.d1 * a.d1 * a.d1 + 3.0 * p2 * a.d1 * a.d2 + p1 * a.d3;
    return r;
}

/// Evaluator carrying the first three exact derivative polynomials of a
/// trigonometric polynomial.
class PolyJet {
  public:
    explicit PolyJet(const TrigPoly& f)
        : f_(f), d1_(derivative(f)), d2_(derivative(d1_)), d3_(derivative(d2_)) {}

    Jet3 at(double x) const { return {f_(x), d1_(x), d2_(x), d3_(x)}; }

  private:
    TrigPoly f_, d1_, d2_, d3_;
};

/// Jets of a circle map g and of its first derivative.  Projected maps
/// carry a roundoff floor across all modes which the fourth derivative
/// amplifies k^4-fold, so the data is trimmed just above that floor first;
/// for exact input maps the trim is a no-op.
class DiffeoJet {
  public:
    explicit DiffeoJet(const CircleDiffeo& g)
        : shift_(g.shift()),
          p_(trim_below(g.periodic_part(),
                        2e-15 * std::max(1.0, max_abs_coeff(g.periodic_part())))),
          p1_(derivative(p_)),
          p2_(derivative(p1_)),
          p3_(derivative(p2_)),
          p4_(derivative(p3_)) {}

    /// (g, g', g'', g''') at x.
    Jet3 map(double x) const { return {x + shift_ + p_(x), 1.0 + p1_(x), p2_(x), p3_(x)}; }

    /// (g', g'', g''', g'''') at x.
    Jet3 jac(double x) const { return {1.0 + p1_(x), p2_(x), p3_(x), p4_(x)}; }

    /// Pointwise Schwarzian g'''/g' - (3/2)(g''/g')^2.
    double schwarz(double x) const {
        const double j1 = 1.0 + p1_(x), j2 = p2_(x), j3 = p3_(x);
        return j3 / j1 - 1.5 * (j2 / j1) * (j2 / j1);
    }

  private:
    double shift_;
    TrigPoly p_, p1_, p2_, p3_, p4_;
};

}  // namespace vircoad::detail

#endif
