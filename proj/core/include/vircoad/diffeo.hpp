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

#ifndef VIRCOAD_DIFFEO_HPP
#define VIRCOAD_DIFFEO_HPP

#include "vircoad/config.hpp"
#include "vircoad/trig.hpp"

namespace vircoad {

/// Orientation-preserving circle diffeomorphism f(x) = x + c + p(x) with p a
/// trigonometric polynomial normalized to zero mean (the mean lives in the
/// shift c).  f(x + 2pi) = f(x) + 2pi holds by construction; the constructor
/// rejects maps with f' <= 0 anywhere on a verification grid.
class CircleDiffeo {
  public:
    /// The identity map.
    CircleDiffeo() = default;

    CircleDiffeo(double shift, TrigPoly periodic_part, const Config& cfg = default_config());

    static CircleDiffeo rotation(double c) { return CircleDiffeo(c, TrigPoly()); }

    double shift() const { return shift_; }
    const TrigPoly& periodic_part() const { return p_; }
    bool is_identity(double eps = 0.0) const;

    double operator()(double x) const { return x + shift_ + p_(x); }

    /// f' = 1 + p', exact.
    TrigPoly fprime() const;

    /// Projection residual recorded by the inexact operation that produced
    /// this value; 0 for exactly constructed maps.
    double projection_residual() const { return residual_; }

  private:
    friend CircleDiffeo compose(const CircleDiffeo&, const CircleDiffeo&, const Config&);
    friend CircleDiffeo invert(const CircleDiffeo&, const Config&);
    friend CircleDiffeo flow(const TrigPoly&, double, const Config&);

    double shift_ = 0.0;
    TrigPoly p_;
    double residual_ = 0.0;
};

/// Distance between diffeomorphisms: |shift difference mod 2pi| plus the
/// coefficient distance of the periodic parts.
double distance(const CircleDiffeo& f, const CircleDiffeo& g);

/// g o f, sampled on the grid and projected back to degree cfg.degree_cap.
/// Throws ProjectionOverflow if the projection residual exceeds cfg.eps_proj.
CircleDiffeo compose(const CircleDiffeo& g, const CircleDiffeo& f,
                     const Config& cfg = default_config());

/// Pointwise Newton solve of f(y) = x per grid node, then projection.
/// compose(f, invert(f)) is the identity within cfg.eps_proj.
CircleDiffeo invert(const CircleDiffeo& f, const Config& cfg = default_config());

/// Time-t flow of the vector field X(x) d/dx, fixed-step RK4 with
/// cfg.flow_steps steps.  flow(X, 0) is the identity exactly.
CircleDiffeo flow(const TrigPoly& X, double t, const Config& cfg = default_config());

}  // namespace vircoad

#endif
