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

#ifndef VIRCOAD_DENSITY_HPP
#define VIRCOAD_DENSITY_HPP

#include <variant>

#include "vircoad/config.hpp"
#include "vircoad/diffeo.hpp"
#include "vircoad/trig.hpp"

namespace vircoad {

/// Tensor density a(x)(dx)^lambda on the circle.  The carrier is either a
/// periodic TrigPoly or an anti-periodic HalfTrigPoly (half-integer modes);
/// the antiperiodic() flag always matches the carrier kind.
class Density {
  public:
    Density() = default;
    Density(double weight, TrigPoly value) : weight_(weight), value_(std::move(value)) {}
    Density(double weight, HalfTrigPoly value) : weight_(weight), value_(std::move(value)) {}

    double weight() const { return weight_; }
    bool antiperiodic() const { return std::holds_alternative<HalfTrigPoly>(value_); }

    const TrigPoly& periodic_value() const;
    const HalfTrigPoly& antiperiodic_value() const;

    double operator()(double x) const;
    bool is_zero(double eps = 0.0) const;

  private:
    double weight_ = 0.0;
    std::variant<TrigPoly, HalfTrigPoly> value_;
};

/// Coefficientwise max-norm distance; requires equal weight and carrier kind.
double coeff_distance(const Density& a, const Density& b);

/// Product of densities; weights add, half x half closes to periodic.
Density operator*(const Density& a, const Density& b);
Density operator+(const Density& a, const Density& b);
Density operator-(const Density& a, const Density& b);
Density operator*(double s, const Density& a);

/// Push-forward action of g on a periodic density (the one-parameter family
/// of actions):  g . a = (a o g^{-1}) ((g^{-1})')^lambda.
/// Fractional Jacobian powers are taken pointwise as exp(lambda log f'),
/// valid because f' > 0.  Throws Unsupported for anti-periodic carriers.
Density diffeo_act(const CircleDiffeo& g, const Density& a, const Config& cfg = default_config());

/// Pull-back by f:  (a o f) (f')^lambda.  Equals diffeo_act(invert(f), a).
Density pullback(const CircleDiffeo& f, const Density& a, const Config& cfg = default_config());

/// Lie derivative on weight-lambda densities:  X a' + lambda X' a, exact.
Density lie_derivative(const TrigPoly& X, const Density& a);

/// Integral pairing of complementary densities (weights summing to 1):
/// integral of a(x) b(x) dx over one period, exact.
double pairing(const Density& a, const Density& b, double eps_weight = 1e-12);

}  // namespace vircoad

#endif
