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

#include "vircoad/density.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "vircoad/errors.hpp"

namespace vircoad {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

const TrigPoly& Density::periodic_value() const {
    if (antiperiodic()) throw Unsupported("Density: anti-periodic carrier");
    return std::get<TrigPoly>(value_);
}

const HalfTrigPoly& Density::antiperiodic_value() const {
    if (!antiperiodic()) throw Unsupported("Density: periodic carrier");
    return std::get<HalfTrigPoly>(value_);
}

double Density::operator()(double x) const {
    return antiperiodic() ? std::get<HalfTrigPoly>(value_)(x) : std::get<TrigPoly>(value_)(x);
}

bool Density::is_zero(double eps) const {
    return antiperiodic() ? std::get<HalfTrigPoly>(value_).is_zero(eps)
                          : std::get<TrigPoly>(value_).is_zero(eps);
}

double coeff_distance(const Density& a, const Density& b) {
    if (a.antiperiodic() != b.antiperiodic())
        throw WeightMismatch("coeff_distance: mixed periodicity classes");
    if (a.antiperiodic()) return coeff_distance(a.antiperiodic_value(), b.antiperiodic_value());
    return coeff_distance(a.periodic_value(), b.periodic_value());
}

Density operator*(const Density& a, const Density& b) {
    const double w = a.weight() + b.weight();
    if (a.antiperiodic() && b.antiperiodic())
        return Density(w, a.antiperiodic_value() * b.antiperiodic_value());
    if (!a.antiperiodic() && !b.antiperiodic())
        return Density(w, a.periodic_value() * b.periodic_value());
    if (a.antiperiodic()) return Density(w, b.periodic_value() * a.antiperiodic_value());
    return Density(w, a.periodic_value() * b.antiperiodic_value());
}

Density operator+(const Density& a, const Density& b) {
    if (a.antiperiodic() != b.antiperiodic() || a.weight() != b.weight())
        throw WeightMismatch("Density addition: mismatched weight or carrier");
    if (a.antiperiodic())
        return Density(a.weight(), a.antiperiodic_value() + b.antiperiodic_value());
    return Density(a.weight(), a.periodic_value() + b.periodic_value());
}

Density operator-(const Density& a, const Density& b) { return a + (-1.0 * b); }

Density operator*(double s, const Density& a) {
    if (a.antiperiodic()) return Density(a.weight(), s * a.antiperiodic_value());
    return Density(a.weight(), s * a.periodic_value());
}

namespace {

// Shared sampler for push-forward/pull-back: values (a o m)(x) (m')^lambda
// where m is either g^{-1} or f, with m' > 0 guaranteed.
Density transport(const CircleDiffeo& m, const Density& a, const Config& cfg,
                  const char* what) {
    if (a.antiperiodic())
        throw Unsupported(std::string(what) + ": anti-periodic densities are not transported");
    const QuadratureGrid grid(cfg.grid_size);
    const TrigPoly& v = a.periodic_value();
    const TrigPoly mp = m.fprime();
    std::vector<double> samples(static_cast<size_t>(grid.size()));
    for (int j = 0; j < grid.size(); ++j) {
        const double x = grid.node(j);
        const double jac = mp(x);
        samples[static_cast<size_t>(j)] = v(m(x)) * std::exp(a.weight() * std::log(jac));
    }
    Projection proj = project_periodic(samples, cfg.degree_cap);
    if (proj.residual > cfg.eps_proj * sample_scale(samples))
        throw ProjectionOverflow(std::string(what) + ": projection residual " +
                                 fmt_sci(proj.residual));
    return Density(a.weight(), std::move(proj.value));
}

}  // namespace

Density diffeo_act(const CircleDiffeo& g, const Density& a, const Config& cfg) {
    if (g.is_identity()) return a;
    return transport(invert(g, cfg), a, cfg, "diffeo_act");
}

Density pullback(const CircleDiffeo& f, const Density& a, const Config& cfg) {
    if (f.is_identity()) return a;
    return transport(f, a, cfg, "pullback");
}

Density lie_derivative(const TrigPoly& X, const Density& a) {
    if (a.antiperiodic()) {
        HalfTrigPoly out = X * derivative(a.antiperiodic_value());
        out += a.weight() * (derivative(X) * a.antiperiodic_value());
        return Density(a.weight(), std::move(out));
    }
    TrigPoly out = X * derivative(a.periodic_value());
    out += a.weight() * (derivative(X) * a.periodic_value());
    return Density(a.weight(), std::move(out));
}

double pairing(const Density& a, const Density& b, double eps_weight) {
    if (std::abs(a.weight() + b.weight() - 1.0) > eps_weight)
        throw WeightMismatch("pairing: weights must sum to 1, got " +
                             std::to_string(a.weight()) + " + " + std::to_string(b.weight()));
    if (a.antiperiodic() != b.antiperiodic())
        throw WeightMismatch("pairing: mixed periodicity classes");
    if (a.antiperiodic()) return integrate_period(a.antiperiodic_value() * b.antiperiodic_value());
    return integrate_period(a.periodic_value() * b.periodic_value());
}

}  // namespace vircoad
