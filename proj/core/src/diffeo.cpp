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

#include "vircoad/diffeo.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "vircoad/errors.hpp"

namespace vircoad {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_shift(double c) {
    double r = std::fmod(c, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}
}  // namespace

CircleDiffeo::CircleDiffeo(double shift, TrigPoly periodic_part, const Config& cfg)
    : shift_(shift), p_(std::move(periodic_part)) {
    // Canonical split: the periodic part carries no mean.
    shift_ += p_.a0();
    p_ -= TrigPoly(p_.a0());
    const TrigPoly dp = derivative(p_);
    const int m = std::max(cfg.grid_size, 8 * (p_.degree() + 1));
    for (int j = 0; j < m; ++j) {
        if (1.0 + dp(kTwoPi * j / m) <= 0.0)
            throw NotOrientationPreserving("CircleDiffeo: f' <= 0 on the verification grid");
    }
}

bool CircleDiffeo::is_identity(double eps) const {
    return std::abs(shift_) <= eps && p_.is_zero(eps);
}

TrigPoly CircleDiffeo::fprime() const { return TrigPoly(1.0) + derivative(p_); }

double distance(const CircleDiffeo& f, const CircleDiffeo& g) {
    double dc = std::abs(wrap_shift(f.shift()) - wrap_shift(g.shift()));
    dc = std::min(dc, kTwoPi - dc);
    return dc + coeff_distance(f.periodic_part(), g.periodic_part());
}

CircleDiffeo compose(const CircleDiffeo& g, const CircleDiffeo& f, const Config& cfg) {
    // (g o f)(x) - x = c_f + p_f(x) + c_g + p_g(f(x)); only p_g o f needs
    // projection.
    const QuadratureGrid grid(cfg.grid_size);
    std::vector<double> samples(static_cast<size_t>(grid.size()));
    for (int j = 0; j < grid.size(); ++j) {
        const double x = grid.node(j);
        samples[static_cast<size_t>(j)] = g.periodic_part()(f(x));
    }
    Projection proj = project_periodic(samples, cfg.map_degree_cap);
    if (proj.residual > cfg.eps_proj * sample_scale(samples))
        throw ProjectionOverflow("compose: projection residual " + fmt_sci(proj.residual));
    CircleDiffeo h(f.shift() + g.shift(), f.periodic_part() + proj.value, cfg);
    h.residual_ = proj.residual;
    return h;
}

CircleDiffeo invert(const CircleDiffeo& f, const Config& cfg) {
    const QuadratureGrid grid(cfg.grid_size);
    const TrigPoly fp = f.fprime();
    std::vector<double> samples(static_cast<size_t>(grid.size()));
    for (int j = 0; j < grid.size(); ++j) {
        const double x = grid.node(j);
        double y = x - f.shift();
        bool done = false;
        for (int it = 0; it < cfg.newton_max_iter; ++it) {
            const double r = f(y) - x;
            const double d = fp(y);
            const double step = r / d;
            y -= step;
            if (std::abs(step) < cfg.newton_tol) {
                done = true;
                break;
            }
        }
        if (!done) throw NewtonDivergence("invert: Newton failed at node " + std::to_string(j));
        samples[static_cast<size_t>(j)] = y - x;
    }
    Projection proj = project_periodic(samples, cfg.map_degree_cap);
    if (proj.residual > cfg.eps_proj * sample_scale(samples))
        throw ProjectionOverflow("invert: projection residual " + fmt_sci(proj.residual));
    CircleDiffeo h(0.0, proj.value, cfg);  // mean of samples becomes the shift
    h.residual_ = proj.residual;
    return h;
}

CircleDiffeo flow(const TrigPoly& X, double t, const Config& cfg) {
    if (t == 0.0 || X.is_zero()) {
        if (t != 0.0 && X.degree() == 0) return CircleDiffeo::rotation(X.a0() * t);
        if (t == 0.0) return CircleDiffeo();
    }
    if (X.degree() == 0) return CircleDiffeo::rotation(X.a0() * t);

    const QuadratureGrid grid(cfg.grid_size);
    const int steps = cfg.flow_steps;
    const double h = t / steps;
    std::vector<double> y(static_cast<size_t>(grid.size()));
    for (int j = 0; j < grid.size(); ++j) y[static_cast<size_t>(j)] = grid.node(j);
    for (int s = 0; s < steps; ++s) {
        for (auto& yj : y) {
            const double k1 = X(yj);
            const double k2 = X(yj + 0.5 * h * k1);
            const double k3 = X(yj + 0.5 * h * k2);
            const double k4 = X(yj + h * k3);
            yj += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
    }
    std::vector<double> samples(static_cast<size_t>(grid.size()));
    for (int j = 0; j < grid.size(); ++j)
        samples[static_cast<size_t>(j)] = y[static_cast<size_t>(j)] - grid.node(j);
    Projection proj = project_periodic(samples, cfg.map_degree_cap);
    if (proj.residual > cfg.eps_proj * sample_scale(samples))
        throw ProjectionOverflow("flow: projection residual " + fmt_sci(proj.residual));
    CircleDiffeo g(0.0, proj.value, cfg);
    g.residual_ = proj.residual;
    return g;
}

}  // namespace vircoad
