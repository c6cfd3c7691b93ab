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

#include "vircoad/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "jets.hpp"
#include "vircoad/diffop.hpp"
#include "vircoad/errors.hpp"

namespace vircoad {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using Mat2 = std::array<double, 4>;  // [[m0, m1], [m2, m3]]

double det(const Mat2& m) { return m[0] * m[3] - m[1] * m[2]; }

// Values of f at the 2*steps+1 half-step points j * h/2, h = 2pi/steps.
std::vector<double> half_grid_samples(const Density& f, int steps) {
    std::vector<double> v(static_cast<size_t>(2 * steps + 1));
    const double hh = std::numbers::pi / steps;
    for (int j = 0; j <= 2 * steps; ++j) v[static_cast<size_t>(j)] = f(hh * j);
    return v;
}

struct PathData {
    std::vector<Mat2> T;   // base fundamental frames
    std::vector<Mat2> D;   // zero-initialized variational frames (may be empty)
    double drift = 0.0;
};

// RK4 for T' = A(x) T with A = [[0,1],[-q,0]], optionally coupled with the
// inhomogeneous variational system D' = A D + B T, B = [[0,0],[-r,0]].
PathData integrate_path(const std::vector<double>& q, const std::vector<double>* r, int steps) {
    const double h = kTwoPi / steps;
    auto deriv = [](const Mat2& t, double qv) -> Mat2 {
        return {t[2], t[3], -qv * t[0], -qv * t[1]};
    };
    auto axpy = [](const Mat2& t, double s, const Mat2& k) -> Mat2 {
        return {t[0] + s * k[0], t[1] + s * k[1], t[2] + s * k[2], t[3] + s * k[3]};
    };

    PathData out;
    out.T.reserve(static_cast<size_t>(steps + 1));
    Mat2 T{1.0, 0.0, 0.0, 1.0};
    Mat2 D{0.0, 0.0, 0.0, 0.0};
    out.T.push_back(T);
    if (r) {
        out.D.reserve(static_cast<size_t>(steps + 1));
        out.D.push_back(D);
    }
    for (int s = 0; s < steps; ++s) {
        const double q0 = q[static_cast<size_t>(2 * s)];
        const double qh = q[static_cast<size_t>(2 * s + 1)];
        const double q1 = q[static_cast<size_t>(2 * s + 2)];

        const Mat2 k1 = deriv(T, q0);
        const Mat2 t2 = axpy(T, 0.5 * h, k1);
        const Mat2 k2 = deriv(t2, qh);
        const Mat2 t3 = axpy(T, 0.5 * h, k2);
        const Mat2 k3 = deriv(t3, qh);
        const Mat2 t4 = axpy(T, h, k3);
        const Mat2 k4 = deriv(t4, q1);

        if (r) {
            const auto& rv = *r;
            const double r0 = rv[static_cast<size_t>(2 * s)];
            const double rh = rv[static_cast<size_t>(2 * s + 1)];
            const double r1 = rv[static_cast<size_t>(2 * s + 2)];
            auto dderiv = [](const Mat2& d, const Mat2& t, double qv, double rv2) -> Mat2 {
                return {d[2], d[3], -qv * d[0] - rv2 * t[0], -qv * d[1] - rv2 * t[1]};
            };
            const Mat2 l1 = dderiv(D, T, q0, r0);
            const Mat2 d2 = axpy(D, 0.5 * h, l1);
            const Mat2 l2 = dderiv(d2, t2, qh, rh);
            const Mat2 d3 = axpy(D, 0.5 * h, l2);
            const Mat2 l3 = dderiv(d3, t3, qh, rh);
            const Mat2 d4 = axpy(D, h, l3);
            const Mat2 l4 = dderiv(d4, t4, q1, r1);
            for (int i = 0; i < 4; ++i)
                D[static_cast<size_t>(i)] +=
                    h / 6.0 * (l1[static_cast<size_t>(i)] + 2.0 * l2[static_cast<size_t>(i)] +
                               2.0 * l3[static_cast<size_t>(i)] + l4[static_cast<size_t>(i)]);
        }
        for (int i = 0; i < 4; ++i)
            T[static_cast<size_t>(i)] +=
                h / 6.0 * (k1[static_cast<size_t>(i)] + 2.0 * k2[static_cast<size_t>(i)] +
                           2.0 * k3[static_cast<size_t>(i)] + k4[static_cast<size_t>(i)]);
        out.T.push_back(T);
        if (r) out.D.push_back(D);
        out.drift = std::max(out.drift, std::abs(det(T) - 1.0));
    }
    return out;
}

// Least-squares traceless C with [M, C] = R (stationary monodromy choice).
std::array<double, 3> stationarity_coeffs(const Mat2& M, const Mat2& R) {
    const double m11 = M[0], m12 = M[1], m21 = M[2], m22 = M[3];
    // rows of [M, C] as a linear map of (c1, c2, c3), C = [[c1,c2],[c3,-c1]]
    const double A[4][3] = {
        {0.0, -m21, m12},
        {-2.0 * m12, m11 - m22, 0.0},
        {2.0 * m21, 0.0, m22 - m11},
        {0.0, m21, -m12},
    };
    double N[3][3] = {}, rhs[3] = {};
    for (int row = 0; row < 4; ++row) {
        for (int i = 0; i < 3; ++i) {
            rhs[i] += A[row][i] * R[static_cast<size_t>(row)];
            for (int j = 0; j < 3; ++j) N[i][j] += A[row][i] * A[row][j];
        }
    }
    const double ridge = 1e-14 * (N[0][0] + N[1][1] + N[2][2]) + 1e-300;
    for (int i = 0; i < 3; ++i) N[i][i] += ridge;
    // Gaussian elimination with partial pivoting on the 3x3 system.
    std::array<double, 3> c{0.0, 0.0, 0.0};
    int idx[3] = {0, 1, 2};
    for (int col = 0; col < 3; ++col) {
        int p = col;
        for (int rr = col + 1; rr < 3; ++rr)
            if (std::abs(N[idx[rr]][col]) > std::abs(N[idx[p]][col])) p = rr;
        std::swap(idx[col], idx[p]);
        const double piv = N[idx[col]][col];
        if (piv == 0.0) continue;
        for (int rr = col + 1; rr < 3; ++rr) {
            const double f = N[idx[rr]][col] / piv;
            for (int cc = col; cc < 3; ++cc) N[idx[rr]][cc] -= f * N[idx[col]][cc];
            rhs[idx[rr]] -= f * rhs[idx[col]];
        }
    }
    for (int col = 2; col >= 0; --col) {
        double s = rhs[idx[col]];
        for (int cc = col + 1; cc < 3; ++cc) s -= N[idx[col]][cc] * c[static_cast<size_t>(cc)];
        c[static_cast<size_t>(col)] = N[idx[col]][col] == 0.0 ? 0.0 : s / N[idx[col]][col];
    }
    return c;
}

}  // namespace

SturmLiouville sl_from_covector(const VirasoroCovector& mu) {
    return SturmLiouville(-2.0 * mu.c, mu.u);
}

VirasoroCovector covector_from_sl(const SturmLiouville& L) {
    return VirasoroCovector(L.u, -0.5 * L.a);
}

SturmLiouville energy_shift(const VirasoroCovector& mu) {
    Density shifted = mu.u + Density(2.0, TrigPoly(0.5 * mu.c));
    return SturmLiouville(-2.0 * mu.c, std::move(shifted));
}

FundamentalPath fundamental_path(const SturmLiouville& L, int steps, const Config& cfg) {
    if (L.a == 0.0) throw ConfigError("fundamental_path: a must be nonzero");
    if (steps < 4) throw ConfigError("fundamental_path: need at least 4 steps");
    Density q_density = (1.0 / L.a) * L.u;
    const std::vector<double> q = half_grid_samples(q_density, steps);
    PathData data = integrate_path(q, nullptr, steps);
    if (data.drift > cfg.wronskian_tol)
        throw StepCountTooSmall("fundamental_path: Wronskian drift " +
                                std::to_string(data.drift));
    FundamentalPath path;
    path.steps = steps;
    path.T = std::move(data.T);
    path.wronskian_drift = data.drift;
    return path;
}

MonodromyInvariant monodromy_invariant(const FundamentalPath& path, const Config& cfg) {
    const Mat2& M = path.monodromy();
    MonodromyInvariant inv;
    inv.trace = M[0] + M[3];

    // Phase of the solution vanishing at the base point: psi2 = column 2.
    // Unwrapped with a pi/2 step guard; zeros of psi2 are the crossings of
    // multiples of pi, and the phase only crosses them upward.
    double total = 0.0;
    double prev = std::atan2(path.T.front()[1], path.T.front()[3]);  // = atan2(0, 1) = 0
    for (size_t j = 1; j < path.T.size(); ++j) {
        const double raw = std::atan2(path.T[j][1], path.T[j][3]);
        double d = raw - prev;
        while (d > std::numbers::pi) d -= kTwoPi;
        while (d <= -std::numbers::pi) d += kTwoPi;
        if (std::abs(d) >= 0.5 * std::numbers::pi)
            throw StepCountTooSmall("monodromy_invariant: phase step " + std::to_string(d));
        total += d;
        prev = raw;
    }
    if (std::abs(std::abs(inv.trace) - 2.0) <= cfg.trace_class_tol)
        inv.cls = MonodromyClass::parabolic;
    else if (std::abs(inv.trace) < 2.0)
        inv.cls = MonodromyClass::elliptic;
    else
        inv.cls = MonodromyClass::hyperbolic;

    // The winding is pinned differently per class.  Elliptic monodromy has
    // no real eigendirection, so the phase displacement never crosses a
    // multiple of pi and its floor (the zero count of the base solution) is
    // the invariant.  With real eigendirections the floor depends on the
    // base point by +-1; the conjugacy invariant is the winding rounded to
    // the parity the trace sign dictates (even for trace > 0, odd below).
    const double winding = total / std::numbers::pi;
    if (inv.cls == MonodromyClass::elliptic) {
        inv.lift_index = static_cast<long>(std::floor(winding + cfg.lift_round_guard));
    } else if (inv.trace > 0.0) {
        inv.lift_index = 2 * static_cast<long>(std::lround(0.5 * winding));
    } else {
        inv.lift_index = 2 * static_cast<long>(std::lround(0.5 * (winding - 1.0))) + 1;
    }
    return inv;
}

MonodromyInvariant monodromy_invariant(const SturmLiouville& L, int steps, const Config& cfg) {
    int n = steps;
    while (true) {
        try {
            return monodromy_invariant(fundamental_path(L, n, cfg), cfg);
        } catch (const StepCountTooSmall&) {
            if (n >= (1 << 22)) throw;
            n *= 2;
        }
    }
}

SturmLiouville sl_diffeo_act(const CircleDiffeo& g, const SturmLiouville& L, const Config& cfg) {
    if (g.is_identity()) return L;
    const CircleDiffeo gi = invert(g, cfg);

    // Conjugate through three test densities, everything evaluated
    // pointwise by exact jets of g (projected intermediates must never be
    // differentiated - their truncation tails blow up k^3-fold).  At
    // y = g^{-1}(x) and with pv = chi(g) (g')^{-1/2}:
    //   (g* L chi)(x) = [a pv''(y) + u(y) pv(y)] (1/g'(y))^{3/2},
    // and the {1, sin, cos} test frame has unit determinant everywhere, so
    // the operator's coefficients can be read off per node.
    const detail::DiffeoJet gj(g);
    const detail::PolyJet chi_jets[3] = {detail::PolyJet(TrigPoly(1.0)),
                                         detail::PolyJet(TrigPoly::harmonic_sin(1)),
                                         detail::PolyJet(TrigPoly::harmonic_cos(1))};
    const QuadratureGrid grid(cfg.grid_size);
    const TrigPoly& u = L.u.periodic_value();

    std::vector<double> pot(static_cast<size_t>(grid.size()));
    double max_first = 0.0, max_second_dev = 0.0, max_closed_dev = 0.0;
    for (int j = 0; j < grid.size(); ++j) {
        const double x = grid.node(j);
        double y = gi(x);
        y -= (g(y) - x) / gj.jac(y).v;  // one Newton polish on the exact map
        const detail::Jet3 gy = gj.map(y);
        const detail::Jet3 jac = gj.jac(y);
        const double jinv = 1.0 / jac.v;
        const double push = std::pow(jinv, 1.5);
        const double uy = u(y);

        double res[3];
        for (int i = 0; i < 3; ++i) {
            const detail::Jet3 pv =
                compose(chi_jets[static_cast<size_t>(i)].at(gy.v), gy) *
                detail::pow(jac, -0.5);
            res[i] = (L.a * pv.d2 + uy * pv.v) * push;
        }
        const double s = std::sin(x), co = std::cos(x);
        const double c0 = res[0];
        const double v2 = res[1] - s * c0;
        const double v3 = res[2] - co * c0;
        const double c2 = -s * v2 - co * v3;
        const double c1 = co * v2 - s * v3;
        pot[static_cast<size_t>(j)] = c0;
        max_first = std::max(max_first, std::abs(c1));
        max_second_dev = std::max(max_second_dev, std::abs(c2 - L.a));
        // closed form u(y)/g'(y)^2 + (a/2) S(g^{-1}) with
        // S(g^{-1})(x) = -S(g)(y) / g'(y)^2
        const double closed = (uy - 0.5 * L.a * gj.schwarz(y)) * jinv * jinv;
        max_closed_dev = std::max(max_closed_dev, std::abs(c0 - closed));
    }
    const double scale =
        1.0 + std::abs(L.a) + max_abs_coeff(u) + sup_norm(g.periodic_part());
    if (max_first > 1e4 * cfg.eps_proj * scale)
        throw NotSturmLiouville("sl_diffeo_act: first-order term " + fmt_sci(max_first));
    if (max_second_dev > 1e4 * cfg.eps_proj * scale)
        throw NotSturmLiouville("sl_diffeo_act: second-order coefficient drifted by " +
                                fmt_sci(max_second_dev));
    if (max_closed_dev > 1e3 * cfg.eps_coeff * scale)
        throw ActionMismatch("sl_diffeo_act: conjugation and closed form differ by " +
                             fmt_sci(max_closed_dev));

    Projection proj = project_periodic(pot, cfg.degree_cap);
    if (proj.residual > cfg.eps_proj * sample_scale(pot))
        throw ProjectionOverflow("sl_diffeo_act: projection residual " +
                                 fmt_sci(proj.residual));
    return SturmLiouville(L.a, Density(2.0, std::move(proj.value)));
}

Density sl_vect_act(const TrigPoly& X, const SturmLiouville& L, const Config& cfg) {
    DiffOp op = DiffOp::monomial(TrigPoly(L.a), 2) +
                DiffOp::multiplication(L.u.periodic_value());
    DiffOp comm = compose(DiffOp::lie(X, 1.5), op) - compose(op, DiffOp::lie(X, -0.5));
    const double scale = (1.0 + std::abs(L.a) + max_abs_coeff(L.u.periodic_value())) *
                         (1.0 + max_abs_coeff(derivative(X, 3)));
    if (comm.max_coeff_above(1) > cfg.tangent_tol * scale)
        throw NotTangent("sl_vect_act: surviving derivative terms " +
                         std::to_string(comm.max_coeff_above(1)));
    return Density(2.0, comm.coeff(0));
}

TrigPoly homotopy_field(const SturmLiouville& L, const Density& u_dot, int steps,
                        const Config& cfg) {
    if (L.a == 0.0) throw ConfigError("homotopy_field: a must be nonzero");
    Density q_density = (1.0 / L.a) * L.u;
    Density r_density = (1.0 / L.a) * u_dot;
    const std::vector<double> q = half_grid_samples(q_density, steps);
    const std::vector<double> r = half_grid_samples(r_density, steps);
    PathData data = integrate_path(q, &r, steps);
    if (data.drift > cfg.wronskian_tol)
        throw StepCountTooSmall("homotopy_field: Wronskian drift " + std::to_string(data.drift));

    const Mat2& M = data.T.back();
    const Mat2& Dend = data.D.back();
    const Mat2 R{-Dend[0], -Dend[1], -Dend[2], -Dend[3]};
    const auto c = stationarity_coeffs(M, R);

    // psidot_i = zero-initialized variational solution + (base solutions) C
    std::vector<double> X(data.T.size());
    for (size_t j = 0; j < data.T.size(); ++j) {
        const Mat2& T = data.T[j];
        const Mat2& D = data.D[j];
        const double dot1 = D[0] + T[0] * c[0] + T[1] * c[2];
        const double dot2 = D[1] + T[0] * c[1] - T[1] * c[0];
        X[j] = T[0] * dot2 - T[1] * dot1;
    }
    double scale = 1.0;
    for (double v : X) scale = std::max(scale, std::abs(v));
    const double closure = std::abs(X.back() - X.front());
    if (closure > cfg.periodicity_tol * scale)
        throw NotPeriodic("homotopy_field: X(2pi) - X(0) = " + std::to_string(closure) +
                          " (perturbation does not preserve the monodromy)");

    X.pop_back();  // drop the duplicated endpoint before Fourier analysis
    Projection proj = project_periodic(X, cfg.degree_cap);
    if (proj.residual > std::max(cfg.eps_proj * scale, cfg.periodicity_tol * scale))
        throw ProjectionOverflow("homotopy_field: projection residual " +
                                 fmt_sci(proj.residual));
    return proj.value;
}

std::array<TrigPoly, 3> projective_sl2_triple(const SturmLiouville& L, int steps,
                                              const Config& cfg) {
    FundamentalPath path = fundamental_path(L, steps, cfg);
    std::array<std::vector<double>, 3> prod;
    for (auto& v : prod) v.resize(path.T.size());
    for (size_t j = 0; j < path.T.size(); ++j) {
        const double p1 = path.T[j][0], p2 = path.T[j][1];
        prod[0][j] = p1 * p1;
        prod[1][j] = p1 * p2;
        prod[2][j] = p2 * p2;
    }
    std::array<TrigPoly, 3> out;
    for (int i = 0; i < 3; ++i) {
        auto& v = prod[static_cast<size_t>(i)];
        double scale = 1.0;
        for (double s : v) scale = std::max(scale, std::abs(s));
        if (std::abs(v.back() - v.front()) > cfg.periodicity_tol * scale)
            throw NotPeriodic("projective_sl2_triple: solution products do not close up");
        v.pop_back();
        Projection proj = project_periodic(v, cfg.degree_cap);
        if (proj.residual > std::max(cfg.eps_proj * scale, cfg.periodicity_tol * scale))
            throw ProjectionOverflow("projective_sl2_triple: projection residual " +
                                     fmt_sci(proj.residual));
        out[static_cast<size_t>(i)] = std::move(proj.value);
    }
    return out;
}

}  // namespace vircoad
