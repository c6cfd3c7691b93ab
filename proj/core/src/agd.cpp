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

#include "vircoad/agd.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "jets.hpp"
#include "vircoad/errors.hpp"
#include "vircoad/virasoro.hpp"

namespace vircoad {

namespace {

double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

double falling(double start, int count) {
    double r = 1.0;
    for (int i = 0; i < count; ++i) r *= start - i;
    return r;
}

std::complex<double> i_power(int m) {
    switch (((m % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

long integral_twice_weight(double lambda, const char* what) {
    const double tl = 2.0 * lambda;
    const long r = std::lround(tl);
    if (std::abs(tl - static_cast<double>(r)) > 1e-9)
        throw NonIntegerExponent(std::string(what) + ": 2*lambda must be an integer, got " +
                                 std::to_string(tl));
    return r;
}

// Solves the small least-squares system A c = b (rows >= cols) by normal
// equations with partial pivoting; used for pointwise coefficient
// extraction of conjugated operators.
template <int Rows, int Cols>
std::array<double, Cols> solve_lsq(const std::array<std::array<double, Cols>, Rows>& A,
                                   const std::array<double, Rows>& b) {
    double N[Cols][Cols] = {};
    double rhs[Cols] = {};
    for (int r = 0; r < Rows; ++r)
        for (int i = 0; i < Cols; ++i) {
            rhs[i] += A[r][i] * b[r];
            for (int j = 0; j < Cols; ++j) N[i][j] += A[r][i] * A[r][j];
        }
    int idx[Cols];
    for (int i = 0; i < Cols; ++i) idx[i] = i;
    for (int col = 0; col < Cols; ++col) {
        int p = col;
        for (int r = col + 1; r < Cols; ++r)
            if (std::abs(N[idx[r]][col]) > std::abs(N[idx[p]][col])) p = r;
        std::swap(idx[col], idx[p]);
        const double piv = N[idx[col]][col];
        if (piv == 0.0) continue;
        for (int r = col + 1; r < Cols; ++r) {
            const double f = N[idx[r]][col] / piv;
            for (int c = col; c < Cols; ++c) N[idx[r]][c] -= f * N[idx[col]][c];
            rhs[idx[r]] -= f * rhs[idx[col]];
        }
    }
    std::array<double, Cols> x{};
    for (int col = Cols - 1; col >= 0; --col) {
        double s = rhs[idx[col]];
        for (int c = col + 1; c < Cols; ++c) s -= N[idx[col]][c] * x[static_cast<size_t>(c)];
        x[static_cast<size_t>(col)] = N[idx[col]][col] == 0.0 ? 0.0 : s / N[idx[col]][col];
    }
    return x;
}

}  // namespace

LaurentPoly2 lift(const MonomialDensity& phi) {
    const double e = -2.0 * phi.lambda - phi.exponent;
    const long p_exp = std::lround(e);
    if (std::abs(e - static_cast<double>(p_exp)) > 1e-9)
        throw NonIntegerExponent("lift: -2*lambda - a is not an integer");
    return LaurentPoly2::monomial(static_cast<int>(p_exp), phi.exponent);
}

MonomialTransvectant transvectant(const MonomialDensity& phi, const MonomialDensity& psi,
                                  int m) {
    const long tl = integral_twice_weight(phi.lambda, "transvectant");
    const long tm = integral_twice_weight(psi.lambda, "transvectant");
    Rational coeff(0);
    for (int i = 0; i <= m; ++i) {
        const int j = m - i;
        const Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
        coeff += sign * binom_rational(m, i) *
                 falling_rational(Rational(tm + m - 1), i) *
                 falling_rational(Rational(tl + m - 1), j) *
                 falling_rational(Rational(phi.exponent), i) *
                 falling_rational(Rational(psi.exponent), j);
    }
    MonomialDensity out{phi.exponent + psi.exponent - m, phi.lambda + psi.lambda + m};
    return {coeff, out};
}

Density transvectant(const Density& phi, const Density& psi, int m) {
    const double lam = phi.weight(), mu = psi.weight();
    const auto fm = phi.antiperiodic() ? to_modes(phi.antiperiodic_value())
                                       : to_modes(phi.periodic_value());
    const auto gm = psi.antiperiodic() ? to_modes(psi.antiperiodic_value())
                                       : to_modes(psi.periodic_value());
    const std::complex<double> phase = i_power(m);

    std::map<int, std::complex<double>> acc;  // twice-mode -> coefficient
    for (const auto& [tk, ck] : fm) {
        const double k = 0.5 * tk;
        for (const auto& [tl, cl] : gm) {
            const double l = 0.5 * tl;
            double T = 0.0;
            for (int i = 0; i <= m; ++i) {
                const int j = m - i;
                const double sign = (i % 2 == 0) ? 1.0 : -1.0;
                T += sign * binom(m, i) * falling(2.0 * mu + m - 1, i) *
                     falling(2.0 * lam + m - 1, j) * falling(k - lam, i) * falling(l - mu, j);
            }
            if (T != 0.0) acc[tk + tl] += phase * T * ck * cl;
        }
    }

    const double out_weight = lam + mu + m;
    const bool odd_out = phi.antiperiodic() != psi.antiperiodic();
    double scale = 1e-30;
    for (const auto& [t, c] : acc) scale = std::max(scale, std::abs(c));
    if (odd_out) {
        int n = 0;
        for (const auto& [t, c] : acc)
            if (t > 0 && std::abs(c) > 1e-15 * scale) n = std::max(n, (t + 1) / 2);
        std::vector<double> cs(static_cast<size_t>(n), 0.0), sn(static_cast<size_t>(n), 0.0);
        for (const auto& [t, c] : acc) {
            if (t <= 0) continue;
            const int k = (t - 1) / 2;
            if (k >= n) continue;
            cs[static_cast<size_t>(k)] = 2.0 * c.real();
            sn[static_cast<size_t>(k)] = -2.0 * c.imag();
        }
        return Density(out_weight, HalfTrigPoly(std::move(cs), std::move(sn)));
    }
    int n = 0;
    for (const auto& [t, c] : acc)
        if (t > 0 && std::abs(c) > 1e-15 * scale) n = std::max(n, t / 2);
    std::vector<double> cs(static_cast<size_t>(n), 0.0), sn(static_cast<size_t>(n), 0.0);
    double a0 = 0.0;
    for (const auto& [t, c] : acc) {
        if (t == 0) {
            a0 = c.real();
        } else if (t > 0 && t / 2 <= n) {
            cs[static_cast<size_t>(t / 2 - 1)] = 2.0 * c.real();
            sn[static_cast<size_t>(t / 2 - 1)] = -2.0 * c.imag();
        }
    }
    return Density(out_weight, TrigPoly(a0, std::move(cs), std::move(sn)));
}

Density second_lie(const Density& Z, const Density& phi) {
    if (Z.weight() != -2.0) throw WeightMismatch("second_lie: Z must have weight -2");
    return transvectant(Z, phi, 2);
}

DiffOp second_lie_op(const TrigPoly& Z, double mu, const TrigPoly& curvature) {
    const TrigPoly z1 = derivative(Z);
    const TrigPoly z2 = derivative(z1);
    TrigPoly zero_order =
        2.0 * mu * (2.0 * mu + 1.0) * z2 + 4.0 * mu * (mu - 1.0) * (curvature * Z);
    return DiffOp({std::move(zero_order), 6.0 * (2.0 * mu + 1.0) * z1, 12.0 * Z});
}

ThirdOrderOp::ThirdOrderOp(Density u_, Density w_) : u(std::move(u_)), w(std::move(w_)) {
    if (u.weight() != 2.0 || w.weight() != 3.0)
        throw WeightMismatch("ThirdOrderOp: weights must be (2, 3)");
}

ThirdOrderOp ThirdOrderOp::from_uv(const TrigPoly& u, const TrigPoly& v) {
    return ThirdOrderOp(Density(2.0, u), Density(3.0, v - 0.5 * derivative(u)));
}

TrigPoly ThirdOrderOp::v() const {
    return w.periodic_value() + 0.5 * derivative(u.periodic_value());
}

DiffOp ThirdOrderOp::as_operator() const {
    return DiffOp({v(), u.periodic_value(), TrigPoly(), TrigPoly(1.0)});
}

ThirdOrderOp third_diffeo_act(const CircleDiffeo& g, const ThirdOrderOp& A, const Config& cfg) {
    if (g.is_identity()) return A;
    const CircleDiffeo gi = invert(g, cfg);
    const QuadratureGrid grid(cfg.grid_size);

    // Pointwise-exact conjugation through jets of g (differentiating
    // projected intermediates would amplify their truncation tails k^3-fold).
    // With pv = chi(g) / g' and y = g^{-1}(x),
    //   (g* A chi)(x) = [pv'''(y) + u(y) pv'(y) + v(y) pv(y)] (1/g'(y))^2,
    // and five test densities overdetermine the four coefficients per node.
    const detail::DiffeoJet gj(g);
    const TrigPoly chi[5] = {TrigPoly(1.0), TrigPoly::harmonic_sin(1), TrigPoly::harmonic_cos(1),
                             TrigPoly::harmonic_sin(2), TrigPoly::harmonic_cos(2)};
    const detail::PolyJet chi_jets[5] = {detail::PolyJet(chi[0]), detail::PolyJet(chi[1]),
                                         detail::PolyJet(chi[2]), detail::PolyJet(chi[3]),
                                         detail::PolyJet(chi[4])};
    std::array<std::array<TrigPoly, 4>, 5> chi_derivs;
    for (int i = 0; i < 5; ++i)
        chi_derivs[static_cast<size_t>(i)] = {derivative(chi[i], 3), derivative(chi[i], 2),
                                              derivative(chi[i]), chi[i]};
    const TrigPoly uval = A.u.periodic_value();
    const TrigPoly vval = A.v();

    std::vector<double> u_samples(static_cast<size_t>(grid.size()));
    std::vector<double> v_samples(static_cast<size_t>(grid.size()));
    double bad_leading = 0.0, max_u_dev = 0.0;
    for (int j = 0; j < grid.size(); ++j) {
        const double x = grid.node(j);
        double y = gi(x);
        y -= (g(y) - x) / gj.jac(y).v;  // one Newton polish on the exact map
        const detail::Jet3 gy = gj.map(y);
        const detail::Jet3 jac = gj.jac(y);
        const double jinv = 1.0 / jac.v;
        const double push = jinv * jinv;
        const double uy = uval(y), vy = vval(y);

        std::array<std::array<double, 4>, 5> M;
        std::array<double, 5> b;
        for (int i = 0; i < 5; ++i) {
            const detail::Jet3 pv =
                compose(chi_jets[i].at(gy.v), gy) * detail::pow(jac, -1.0);
            b[static_cast<size_t>(i)] = (pv.d3 + uy * pv.d1 + vy * pv.v) * push;
            for (int d = 0; d < 4; ++d)
                M[static_cast<size_t>(i)][static_cast<size_t>(d)] =
                    chi_derivs[static_cast<size_t>(i)][static_cast<size_t>(d)](x);
        }
        const auto cfs = solve_lsq<5, 4>(M, b);
        bad_leading = std::max({bad_leading, std::abs(cfs[0] - 1.0), std::abs(cfs[1])});
        u_samples[static_cast<size_t>(j)] = cfs[2];
        v_samples[static_cast<size_t>(j)] = cfs[3];

        // closed form: u^g = (u(y) - 2 S(g)(y)) / g'(y)^2
        const double u_closed = (uy - 2.0 * gj.schwarz(y)) * push;
        max_u_dev = std::max(max_u_dev, std::abs(cfs[2] - u_closed));
    }
    const double scale = 1.0 + max_abs_coeff(uval) + max_abs_coeff(vval) +
                         10.0 * sup_norm(g.periodic_part());
    if (bad_leading > 1e4 * cfg.eps_proj * scale)
        throw ActionMismatch("third_diffeo_act: conjugation broke the leading coefficients by " +
                             fmt_sci(bad_leading));
    if (max_u_dev > 1e3 * cfg.eps_coeff * scale)
        throw ActionMismatch("third_diffeo_act: conjugation and closed form differ by " +
                             fmt_sci(max_u_dev));

    Projection pu = project_periodic(u_samples, cfg.degree_cap);
    Projection pv = project_periodic(v_samples, cfg.degree_cap);
    if (std::max(pu.residual, pv.residual) >
        cfg.eps_proj * std::max(sample_scale(u_samples), sample_scale(v_samples)))
        throw ProjectionOverflow("third_diffeo_act: projection residual");

    // w = v - u'/2 after projection; the pure-cubic transport of w (no
    // Schwarzian admixture) is exercised in the suites.
    const TrigPoly w_conj = pv.value - 0.5 * derivative(pu.value);
    return ThirdOrderOp(Density(2.0, pu.value), Density(3.0, w_conj));
}

std::pair<Density, Density> third_vect_act(const TrigPoly& X, const ThirdOrderOp& A,
                                           const Config& cfg) {
    const TrigPoly& u = A.u.periodic_value();
    const TrigPoly& w = A.w.periodic_value();
    const TrigPoly x1 = derivative(X);
    TrigPoly du = X * derivative(u) + 2.0 * (x1 * u) + 2.0 * derivative(X, 3);
    TrigPoly dw = X * derivative(w) + 3.0 * (x1 * w);

    const DiffOp comm = compose(DiffOp::lie(X, 2.0), A.as_operator()) -
                        compose(A.as_operator(), DiffOp::lie(X, -1.0));

    const double scale = (1.0 + max_abs_coeff(u) + max_abs_coeff(w)) *
                         (1.0 + max_abs_coeff(derivative(X, 3)));
    if (comm.max_coeff_above(2) > cfg.tangent_tol * scale)
        throw ActionMismatch("third_vect_act: commutator kept order >= 2 terms");
    const double mismatch =
        std::max(coeff_distance(comm.coeff(1), du),
                 coeff_distance(comm.coeff(0), dw + 0.5 * derivative(du)));
    if (mismatch > cfg.tangent_tol * scale)
        throw ActionMismatch("third_vect_act: commutator and closed form differ by " +
                             std::to_string(mismatch));
    return {Density(2.0, std::move(du)), Density(3.0, std::move(dw))};
}

AgdTangent agd_field_x(const TrigPoly& X, const ThirdOrderOp& A, const Config& cfg) {
    auto [du, dw] = third_vect_act(X, A, cfg);
    TrigPoly du_val = du.periodic_value();
    TrigPoly dv = dw.periodic_value() + 0.5 * derivative(du_val);
    return {std::move(du_val), std::move(dv)};
}

AgdTangent agd_field_z(const Density& Z, const ThirdOrderOp& A, const Config& cfg) {
    if (Z.weight() != -2.0) throw WeightMismatch("agd_field_z: Z must have weight -2");
    const TrigPoly& zval = Z.periodic_value();
    const TrigPoly& curvature = A.u.periodic_value();
    const DiffOp comm = compose(second_lie_op(zval, 2.0, curvature), A.as_operator()) -
                        compose(A.as_operator(), second_lie_op(zval, -1.0, curvature));
    const double scale = (1.0 + max_abs_coeff(A.u.periodic_value()) +
                          max_abs_coeff(A.w.periodic_value())) *
                         (1.0 + max_abs_coeff(derivative(zval, 5)));
    if (comm.max_coeff_above(2) > 1e-9 * scale)
        throw NotTangent("agd_field_z: commutator kept order >= 2 terms, " +
                         std::to_string(comm.max_coeff_above(2)));
    (void)cfg;
    return {comm.coeff(1), comm.coeff(0)};
}

SturmLiouville project_to_sturm(const ThirdOrderOp& A) { return SturmLiouville(4.0, A.u); }

}  // namespace vircoad
