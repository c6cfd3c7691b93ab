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

#include "vircoad/extalg.hpp"

#include <cmath>
#include <string>

#include "vircoad/diffop.hpp"
#include "vircoad/errors.hpp"
#include "vircoad/virasoro.hpp"

namespace vircoad {

namespace {

Density rewrap(double weight, const Density& a) {
    if (a.antiperiodic()) return Density(weight, a.antiperiodic_value());
    return Density(weight, a.periodic_value());
}

using OpMat = std::array<std::array<DiffOp, 2>, 2>;

OpMat op_compose(const OpMat& A, const OpMat& B) {
    OpMat R;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            R[i][j] = compose(A[i][0], B[0][j]) + compose(A[i][1], B[1][j]);
    return R;
}

}  // namespace

MatrixSL::MatrixSL(Density u_, Density v_, std::array<double, 3> c_)
    : u(std::move(u_)), v(std::move(v_)), c(c_) {
    if (u.weight() != 2.0 || v.weight() != 1.0)
        throw WeightMismatch("MatrixSL: coefficient weights must be (2, 1)");
}

DensityPair::DensityPair(Density phi_, Density psi_)
    : phi(std::move(phi_)), psi(std::move(psi_)) {
    if (std::abs(psi.weight() - phi.weight() - 1.0) > 1e-12)
        throw WeightMismatch("DensityPair: weight gap must be exactly 1");
}

GElement g_bracket(const GElement& A, const GElement& B) {
    GElement r;
    r.X = A.X * derivative(B.X) - derivative(A.X) * B.X;
    r.a = A.X * derivative(B.a) - B.X * derivative(A.a);
    r.center = g_cocycle(A, B);
    return r;
}

std::array<double, 3> g_cocycle(const GElement& A, const GElement& B) {
    const double w0 = gf_cocycle(A.X, B.X, CocycleKind::standard);
    const double w1 = integrate_period(derivative(A.X, 2) * B.a) -
                      integrate_period(derivative(B.X, 2) * A.a);
    const double w2 = 2.0 * integrate_period(A.a * derivative(B.a));
    return {w0, w1, w2};
}

double g_jacobi_residual(const GElement& A, const GElement& B, const GElement& C) {
    const GElement t1 = g_bracket(A, g_bracket(B, C));
    const GElement t2 = g_bracket(B, g_bracket(C, A));
    const GElement t3 = g_bracket(C, g_bracket(A, B));
    double r = max_abs_coeff(t1.X + t2.X + t3.X);
    r = std::max(r, max_abs_coeff(t1.a + t2.a + t3.a));
    for (int i = 0; i < 3; ++i)
        r = std::max(r, std::abs(t1.center[static_cast<size_t>(i)] +
                                 t2.center[static_cast<size_t>(i)] +
                                 t3.center[static_cast<size_t>(i)]));
    return r;
}

double g_pairing(const MatrixSL& mu, const GElement& B) {
    double acc = integrate_period(mu.u.periodic_value() * B.X) +
                 integrate_period(mu.v.periodic_value() * B.a);
    for (int i = 0; i < 3; ++i)
        acc += mu.c[static_cast<size_t>(i)] * B.center[static_cast<size_t>(i)];
    return acc;
}

DensityPair t_action(const GElement& A, const DensityPair& p) {
    const double lambda = p.lambda();
    Density top = lie_derivative(A.X, p.phi);
    Density bottom = lie_derivative(A.X, p.psi);
    const Density coupling = Density(0.0, derivative(A.a)) * p.phi;
    bottom = bottom + lambda * rewrap(p.psi.weight(), coupling);
    return DensityPair(std::move(top), std::move(bottom));
}

std::pair<Density, Density> matrix_apply(const MatrixSL& L, const Density& phi,
                                         const Density& alpha) {
    if (phi.weight() != -0.5 || alpha.weight() != 0.5)
        throw WeightMismatch("matrix_apply: argument weights must be (-1/2, 1/2)");
    const TrigPoly& p = phi.periodic_value();
    const TrigPoly& al = alpha.periodic_value();
    TrigPoly top = -2.0 * L.c[0] * derivative(p, 2) + L.u.periodic_value() * p +
                   2.0 * L.c[1] * derivative(al) + L.v.periodic_value() * al;
    TrigPoly bottom =
        -2.0 * L.c[1] * derivative(p) + L.v.periodic_value() * p + 4.0 * L.c[2] * al;
    return {Density(1.5, std::move(top)), Density(0.5, std::move(bottom))};
}

double matrix_pairing(const std::pair<Density, Density>& image, const Density& psi,
                      const Density& beta) {
    return pairing(image.first, psi) + pairing(image.second, beta);
}

std::pair<Density, Density> matrix_coad(const GElement& A, const MatrixSL& L,
                                        const Config& cfg) {
    // Closed form.
    const TrigPoly& u = L.u.periodic_value();
    const TrigPoly& v = L.v.periodic_value();
    const TrigPoly a1 = derivative(A.a);
    TrigPoly du = A.X * derivative(u) + 2.0 * (derivative(A.X) * u) -
                  L.c[0] * derivative(A.X, 3) + v * a1 + L.c[1] * derivative(a1);
    TrigPoly dv = A.X * derivative(v) + derivative(A.X) * v - L.c[1] * derivative(A.X, 2) +
                  2.0 * L.c[2] * a1;

    // Independent route: the symbolic commutator.
    OpMat Lop;
    Lop[0][0] = DiffOp::monomial(TrigPoly(-2.0 * L.c[0]), 2) + DiffOp::multiplication(u);
    Lop[0][1] = DiffOp::monomial(TrigPoly(2.0 * L.c[1]), 1) + DiffOp::multiplication(v);
    Lop[1][0] = DiffOp::monomial(TrigPoly(-2.0 * L.c[1]), 1) + DiffOp::multiplication(v);
    Lop[1][1] = DiffOp::multiplication(TrigPoly(4.0 * L.c[2]));

    OpMat Tin;  // on F_{-1/2} + F_{1/2}
    Tin[0][0] = DiffOp::lie(A.X, -0.5);
    Tin[1][0] = DiffOp::multiplication(-0.5 * a1);
    Tin[1][1] = DiffOp::lie(A.X, 0.5);

    OpMat Tout;  // on F_{3/2} + F_{1/2}, coupling from the 1/2 slot up
    Tout[0][0] = DiffOp::lie(A.X, 1.5);
    Tout[0][1] = DiffOp::multiplication(0.5 * a1);
    Tout[1][1] = DiffOp::lie(A.X, 0.5);

    const OpMat left = op_compose(Tout, Lop);
    const OpMat right = op_compose(Lop, Tin);
    OpMat comm;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) comm[i][j] = left[i][j] - right[i][j];

    const double scale = (1.0 + max_abs_coeff(u) + max_abs_coeff(v) + std::abs(L.c[0]) +
                          std::abs(L.c[1]) + std::abs(L.c[2])) *
                         (1.0 + max_abs_coeff(derivative(A.X, 3)) +
                          max_abs_coeff(derivative(A.a, 2)));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (comm[i][j].max_coeff_above(1) > cfg.tangent_tol * scale)
                throw NotTangent("matrix_coad: commutator kept derivative terms");

    const double mismatch =
        std::max({coeff_distance(comm[0][0].coeff(0), du), coeff_distance(comm[0][1].coeff(0), dv),
                  coeff_distance(comm[1][0].coeff(0), dv), max_abs_coeff(comm[1][1].coeff(0))});
    if (mismatch > cfg.tangent_tol * scale)
        throw ActionMismatch("matrix_coad: commutator and closed form differ by " +
                             std::to_string(mismatch));

    return {Density(2.0, std::move(du)), Density(1.0, std::move(dv))};
}

double matrix_coad_duality_residual(const GElement& A, const MatrixSL& L, const GElement& B,
                                    const Config& cfg) {
    const auto d = matrix_coad(A, L, cfg);
    const MatrixSL image(d.first, d.second, {0.0, 0.0, 0.0});
    return std::abs(g_pairing(image, B) + g_pairing(L, g_bracket(A, B)));
}

SElement::SElement(GElement even_, Density phi_, Density alpha_)
    : even(std::move(even_)), phi(std::move(phi_)), alpha(std::move(alpha_)) {
    if (phi.weight() != -0.5 || alpha.weight() != 0.5)
        throw WeightMismatch("SElement: odd weights must be (-1/2, 1/2)");
    if (phi.antiperiodic() || alpha.antiperiodic())
        throw WeightMismatch("SElement: odd carriers are periodic here");
}

SElement SElement::from_even(GElement even_) {
    return SElement(std::move(even_), Density(-0.5, TrigPoly()), Density(0.5, TrigPoly()));
}

SElement SElement::from_odd(Density phi_, Density alpha_) {
    return SElement(GElement{}, std::move(phi_), std::move(alpha_));
}

SElement s_bracket(const SElement& A, const SElement& B) {
    GElement even = g_bracket(A.even, B.even);

    // odd-odd anticommutator
    const TrigPoly& pa = A.phi.periodic_value();
    const TrigPoly& pb = B.phi.periodic_value();
    const TrigPoly& aa = A.alpha.periodic_value();
    const TrigPoly& ab = B.alpha.periodic_value();
    even.X += pa * pb;
    even.a += pa * ab + aa * pb;
    even.center[0] += 2.0 * integrate_period(derivative(pa) * derivative(pb));
    even.center[1] += -2.0 * (integrate_period(derivative(pa) * ab) +
                              integrate_period(aa * derivative(pb)));
    even.center[2] += 4.0 * integrate_period(aa * ab);

    // even-odd via the module action at lambda = -1/2
    const DensityPair tb = t_action(A.even, DensityPair(B.phi, B.alpha));
    const DensityPair ta = t_action(B.even, DensityPair(A.phi, A.alpha));
    Density phi = tb.phi - ta.phi;
    Density alpha = tb.psi - ta.psi;
    return SElement(std::move(even), std::move(phi), std::move(alpha));
}

namespace {
bool s_is_odd(const SElement& A) {
    const bool has_even = !(A.even.X.is_zero() && A.even.a.is_zero() &&
                            A.even.center[0] == 0.0 && A.even.center[1] == 0.0 &&
                            A.even.center[2] == 0.0);
    const bool has_odd = !(A.phi.is_zero() && A.alpha.is_zero());
    if (has_even && has_odd)
        throw SectorMismatch("s_jacobi_residual: parity-mixed element");
    return has_odd;
}
}  // namespace

double s_jacobi_residual(const SElement& A, const SElement& B, const SElement& C) {
    const int a = s_is_odd(A) ? 1 : 0, b = s_is_odd(B) ? 1 : 0, c = s_is_odd(C) ? 1 : 0;
    auto sgn = [](int p) { return p % 2 == 0 ? 1.0 : -1.0; };
    const SElement t1 = s_bracket(A, s_bracket(B, C));
    const SElement t2 = s_bracket(B, s_bracket(C, A));
    const SElement t3 = s_bracket(C, s_bracket(A, B));
    const double s1 = sgn(a * c), s2 = sgn(a * b), s3 = sgn(b * c);

    double r = max_abs_coeff(s1 * t1.even.X + s2 * t2.even.X + s3 * t3.even.X);
    r = std::max(r, max_abs_coeff(s1 * t1.even.a + s2 * t2.even.a + s3 * t3.even.a));
    for (int i = 0; i < 3; ++i)
        r = std::max(r, std::abs(s1 * t1.even.center[static_cast<size_t>(i)] +
                                 s2 * t2.even.center[static_cast<size_t>(i)] +
                                 s3 * t3.even.center[static_cast<size_t>(i)]));
    r = std::max(r, max_abs_coeff((s1 * t1.phi + (s2 * t2.phi + s3 * t3.phi)).periodic_value()));
    r = std::max(r,
                 max_abs_coeff((s1 * t1.alpha + (s2 * t2.alpha + s3 * t3.alpha)).periodic_value()));
    return r;
}

std::pair<Density, Density> s_coad_odd(const Density& phi, const Density& alpha,
                                       const MatrixSL& mu) {
    return matrix_apply(mu, phi, alpha);
}

double s_coad_odd_duality_residual(const Density& phi_a, const Density& alpha_a,
                                   const MatrixSL& mu, const SElement& B) {
    const auto image = s_coad_odd(phi_a, alpha_a, mu);
    const double lhs = pairing(image.first, B.phi) + pairing(image.second, B.alpha);
    const SElement bracket = s_bracket(SElement::from_odd(phi_a, alpha_a), B);
    return std::abs(lhs - g_pairing(mu, bracket.even));
}

}  // namespace vircoad
