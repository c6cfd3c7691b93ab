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

#ifndef VIRCOAD_EXTALG_HPP
#define VIRCOAD_EXTALG_HPP

#include <array>
#include <utility>

#include "vircoad/config.hpp"
#include "vircoad/density.hpp"
#include "vircoad/trig.hpp"

namespace vircoad {

/// First-order operator X(x) d/dx + a(x) with three central coordinates.
struct GElement {
    TrigPoly X;
    TrigPoly a;
    std::array<double, 3> center{0.0, 0.0, 0.0};
};

/// Matrix analogue of a Sturm-Liouville operator, stored by its coefficient
/// data: [[-2c1 d^2 + u, 2c2 d + v], [-2c2 d + v, 4c3]] acting from
/// F_{-1/2} + F_{1/2} to F_{3/2} + F_{1/2} (the unique weight choice making
/// it self-adjoint).  Doubles as the regular covector (u, v, c) of the
/// extended algebra.
struct MatrixSL {
    Density u;  // weight 2
    Density v;  // weight 1
    std::array<double, 3> c{0.0, 0.0, 0.0};

    MatrixSL() : u(2.0, TrigPoly()), v(1.0, TrigPoly()) {}
    MatrixSL(Density u_, Density v_, std::array<double, 3> c_);
    MatrixSL(TrigPoly u_, TrigPoly v_, std::array<double, 3> c_)
        : u(2.0, std::move(u_)), v(1.0, std::move(v_)), c(c_) {}
};

/// Pair (phi, psi) in F_lambda + F_{lambda+1}; the weight gap is fixed at 1.
struct DensityPair {
    Density phi;
    Density psi;

    DensityPair(Density phi_, Density psi_);
    double lambda() const { return phi.weight(); }
};

/// Bracket of the universal central extension:
///   [(X,a), (Y,b)] = (XY' - X'Y, Xb' - Ya',
///                     (omega(X,Y), int (X''b - Y''a), 2 int a b'))
/// with omega the standard vector-field cocycle.  Central coordinates never
/// feed back.
GElement g_bracket(const GElement& A, const GElement& B);

/// The three central values alone.
std::array<double, 3> g_cocycle(const GElement& A, const GElement& B);

/// Jacobi residual (max coefficient norm over all five slots).
double g_jacobi_residual(const GElement& A, const GElement& B, const GElement& C);

/// <(u,v,c), (Y,b,beta)> = int uY + int vb + c . beta.
double g_pairing(const MatrixSL& mu, const GElement& B);

/// Module action on F_lambda + F_{lambda+1}:
///   T_A (phi, psi) = (L_X phi, L_X psi + lambda a' phi).
/// The coupling sign is pinned jointly by the duality identity with
/// g_bracket and the graded Jacobi identity of the superalgebra below; the
/// suites exercise both.
DensityPair t_action(const GElement& A, const DensityPair& p);

/// The matrix operator applied to (phi, alpha) in F_{-1/2} + F_{1/2}:
///   ( -2c1 phi'' + u phi + 2c2 alpha' + v alpha,
///     -2c2 phi'  + v phi + 4c3 alpha ).
std::pair<Density, Density> matrix_apply(const MatrixSL& L, const Density& phi,
                                         const Density& alpha);

/// <L (phi,alpha), (psi,beta)> with the weight-complementary pairing on each
/// slot; self-adjointness means this is symmetric in the two pairs.
double matrix_pairing(const std::pair<Density, Density>& image, const Density& psi,
                      const Density& beta);

/// Coadjoint action on the matrix operator's coefficients, computed two
/// independent ways: (i) the operator commutator T^{(1/2)} L - L T^{(-1/2)}
/// on symbolic coefficients, (ii) the closed form
///   du = X u' + 2X'u - c1 X''' + v a' + c2 a''
///   dv = X v' +  X'v - c2 X''  + 2 c3 a'.
/// Returns (ii); throws ActionMismatch if the routes disagree and NotTangent
/// if the commutator keeps derivative-order terms.
std::pair<Density, Density> matrix_coad(const GElement& A, const MatrixSL& L,
                                        const Config& cfg = default_config());

/// Theorem-level duality residual  <matrix_coad(A,L), B> + <L, [A,B]>.
double matrix_coad_duality_residual(const GElement& A, const MatrixSL& L, const GElement& B,
                                    const Config& cfg = default_config());

/// Element of the generalized Neveu-Schwarz superalgebra: even part the
/// extended algebra, odd part (phi, alpha) in F_{-1/2} + F_{1/2}, all
/// periodic.
struct SElement {
    GElement even;
    Density phi;    // weight -1/2
    Density alpha;  // weight 1/2

    SElement(GElement even_, Density phi_, Density alpha_);
    static SElement from_even(GElement even_);
    static SElement from_odd(Density phi_, Density alpha_);
};

/// Full super-bracket: even-even via g_bracket, even-odd via t_action at
/// lambda = -1/2, odd-odd the anticommutator
///   ((phi psi) d/dx, phi beta + alpha psi,
///    (2 int phi'psi', -2 int (phi'beta + alpha psi'), 4 int alpha beta)).
SElement s_bracket(const SElement& A, const SElement& B);

double s_jacobi_residual(const SElement& A, const SElement& B, const SElement& C);

/// Coadjoint action of an odd element on (u, v, c, 0, 0): exactly the
/// matrix operator applied to (phi, alpha).
std::pair<Density, Density> s_coad_odd(const Density& phi, const Density& alpha,
                                       const MatrixSL& mu);

/// Duality residual for odd A = (phi_a, alpha_a) against odd B, with the
/// graded sign:  <s_coad_odd(A, mu), B_odd> - <mu, [A, B]>.
double s_coad_odd_duality_residual(const Density& phi_a, const Density& alpha_a,
                                   const MatrixSL& mu, const SElement& B);

}  // namespace vircoad

#endif
