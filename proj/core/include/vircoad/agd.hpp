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

#ifndef VIRCOAD_AGD_HPP
#define VIRCOAD_AGD_HPP

#include <utility>

#include "vircoad/config.hpp"
#include "vircoad/density.hpp"
#include "vircoad/diffeo.hpp"
#include "vircoad/diffop.hpp"
#include "vircoad/laurent.hpp"
#include "vircoad/sturm.hpp"
#include "vircoad/trig.hpp"

namespace vircoad {

/// Monomial density t^a (dt)^lambda in the affine chart; the carrier of the
/// homogeneous-lift correspondence tests (trig data does not lift to Laurent
/// polynomials, monomials do).
struct MonomialDensity {
    int exponent = 0;   // a
    double lambda = 0;  // weight; 2*lambda must be an integer for the lift
};

/// Homogeneous lift  t^a (dt)^lambda  |->  q^a p^{-2 lambda - a}
/// (degree -2 lambda).  Throws NonIntegerExponent unless -2 lambda - a is an
/// integer.
LaurentPoly2 lift(const MonomialDensity& phi);

/// Chart-side transvectant of monomial densities: exact rational coefficient
/// together with the resulting monomial,
///   J_m(t^a, t^c) = coeff * t^{a+c-m},  weight lambda + mu + m,
/// with the cross-paired falling-factorial coefficients
///   sum_{i+j=m} (-1)^i C(m,i) <2 mu+m-1>_i <2 lambda+m-1>_j <a>_i <c>_j.
/// The normalization is pinned by sl2-equivariance; the lift correspondence
/// measures moyal_term(lift phi, lift psi, m) = (-1)^m lift(J_m(phi, psi)).
struct MonomialTransvectant {
    Rational coeff;
    MonomialDensity result;
};
MonomialTransvectant transvectant(const MonomialDensity& phi, const MonomialDensity& psi, int m);

/// Circle-side transvectant with respect to the standard projective
/// structure, computed mode-wise in the Moebius chart w = exp(ix) so the
/// arithmetic stays polynomial and pole-free.  Acts on mode pairs by
///   e^{ikx} (x) e^{ilx}  |->  i^m T_m(k,l) e^{i(k+l)x},
///   T_m(k,l) = sum_{i+j=m} (-1)^i C(m,i) <2mu+m-1>_i <2lambda+m-1>_j
///              <k-lambda>_i <l-mu>_j.
/// Output weight lambda + mu + m.  Exact up to roundoff; equivariant under
/// the vector fields {1, sin x, cos x} d/dx.
Density transvectant(const Density& phi, const Density& psi, int m);

/// Second-order analogue of the Lie derivative along Z (dx)^{-2}:
/// the m = 2 transvectant with Z in the first slot; weight preserved.
Density second_lie(const Density& Z, const Density& phi);

/// The same operation as an explicit second-order operator on weight-mu
/// densities in the circle chart:
///   12 Z d^2 + 6(2mu+1) Z' d + (2mu(2mu+1) Z'' + 4mu(mu-1) R Z)
/// where R is the potential (in the 4 d^2 + R normalization) of the
/// projective structure the operation is covariant with respect to.  The
/// standard structure has R = 1, which reproduces the mode-wise
/// transvectant above.
DiffOp second_lie_op(const TrigPoly& Z, double mu, const TrigPoly& curvature = TrigPoly(1.0));

/// Third-order operator d^3 + u d + v stored by its decomposition
/// v = w + u'/2 with u a weight-2 and w a weight-3 density.
struct ThirdOrderOp {
    Density u;  // weight 2
    Density w;  // weight 3

    ThirdOrderOp() : u(2.0, TrigPoly()), w(3.0, TrigPoly()) {}
    ThirdOrderOp(Density u_, Density w_);

    static ThirdOrderOp from_uv(const TrigPoly& u, const TrigPoly& v);
    TrigPoly v() const;  // w + u'/2
    DiffOp as_operator() const;
};

/// Conjugation g*_2 o A o (g*_{-1})^{-1}, extracted pointwise from test
/// densities and cross-checked against the closed form
///   u |-> u o g^{-1} ((g^{-1})')^2 + 2 S(g^{-1}),   w |-> w o g^{-1} ((g^{-1})')^3.
/// Throws ActionMismatch when the routes disagree beyond 10 * eps_proj.
ThirdOrderOp third_diffeo_act(const CircleDiffeo& g, const ThirdOrderOp& A,
                              const Config& cfg = default_config());

/// Infinitesimal action: (X u' + 2X'u + 2X''', X w' + 3X'w), cross-checked
/// against the symbolic commutator with the Lie derivatives at weights 2 and
/// -1.
std::pair<Density, Density> third_vect_act(const TrigPoly& X, const ThirdOrderOp& A,
                                           const Config& cfg = default_config());

/// Hamiltonian vector fields of the two linear-functional families on the
/// space of third-order operators, returned as the tangent (du, dv).
///   kind "X" (du-pairing functionals):  the first-order commutator, equal
///   to third_vect_act rewritten in (u, v) coordinates;
///   kind "Z" (dw-pairing functionals):  the commutator with the
///   second-order operator realizing the weight-preserving transvectant
///   covariant with respect to A's own projective structure (curvature
///   R = u, the potential of project_to_sturm(A)); this self-reference is
///   what collapses the commutator to order <= 1 for every operator, and is
///   asserted (NotTangent beyond 1e-9 scale).
struct AgdTangent {
    TrigPoly du;
    TrigPoly dv;
};
AgdTangent agd_field_x(const TrigPoly& X, const ThirdOrderOp& A,
                       const Config& cfg = default_config());
AgdTangent agd_field_z(const Density& Z, const ThirdOrderOp& A,
                       const Config& cfg = default_config());

/// Forgetful equivariant projection onto Sturm-Liouville operators
/// 4 d^2/dx^2 + u; w is discarded.
SturmLiouville project_to_sturm(const ThirdOrderOp& A);

}  // namespace vircoad

#endif
