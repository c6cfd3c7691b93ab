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

#ifndef VIRCOAD_STURM_HPP
#define VIRCOAD_STURM_HPP

#include <array>
#include <vector>

#include "vircoad/config.hpp"
#include "vircoad/density.hpp"
#include "vircoad/diffeo.hpp"
#include "vircoad/virasoro.hpp"

namespace vircoad {

/// Second-order operator  a d^2/dx^2 + u(x)  acting from -1/2-densities to
/// 3/2-densities.  Under the covector identification a = -2c.  The solution
/// ODE used throughout is  a psi'' + u psi = 0.
struct SturmLiouville {
    double a = 0.0;
    Density u;  // weight 2, periodic

    SturmLiouville() : u(2.0, TrigPoly()) {}
    SturmLiouville(double a_, Density u_) : a(a_), u(std::move(u_)) {}
    SturmLiouville(double a_, TrigPoly u_) : a(a_), u(2.0, std::move(u_)) {}
};

/// (u, c) |-> -2c d^2/dx^2 + u.  Bijective onto operators with a = -2c.
SturmLiouville sl_from_covector(const VirasoroCovector& mu);
VirasoroCovector covector_from_sl(const SturmLiouville& L);

/// (u, c) |-> -2c d^2/dx^2 + u + c/2, the shifted realization whose
/// coordinate change intertwines the standard and projectively invariant
/// actions (shifting the potential by c/2 turns one transformation law into
/// the other; see the energy-shift tests).
SturmLiouville energy_shift(const VirasoroCovector& mu);

/// 2x2 fundamental solution path of a psi'' + u psi = 0 on [0, 2pi]:
/// T(x_j) propagates (psi, psi') from 0 to x_j = 2pi j / steps, columns are
/// the basis solutions with (1,0) and (0,1) initial frames.  det T = 1 up to
/// integration drift, which is recorded.
struct FundamentalPath {
    int steps = 0;
    std::vector<std::array<double, 4>> T;  // row-major [psi1 psi2; psi1' psi2'] per node
    double wronskian_drift = 0.0;

    const std::array<double, 4>& monodromy() const { return T.back(); }
};

/// Fixed-step RK4 integration of the first-order system.  Throws
/// StepCountTooSmall if the Wronskian drift exceeds cfg.wronskian_tol.
FundamentalPath fundamental_path(const SturmLiouville& L, int steps,
                                 const Config& cfg = default_config());

enum class MonodromyClass { elliptic, parabolic, hyperbolic };

/// Conjugacy data of the lifted monodromy: the trace, the winding of the
/// solution phase, and the trace class.  For elliptic classes the winding
/// index equals the zero count over one period of the solution vanishing at
/// the base point; for classes with real eigendirections that count depends
/// on the base point by +-1 and the invariant is the winding rounded to the
/// parity fixed by the trace sign.
struct MonodromyInvariant {
    double trace = 0.0;
    long lift_index = 0;
    MonodromyClass cls = MonodromyClass::parabolic;
};

/// Extracts the invariant from a fundamental path.  The phase
/// atan2(psi, psi') of the second basis solution is unwrapped continuously;
/// if any step rotates it by pi/2 or more the caller must integrate with
/// more steps (reported via StepCountTooSmall).
MonodromyInvariant monodromy_invariant(const FundamentalPath& path,
                                       const Config& cfg = default_config());

/// Convenience: integrate then classify, doubling the step count until the
/// phase guard is satisfied.
MonodromyInvariant monodromy_invariant(const SturmLiouville& L, int steps,
                                       const Config& cfg = default_config());

/// Conjugation of L by the density actions at weights 3/2 and -1/2.  The
/// result is again of Sturm-Liouville shape; a surviving first-derivative
/// term above tolerance throws NotSturmLiouville.  The closed form of the
/// transported potential is  u o g^{-1} ((g^{-1})')^2 + (a/2) S(g^{-1}).
SturmLiouville sl_diffeo_act(const CircleDiffeo& g, const SturmLiouville& L,
                             const Config& cfg = default_config());

/// Infinitesimal action: the commutator of L with the Lie derivatives at
/// weights 3/2 and -1/2 collapses to multiplication by a weight-2 density,
///   X u' + 2 X' u + (a/2) X'''  (= X u' + 2 X' u - c X''' at a = -2c).
/// Computed symbolically; higher-order coefficients above cfg.tangent_tol
/// throw NotTangent.
Density sl_vect_act(const TrigPoly& X, const SturmLiouville& L,
                    const Config& cfg = default_config());

/// Solves the deformation equation  X u' + 2 X' u + (a/2) X''' = u_dot
/// for the field X built from basis solutions:  X = psi1 psidot2 - psi2 psidot1
/// where the variational solutions psidot_i solve a psidot'' + u psidot = -u_dot psi_i
/// with initial frames chosen so the monodromy matrix is stationary.  If the
/// perturbation does not preserve the monodromy no periodic choice exists and
/// the closure check fails with NotPeriodic.
TrigPoly homotopy_field(const SturmLiouville& L, const Density& u_dot, int steps,
                        const Config& cfg = default_config());

/// Products of normalized solutions psi1^2, psi1 psi2, psi2^2 as vector
/// field coefficients (solutions are -1/2-densities, so products are
/// fields).  Requires the products to close up over the period; otherwise
/// NotPeriodic.
std::array<TrigPoly, 3> projective_sl2_triple(const SturmLiouville& L, int steps,
                                              const Config& cfg = default_config());

}  // namespace vircoad

#endif
