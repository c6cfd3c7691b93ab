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

#ifndef VIRCOAD_VIRASORO_HPP
#define VIRCOAD_VIRASORO_HPP

#include "vircoad/config.hpp"
#include "vircoad/density.hpp"
#include "vircoad/diffeo.hpp"
#include "vircoad/trig.hpp"

namespace vircoad {

/// Element (X d/dx, alpha) of the centrally extended algebra of circle
/// vector fields.
struct VirasoroElement {
    TrigPoly X;
    double alpha = 0.0;
};

/// Regular covector (u (dx)^2, c): a weight-2 density plus central charge.
struct VirasoroCovector {
    Density u;  // weight 2, periodic
    double c = 0.0;

    VirasoroCovector() : u(2.0, TrigPoly()) {}
    VirasoroCovector(Density u_, double c_) : u(std::move(u_)), c(c_) {}
    VirasoroCovector(TrigPoly u_, double c_) : u(2.0, std::move(u_)), c(c_) {}
};

/// Which representative of the central extension's cohomology class is used:
/// the standard antisymmetrized-derivative form, or the projectively
/// invariant one (kernel containing the spanned {1, sin, cos} subalgebra).
enum class CocycleKind { standard, modified };
using SchwarzianKind = CocycleKind;

/// 2-cocycle on vector fields.
///   standard: (1/2) integral (X'Y'' - X''Y') dx
///   modified: integral (X''' + X') Y dx
/// Both exact; they differ by the coboundary integral X'Y dx.
double gf_cocycle(const TrigPoly& X, const TrigPoly& Y, CocycleKind kind);

/// Bracket [(X,alpha),(Y,beta)] = (XY' - X'Y, cocycle(X,Y)).  The central
/// coordinates never feed back.
VirasoroElement vir_bracket(const VirasoroElement& a, const VirasoroElement& b, CocycleKind kind);

/// Group-level 2-cocycle  B(f,g) = integral log((f o g)') d log(g'),
/// evaluated by trapezoid quadrature as integral log(f'(g) g') g''/g' dx.
double bott_cocycle(const CircleDiffeo& f, const CircleDiffeo& g,
                    const Config& cfg = default_config());

/// Coadjoint action on (u, c):
///   standard: (X u' + 2 X' u - c X''', 0)
///   modified: (X u' + 2 X' u - c (X''' + X'), 0)
VirasoroCovector coad(const VirasoroElement& a, const VirasoroCovector& mu, CocycleKind kind);

/// Pairing <(u,c), (Y,beta)> = integral u Y dx + c beta.
double vir_pairing(const VirasoroCovector& mu, const VirasoroElement& a);

/// Schwarzian derivative as a weight-2 density:
///   standard: f'''/f' - (3/2)(f''/f')^2
///   modified: the same plus (1/2)(f'^2 - 1)
/// Computed pointwise from the exact derivatives of f, then projected.
Density schwarzian(const CircleDiffeo& f, SchwarzianKind kind,
                   const Config& cfg = default_config());

/// Group coadjoint action written with the argument on the curved side:
///   (u o f (f')^2 - c S(f), c)
/// with the matching Schwarzian kind.  Differentiating along f = flow(X, t)
/// at t = 0 recovers coad.
VirasoroCovector group_coad(const CircleDiffeo& f, const VirasoroCovector& mu, CocycleKind kind,
                            const Config& cfg = default_config());

}  // namespace vircoad

#endif
