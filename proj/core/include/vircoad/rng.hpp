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

#ifndef VIRCOAD_RNG_HPP
#define VIRCOAD_RNG_HPP

#include <random>

#include "vircoad/diffeo.hpp"
#include "vircoad/trig.hpp"

namespace vircoad {

/// All randomized checks draw from this named generator so reports stay
/// reproducible given the seed.
using Rng = std::mt19937_64;

/// Random trigonometric polynomial of the given degree with i.i.d. uniform
/// coefficients damped by 1/(1+k^2), keeping derivative norms bounded.
TrigPoly random_trig(Rng& rng, int degree, double scale = 1.0);

/// Anti-periodic counterpart (modes k + 1/2, k < degree).
HalfTrigPoly random_half_trig(Rng& rng, int degree, double scale = 1.0);

/// Random circle diffeomorphism x + c + p(x) with the periodic part rescaled
/// so that max |p'| <= amp (amp < 1 keeps Newton inversion safely monotone).
CircleDiffeo random_diffeo(Rng& rng, int degree, double amp = 0.4,
                           const Config& cfg = default_config());

}  // namespace vircoad

#endif
