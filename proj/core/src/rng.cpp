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

#include "vircoad/rng.hpp"

#include <cmath>
#include <vector>

namespace vircoad {

TrigPoly random_trig(Rng& rng, int degree, double scale) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> cs(static_cast<size_t>(degree)), sn(static_cast<size_t>(degree));
    const double a0 = scale * u(rng);
    for (int k = 1; k <= degree; ++k) {
        const double damp = scale / (1.0 + k * k);
        cs[static_cast<size_t>(k - 1)] = damp * u(rng);
        sn[static_cast<size_t>(k - 1)] = damp * u(rng);
    }
    return TrigPoly(a0, std::move(cs), std::move(sn));
}

HalfTrigPoly random_half_trig(Rng& rng, int degree, double scale) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> cs(static_cast<size_t>(degree)), sn(static_cast<size_t>(degree));
    for (int k = 0; k < degree; ++k) {
        const double mode = k + 0.5;
        const double damp = scale / (1.0 + mode * mode);
        cs[static_cast<size_t>(k)] = damp * u(rng);
        sn[static_cast<size_t>(k)] = damp * u(rng);
    }
    return HalfTrigPoly(std::move(cs), std::move(sn));
}

CircleDiffeo random_diffeo(Rng& rng, int degree, double amp, const Config& cfg) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    TrigPoly p = random_trig(rng, degree, 1.0);
    p -= TrigPoly(p.a0());
    const double norm = sup_norm(derivative(p));
    if (norm > 0.0) p *= amp / norm;
    return CircleDiffeo(u(rng), std::move(p), cfg);
}

}  // namespace vircoad
