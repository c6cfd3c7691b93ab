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

#ifndef VIRCOAD_ERRORS_HPP
#define VIRCOAD_ERRORS_HPP

#include <cstdio>
#include <stdexcept>
#include <string>

namespace vircoad {

/// Scientific-notation formatting for residuals in error messages.
inline std::string fmt_sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A grid-sampled quantity could not be represented by a trigonometric
/// polynomial of the configured degree within eps_proj.
struct ProjectionOverflow : Error {
    using Error::Error;
};

/// Pointwise Newton solve for a diffeomorphism inverse failed to converge.
struct NewtonDivergence : Error {
    using Error::Error;
};

/// Attempt to build a circle map with f' <= 0 somewhere.
struct NotOrientationPreserving : Error {
    using Error::Error;
};

/// Pairing of densities whose weights do not sum to 1, or mismatched
/// periodicity classes.
struct WeightMismatch : Error {
    using Error::Error;
};

/// Super-algebra operation mixing Ramond and Neveu-Schwarz elements.
struct SectorMismatch : Error {
    using Error::Error;
};

/// An operator commutator expected to be of low differential order kept
/// higher-order coefficients above tolerance.
struct NotTangent : Error {
    using Error::Error;
};

/// A quantity guaranteed periodic by theory failed to close up over one
/// period (e.g. a deformation that does not preserve the monodromy).
struct NotPeriodic : Error {
    using Error::Error;
};

/// Conjugating a Sturm-Liouville operator left a first-derivative term.
struct NotSturmLiouville : Error {
    using Error::Error;
};

/// Two independent computations of the same action disagreed.
struct ActionMismatch : Error {
    using Error::Error;
};

/// ODE integration accuracy guard tripped (Wronskian drift too large).
struct StepCountTooSmall : Error {
    using Error::Error;
};

/// Homogeneous lift of a density whose exponent data is not integral.
struct NonIntegerExponent : Error {
    using Error::Error;
};

/// Invalid suite configuration (unknown suite name, nonpositive tolerance).
struct ConfigError : Error {
    using Error::Error;
};

/// Malformed JSON input on the CLI surface.
struct ParseError : Error {
    using Error::Error;
};

/// Operation outside the supported domain (e.g. diffeomorphism transport of
/// an anti-periodic density).
struct Unsupported : Error {
    using Error::Error;
};

}  // namespace vircoad

#endif
