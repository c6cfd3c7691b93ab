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

#ifndef VIRCOAD_CONFIG_HPP
#define VIRCOAD_CONFIG_HPP

namespace vircoad {

/// Numerical knobs shared by every inexact operation.
///
/// All values produced by this library are band-limited trigonometric
/// polynomials; derivatives, products and circle integrals are exact.  The
/// only approximation happens when a grid-sampled function (a composition,
/// an inverse, a Schwarzian, a fractional Jacobian power) is projected back
/// onto a polynomial of degree <= degree_cap.  The projection residual is
/// measured on the sampling grid and checked against eps_proj.
struct Config {
    /// Max Fourier mode kept by projected function data.  Transported
    /// densities pick up slowly decaying tails (derivatives amplify the
    /// mid-range modes and narrow analyticity strips flatten the decay), so
    /// the cap is sized to push the genuinely lost mass below eps_proj for
    /// the perturbation sizes the tests draw (|p'| up to 0.5 after
    /// composition).
    int degree_cap = 160;
    int grid_size = 512;  ///< uniform sampling grid, power of two
    /// Circle maps (compositions, inverses, flows) are resolved close to the
    /// grid's Nyquist mode so their derivative-amplified coefficient tails
    /// stay at roundoff when maps are nested inside transports.
    int map_degree_cap = 255;
    double eps_coeff = 1e-12;  ///< coefficientwise equality tolerance
    /// Admissible projection residual, relative to the sup norm of the
    /// sampled data (max(1, sup |samples|) scaling).
    double eps_proj = 1e-9;
    int flow_steps = 1024;      ///< RK4 steps for vector-field flows
    int ode_steps = 4096;       ///< RK4 steps for fundamental solutions
    double wronskian_tol = 1e-8;
    int newton_max_iter = 60;
    double newton_tol = 1e-13;
    double tangent_tol = 1e-10;      ///< residual allowed on operator commutators
    double periodicity_tol = 1e-6;   ///< closure tolerance for solution-built fields
    double lift_round_guard = 1e-9;  ///< guard when flooring the solution winding
    double trace_class_tol = 1e-9;   ///< |trace| - 2 window counted as parabolic
};

/// The shared default configuration (immutable).
const Config& default_config();

}  // namespace vircoad

#endif
