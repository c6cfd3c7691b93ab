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

#ifndef VIRCOAD_TRIG_HPP
#define VIRCOAD_TRIG_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "vircoad/config.hpp"

namespace vircoad {

/// Real trigonometric polynomial on the circle,
///
///   f(x) = a0 + sum_{k=1..N} (a_k cos kx + b_k sin kx).
///
/// Values are immutable after construction.  Trailing zero coefficient pairs
/// are trimmed, so degree() reflects the highest mode actually present.
class TrigPoly {
  public:
    TrigPoly() = default;
    explicit TrigPoly(double constant) : a0_(constant) {}
    TrigPoly(double a0, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs);

    /// amp*cos(kx) resp. amp*sin(kx); k = 0 gives the constant amp (cos) or 0 (sin).
    static TrigPoly harmonic_cos(int k, double amp = 1.0);
    static TrigPoly harmonic_sin(int k, double amp = 1.0);

    int degree() const { return static_cast<int>(cos_.size()); }
    double a0() const { return a0_; }
    /// k >= 1; returns 0 beyond degree().
    double cos_coeff(int k) const;
    double sin_coeff(int k) const;

    bool is_zero(double eps = 0.0) const;

    double operator()(double x) const;

    TrigPoly& operator+=(const TrigPoly& g);
    TrigPoly& operator-=(const TrigPoly& g);
    TrigPoly& operator*=(double s);

  private:
    void trim();

    double a0_ = 0.0;
    std::vector<double> cos_, sin_;
};

TrigPoly operator+(TrigPoly f, const TrigPoly& g);
TrigPoly operator-(TrigPoly f, const TrigPoly& g);
TrigPoly operator*(TrigPoly f, double s);
TrigPoly operator*(double s, TrigPoly f);
TrigPoly operator-(TrigPoly f);

/// Anti-periodic trigonometric polynomial,
///
///   f(x) = sum_{k=0..N-1} (c_k cos((k+1/2)x) + s_k sin((k+1/2)x)),
///
/// so f(x + 2pi) = -f(x).  Products of two of these close up to a TrigPoly.
class HalfTrigPoly {
  public:
    HalfTrigPoly() = default;
    HalfTrigPoly(std::vector<double> cos_coeffs, std::vector<double> sin_coeffs);

    /// amp*cos((k+1/2)x) resp. amp*sin((k+1/2)x), k >= 0.
    static HalfTrigPoly harmonic_cos(int k, double amp = 1.0);
    static HalfTrigPoly harmonic_sin(int k, double amp = 1.0);

    /// Number of half-integer modes stored; the top mode is size()-1+1/2.
    int size() const { return static_cast<int>(cos_.size()); }
    double cos_coeff(int k) const;  // mode k + 1/2
    double sin_coeff(int k) const;

    bool is_zero(double eps = 0.0) const;

    double operator()(double x) const;

    HalfTrigPoly& operator+=(const HalfTrigPoly& g);
    HalfTrigPoly& operator-=(const HalfTrigPoly& g);
    HalfTrigPoly& operator*=(double s);

  private:
    void trim();

    std::vector<double> cos_, sin_;
};

HalfTrigPoly operator+(HalfTrigPoly f, const HalfTrigPoly& g);
HalfTrigPoly operator-(HalfTrigPoly f, const HalfTrigPoly& g);
HalfTrigPoly operator*(HalfTrigPoly f, double s);
HalfTrigPoly operator*(double s, HalfTrigPoly f);
HalfTrigPoly operator-(HalfTrigPoly f);

/// Exact term-by-term differentiation.
TrigPoly derivative(const TrigPoly& f);
HalfTrigPoly derivative(const HalfTrigPoly& f);
TrigPoly derivative(const TrigPoly& f, int order);

/// Exact products via mode convolution.  Degrees add.
TrigPoly operator*(const TrigPoly& f, const TrigPoly& g);
TrigPoly operator*(const HalfTrigPoly& f, const HalfTrigPoly& g);
HalfTrigPoly operator*(const TrigPoly& f, const HalfTrigPoly& g);
HalfTrigPoly operator*(const HalfTrigPoly& f, const TrigPoly& g);

/// Integral over one period; equals 2*pi*a0 exactly.
double integrate_period(const TrigPoly& f);

/// Largest absolute coefficient (a0 included).
double max_abs_coeff(const TrigPoly& f);
double max_abs_coeff(const HalfTrigPoly& f);

/// Coefficientwise distance, max norm; operands may have different degrees.
double coeff_distance(const TrigPoly& f, const TrigPoly& g);
double coeff_distance(const HalfTrigPoly& f, const HalfTrigPoly& g);

bool approx_equal(const TrigPoly& f, const TrigPoly& g, double eps);

/// Sup-norm estimate by sampling 4*(degree+1) uniform points.
double sup_norm(const TrigPoly& f);

/// Uniform sampling grid x_j = 2*pi*j/M with trapezoid weights 2*pi/M.
/// The trapezoid rule on this grid integrates any TrigPoly of degree < M/2
/// exactly (to roundoff), which is what makes projections exact on
/// band-limited data.
class QuadratureGrid {
  public:
    explicit QuadratureGrid(int size);

    int size() const { return m_; }
    double node(int j) const;
    double weight() const;

    /// Trapezoid integral of sampled values.
    double integrate(std::span<const double> samples) const;

  private:
    int m_;
};

/// Fourier analysis of uniform samples, truncated at degree_cap modes.
/// residual is the max pointwise mismatch between the samples and the
/// projected polynomial on the sampling grid.
struct Projection {
    TrigPoly value;
    double residual = 0.0;
};
Projection project_periodic(std::span<const double> samples, int degree_cap);

/// max(1, sup |samples|): the scale projection guards are measured against.
double sample_scale(std::span<const double> samples);

/// Zeroes coefficients with |value| < threshold.  Projected data carries a
/// roundoff floor across all modes; trimming it matters before high-order
/// differentiation, which amplifies mode k by k^order.
TrigPoly trim_below(const TrigPoly& f, double threshold);

/// Complex mode view over doubled frequencies: entry t of the returned map
/// holds the coefficient of exp(i*(t/2)*x).  TrigPoly occupies even t,
/// HalfTrigPoly odd t.  Used by the mode-wise bilinear operations.
std::vector<std::pair<int, std::complex<double>>> to_modes(const TrigPoly& f);
std::vector<std::pair<int, std::complex<double>>> to_modes(const HalfTrigPoly& f);

}  // namespace vircoad

#endif
