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

#include "vircoad/trig.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vircoad/errors.hpp"

namespace vircoad {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Complex coefficient vector over doubled frequencies t in [-tmax, tmax],
// index i <-> t = i - tmax.  c[-t] = conj(c[t]) for real functions.
struct TModes {
    int tmax = 0;
    std::vector<std::complex<double>> c;  // size 2*tmax+1

    std::complex<double>& at(int t) { return c[static_cast<size_t>(t + tmax)]; }
    std::complex<double> at(int t) const { return c[static_cast<size_t>(t + tmax)]; }
};

TModes tmodes_of(const TrigPoly& f) {
    const int n = f.degree();
    TModes m;
    m.tmax = 2 * n;
    m.c.assign(static_cast<size_t>(4 * n + 1), {0.0, 0.0});
    m.at(0) = f.a0();
    for (int k = 1; k <= n; ++k) {
        const std::complex<double> ck(0.5 * f.cos_coeff(k), -0.5 * f.sin_coeff(k));
        m.at(2 * k) = ck;
        m.at(-2 * k) = std::conj(ck);
    }
    return m;
}

TModes tmodes_of(const HalfTrigPoly& f) {
    const int n = f.size();
    TModes m;
    m.tmax = 2 * n - 1;
    if (n == 0) {
        m.tmax = 0;
        m.c.assign(1, {0.0, 0.0});
        return m;
    }
    m.c.assign(static_cast<size_t>(2 * m.tmax + 1), {0.0, 0.0});
    for (int k = 0; k < n; ++k) {
        const std::complex<double> ck(0.5 * f.cos_coeff(k), -0.5 * f.sin_coeff(k));
        m.at(2 * k + 1) = ck;
        m.at(-(2 * k + 1)) = std::conj(ck);
    }
    return m;
}

TModes convolve(const TModes& a, const TModes& b) {
    TModes r;
    r.tmax = a.tmax + b.tmax;
    r.c.assign(static_cast<size_t>(2 * r.tmax + 1), {0.0, 0.0});
    for (int s = -a.tmax; s <= a.tmax; ++s) {
        const std::complex<double> as = a.at(s);
        if (as == std::complex<double>{}) continue;
        for (int t = -b.tmax; t <= b.tmax; ++t) {
            const std::complex<double> bt = b.at(t);
            if (bt == std::complex<double>{}) continue;
            r.at(s + t) += as * bt;
        }
    }
    return r;
}

TrigPoly periodic_from_tmodes(const TModes& m) {
    const int n = m.tmax / 2;
    std::vector<double> cs(static_cast<size_t>(n), 0.0), sn(static_cast<size_t>(n), 0.0);
    for (int k = 1; k <= n; ++k) {
        const auto ck = m.at(2 * k);
        cs[static_cast<size_t>(k - 1)] = 2.0 * ck.real();
        sn[static_cast<size_t>(k - 1)] = -2.0 * ck.imag();
    }
    return TrigPoly(m.at(0).real(), std::move(cs), std::move(sn));
}

HalfTrigPoly antiperiodic_from_tmodes(const TModes& m) {
    const int n = (m.tmax + 1) / 2;
    std::vector<double> cs(static_cast<size_t>(n), 0.0), sn(static_cast<size_t>(n), 0.0);
    for (int k = 0; k < n; ++k) {
        const auto ck = m.at(2 * k + 1);
        cs[static_cast<size_t>(k)] = 2.0 * ck.real();
        sn[static_cast<size_t>(k)] = -2.0 * ck.imag();
    }
    return HalfTrigPoly(std::move(cs), std::move(sn));
}

}  // namespace

const Config& default_config() {
    static const Config cfg{};
    return cfg;
}

// ---------------------------------------------------------------- TrigPoly

TrigPoly::TrigPoly(double a0, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs)
    : a0_(a0), cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)) {
    const size_t n = std::max(cos_.size(), sin_.size());
    cos_.resize(n, 0.0);
    sin_.resize(n, 0.0);
    trim();
}

TrigPoly TrigPoly::harmonic_cos(int k, double amp) {
    if (k == 0) return TrigPoly(amp);
    std::vector<double> cs(static_cast<size_t>(k), 0.0), sn(static_cast<size_t>(k), 0.0);
    cs.back() = amp;
    return TrigPoly(0.0, std::move(cs), std::move(sn));
}

TrigPoly TrigPoly::harmonic_sin(int k, double amp) {
    if (k == 0) return TrigPoly();
    std::vector<double> cs(static_cast<size_t>(k), 0.0), sn(static_cast<size_t>(k), 0.0);
    sn.back() = amp;
    return TrigPoly(0.0, std::move(cs), std::move(sn));
}

double TrigPoly::cos_coeff(int k) const {
    if (k < 1 || k > degree()) return 0.0;
    return cos_[static_cast<size_t>(k - 1)];
}

double TrigPoly::sin_coeff(int k) const {
    if (k < 1 || k > degree()) return 0.0;
    return sin_[static_cast<size_t>(k - 1)];
}

bool TrigPoly::is_zero(double eps) const {
    if (std::abs(a0_) > eps) return false;
    for (size_t i = 0; i < cos_.size(); ++i)
        if (std::abs(cos_[i]) > eps || std::abs(sin_[i]) > eps) return false;
    return true;
}

double TrigPoly::operator()(double x) const {
    // e_k = exp(ikx) by incremental rotation; one sin/cos pair per call.
    double acc = a0_;
    const std::complex<double> w(std::cos(x), std::sin(x));
    std::complex<double> e = w;
    for (size_t i = 0; i < cos_.size(); ++i) {
        acc += cos_[i] * e.real() + sin_[i] * e.imag();
        e *= w;
    }
    return acc;
}

void TrigPoly::trim() {
    size_t n = cos_.size();
    while (n > 0 && cos_[n - 1] == 0.0 && sin_[n - 1] == 0.0) --n;
    cos_.resize(n);
    sin_.resize(n);
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& g) {
    const size_t n = std::max(cos_.size(), g.cos_.size());
    cos_.resize(n, 0.0);
    sin_.resize(n, 0.0);
    a0_ += g.a0_;
    for (size_t i = 0; i < g.cos_.size(); ++i) {
        cos_[i] += g.cos_[i];
        sin_[i] += g.sin_[i];
    }
    trim();
    return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& g) {
    const size_t n = std::max(cos_.size(), g.cos_.size());
    cos_.resize(n, 0.0);
    sin_.resize(n, 0.0);
    a0_ -= g.a0_;
    for (size_t i = 0; i < g.cos_.size(); ++i) {
        cos_[i] -= g.cos_[i];
        sin_[i] -= g.sin_[i];
    }
    trim();
    return *this;
}

TrigPoly& TrigPoly::operator*=(double s) {
    a0_ *= s;
    for (auto& v : cos_) v *= s;
    for (auto& v : sin_) v *= s;
    trim();
    return *this;
}

TrigPoly operator+(TrigPoly f, const TrigPoly& g) { return f += g; }
TrigPoly operator-(TrigPoly f, const TrigPoly& g) { return f -= g; }
TrigPoly operator*(TrigPoly f, double s) { return f *= s; }
TrigPoly operator*(double s, TrigPoly f) { return f *= s; }
TrigPoly operator-(TrigPoly f) { return f *= -1.0; }

// ------------------------------------------------------------ HalfTrigPoly

HalfTrigPoly::HalfTrigPoly(std::vector<double> cos_coeffs, std::vector<double> sin_coeffs)
    : cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)) {
    const size_t n = std::max(cos_.size(), sin_.size());
    cos_.resize(n, 0.0);
    sin_.resize(n, 0.0);
    trim();
}

HalfTrigPoly HalfTrigPoly::harmonic_cos(int k, double amp) {
    std::vector<double> cs(static_cast<size_t>(k + 1), 0.0), sn(static_cast<size_t>(k + 1), 0.0);
    cs.back() = amp;
    return HalfTrigPoly(std::move(cs), std::move(sn));
}

HalfTrigPoly HalfTrigPoly::harmonic_sin(int k, double amp) {
    std::vector<double> cs(static_cast<size_t>(k + 1), 0.0), sn(static_cast<size_t>(k + 1), 0.0);
    sn.back() = amp;
    return HalfTrigPoly(std::move(cs), std::move(sn));
}

double HalfTrigPoly::cos_coeff(int k) const {
    if (k < 0 || k >= size()) return 0.0;
    return cos_[static_cast<size_t>(k)];
}

double HalfTrigPoly::sin_coeff(int k) const {
    if (k < 0 || k >= size()) return 0.0;
    return sin_[static_cast<size_t>(k)];
}

bool HalfTrigPoly::is_zero(double eps) const {
    for (size_t i = 0; i < cos_.size(); ++i)
        if (std::abs(cos_[i]) > eps || std::abs(sin_[i]) > eps) return false;
    return true;
}

double HalfTrigPoly::operator()(double x) const {
    double acc = 0.0;
    const std::complex<double> w(std::cos(x), std::sin(x));
    std::complex<double> e(std::cos(0.5 * x), std::sin(0.5 * x));  // exp(i(k+1/2)x)
    for (size_t i = 0; i < cos_.size(); ++i) {
        acc += cos_[i] * e.real() + sin_[i] * e.imag();
        e *= w;
    }
    return acc;
}

void HalfTrigPoly::trim() {
    size_t n = cos_.size();
    while (n > 0 && cos_[n - 1] == 0.0 && sin_[n - 1] == 0.0) --n;
    cos_.resize(n);
    sin_.resize(n);
}

HalfTrigPoly& HalfTrigPoly::operator+=(const HalfTrigPoly& g) {
    const size_t n = std::max(cos_.size(), g.cos_.size());
    cos_.resize(n, 0.0);
    sin_.resize(n, 0.0);
    for (size_t i = 0; i < g.cos_.size(); ++i) {
        cos_[i] += g.cos_[i];
        sin_[i] += g.sin_[i];
    }
    trim();
    return *this;
}

HalfTrigPoly& HalfTrigPoly::operator-=(const HalfTrigPoly& g) {
    const size_t n = std::max(cos_.size(), g.cos_.size());
    cos_.resize(n, 0.0);
    sin_.resize(n, 0.0);
    for (size_t i = 0; i < g.cos_.size(); ++i) {
        cos_[i] -= g.cos_[i];
        sin_[i] -= g.sin_[i];
    }
    trim();
    return *this;
}

HalfTrigPoly& HalfTrigPoly::operator*=(double s) {
    for (auto& v : cos_) v *= s;
    for (auto& v : sin_) v *= s;
    trim();
    return *this;
}

HalfTrigPoly operator+(HalfTrigPoly f, const HalfTrigPoly& g) { return f += g; }
HalfTrigPoly operator-(HalfTrigPoly f, const HalfTrigPoly& g) { return f -= g; }
HalfTrigPoly operator*(HalfTrigPoly f, double s) { return f *= s; }
HalfTrigPoly operator*(double s, HalfTrigPoly f) { return f *= s; }
HalfTrigPoly operator-(HalfTrigPoly f) { return f *= -1.0; }

// ------------------------------------------------------------- calculus

TrigPoly derivative(const TrigPoly& f) {
    const int n = f.degree();
    std::vector<double> cs(static_cast<size_t>(n)), sn(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        cs[static_cast<size_t>(k - 1)] = k * f.sin_coeff(k);
        sn[static_cast<size_t>(k - 1)] = -k * f.cos_coeff(k);
    }
    return TrigPoly(0.0, std::move(cs), std::move(sn));
}

HalfTrigPoly derivative(const HalfTrigPoly& f) {
    const int n = f.size();
    std::vector<double> cs(static_cast<size_t>(n)), sn(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double mu = k + 0.5;
        cs[static_cast<size_t>(k)] = mu * f.sin_coeff(k);
        sn[static_cast<size_t>(k)] = -mu * f.cos_coeff(k);
    }
    return HalfTrigPoly(std::move(cs), std::move(sn));
}

TrigPoly derivative(const TrigPoly& f, int order) {
    TrigPoly g = f;
    for (int i = 0; i < order; ++i) g = derivative(g);
    return g;
}

TrigPoly operator*(const TrigPoly& f, const TrigPoly& g) {
    return periodic_from_tmodes(convolve(tmodes_of(f), tmodes_of(g)));
}

TrigPoly operator*(const HalfTrigPoly& f, const HalfTrigPoly& g) {
    if (f.size() == 0 || g.size() == 0) return TrigPoly();
    return periodic_from_tmodes(convolve(tmodes_of(f), tmodes_of(g)));
}

HalfTrigPoly operator*(const TrigPoly& f, const HalfTrigPoly& g) {
    if (g.size() == 0) return HalfTrigPoly();
    return antiperiodic_from_tmodes(convolve(tmodes_of(f), tmodes_of(g)));
}

HalfTrigPoly operator*(const HalfTrigPoly& f, const TrigPoly& g) { return g * f; }

double integrate_period(const TrigPoly& f) { return kTwoPi * f.a0(); }

double max_abs_coeff(const TrigPoly& f) {
    double m = std::abs(f.a0());
    for (int k = 1; k <= f.degree(); ++k)
        m = std::max({m, std::abs(f.cos_coeff(k)), std::abs(f.sin_coeff(k))});
    return m;
}

double max_abs_coeff(const HalfTrigPoly& f) {
    double m = 0.0;
    for (int k = 0; k < f.size(); ++k)
        m = std::max({m, std::abs(f.cos_coeff(k)), std::abs(f.sin_coeff(k))});
    return m;
}

double coeff_distance(const TrigPoly& f, const TrigPoly& g) { return max_abs_coeff(f - g); }

double coeff_distance(const HalfTrigPoly& f, const HalfTrigPoly& g) {
    return max_abs_coeff(f - g);
}

bool approx_equal(const TrigPoly& f, const TrigPoly& g, double eps) {
    return coeff_distance(f, g) <= eps;
}

double sup_norm(const TrigPoly& f) {
    const int m = 4 * (f.degree() + 1);
    double s = 0.0;
    for (int j = 0; j < m; ++j) s = std::max(s, std::abs(f(kTwoPi * j / m)));
    return s;
}

// ------------------------------------------------------------- quadrature

QuadratureGrid::QuadratureGrid(int size) : m_(size) {
    if (size < 2 || (size & (size - 1)) != 0)
        throw ConfigError("QuadratureGrid size must be a power of two >= 2");
}

double QuadratureGrid::node(int j) const { return kTwoPi * j / m_; }

double QuadratureGrid::weight() const { return kTwoPi / m_; }

double QuadratureGrid::integrate(std::span<const double> samples) const {
    double acc = 0.0;
    for (double v : samples) acc += v;
    return acc * weight();
}

Projection project_periodic(std::span<const double> samples, int degree_cap) {
    const int m = static_cast<int>(samples.size());
    const int n = std::min(degree_cap, m / 2 - 1);
    std::vector<double> cs(static_cast<size_t>(n), 0.0), sn(static_cast<size_t>(n), 0.0);
    double a0 = 0.0;
    for (int j = 0; j < m; ++j) a0 += samples[static_cast<size_t>(j)];
    a0 /= m;
    for (int k = 1; k <= n; ++k) {
        // exp(ik x_j) walked incrementally around the circle
        const double step = kTwoPi * k / m;
        const std::complex<double> w(std::cos(step), std::sin(step));
        std::complex<double> e(1.0, 0.0);
        double ak = 0.0, bk = 0.0;
        for (int j = 0; j < m; ++j) {
            ak += samples[static_cast<size_t>(j)] * e.real();
            bk += samples[static_cast<size_t>(j)] * e.imag();
            e *= w;
        }
        cs[static_cast<size_t>(k - 1)] = 2.0 * ak / m;
        sn[static_cast<size_t>(k - 1)] = 2.0 * bk / m;
    }
    Projection p{TrigPoly(a0, std::move(cs), std::move(sn)), 0.0};
    for (int j = 0; j < m; ++j) {
        const double r = std::abs(samples[static_cast<size_t>(j)] - p.value(kTwoPi * j / m));
        p.residual = std::max(p.residual, r);
    }
    return p;
}

double sample_scale(std::span<const double> samples) {
    double s = 1.0;
    for (double v : samples) s = std::max(s, std::abs(v));
    return s;
}

TrigPoly trim_below(const TrigPoly& f, double threshold) {
    const int n = f.degree();
    std::vector<double> cs(static_cast<size_t>(n)), sn(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const double c = f.cos_coeff(k), s = f.sin_coeff(k);
        cs[static_cast<size_t>(k - 1)] = std::abs(c) < threshold ? 0.0 : c;
        sn[static_cast<size_t>(k - 1)] = std::abs(s) < threshold ? 0.0 : s;
    }
    return TrigPoly(std::abs(f.a0()) < threshold ? 0.0 : f.a0(), std::move(cs), std::move(sn));
}

std::vector<std::pair<int, std::complex<double>>> to_modes(const TrigPoly& f) {
    std::vector<std::pair<int, std::complex<double>>> out;
    out.emplace_back(0, std::complex<double>(f.a0(), 0.0));
    for (int k = 1; k <= f.degree(); ++k) {
        const std::complex<double> ck(0.5 * f.cos_coeff(k), -0.5 * f.sin_coeff(k));
        out.emplace_back(2 * k, ck);
        out.emplace_back(-2 * k, std::conj(ck));
    }
    return out;
}

std::vector<std::pair<int, std::complex<double>>> to_modes(const HalfTrigPoly& f) {
    std::vector<std::pair<int, std::complex<double>>> out;
    for (int k = 0; k < f.size(); ++k) {
        const std::complex<double> ck(0.5 * f.cos_coeff(k), -0.5 * f.sin_coeff(k));
        out.emplace_back(2 * k + 1, ck);
        out.emplace_back(-(2 * k + 1), std::conj(ck));
    }
    return out;
}

}  // namespace vircoad
