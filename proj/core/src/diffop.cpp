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

#include "vircoad/diffop.hpp"

#include <algorithm>

namespace vircoad {

namespace {
const TrigPoly kZero{};

// Binomial coefficients up to the orders used here.
double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
}  // namespace

DiffOp DiffOp::multiplication(TrigPoly f) { return DiffOp({std::move(f)}); }

DiffOp DiffOp::monomial(TrigPoly c, int order) {
    std::vector<TrigPoly> v(static_cast<size_t>(order + 1));
    v.back() = std::move(c);
    return DiffOp(std::move(v));
}

DiffOp DiffOp::lie(const TrigPoly& X, double lambda) {
    return DiffOp({lambda * derivative(X), X});
}

const TrigPoly& DiffOp::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(k)];
}

void DiffOp::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

DiffOp& DiffOp::operator*=(double s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

double DiffOp::max_coeff_above(int k) const {
    double m = 0.0;
    for (int j = std::max(k, 0); j <= order(); ++j) m = std::max(m, max_abs_coeff(coeff(j)));
    return m;
}

DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
DiffOp operator*(DiffOp a, double s) { return a *= s; }

DiffOp compose(const DiffOp& a, const DiffOp& b) {
    // d^n o (c .) = sum_k C(n,k) c^(k) d^(n-k)
    if (a.order() < 0 || b.order() < 0) return DiffOp();
    std::vector<TrigPoly> out(static_cast<size_t>(a.order() + b.order() + 1));
    for (int n = 0; n <= a.order(); ++n) {
        if (a.coeff(n).is_zero()) continue;
        for (int m = 0; m <= b.order(); ++m) {
            if (b.coeff(m).is_zero()) continue;
            TrigPoly bc = b.coeff(m);
            for (int k = 0; k <= n; ++k) {
                out[static_cast<size_t>(n - k + m)] += binom(n, k) * (a.coeff(n) * bc);
                if (k < n) bc = derivative(bc);
            }
        }
    }
    return DiffOp(std::move(out));
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return compose(a, b) - compose(b, a); }

TrigPoly apply(const DiffOp& op, const TrigPoly& f) {
    TrigPoly out;
    TrigPoly d = f;
    for (int k = 0; k <= op.order(); ++k) {
        out += op.coeff(k) * d;
        if (k < op.order()) d = derivative(d);
    }
    return out;
}

}  // namespace vircoad
