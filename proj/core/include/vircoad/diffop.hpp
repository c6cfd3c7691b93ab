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

#ifndef VIRCOAD_DIFFOP_HPP
#define VIRCOAD_DIFFOP_HPP

#include <vector>

#include "vircoad/trig.hpp"

namespace vircoad {

/// Linear differential operator sum_k c_k(x) d^k/dx^k with trigonometric
/// polynomial coefficients.  Small orders only (everything here is <= 5);
/// composition expands derivatives past coefficients by Leibniz.  This is a
/// scratch type for verifying that commutators collapse to low order, not a
/// general pseudodifferential calculus.
class DiffOp {
  public:
    DiffOp() = default;
    explicit DiffOp(std::vector<TrigPoly> coeffs_by_order) : c_(std::move(coeffs_by_order)) {
        trim();
    }

    static DiffOp multiplication(TrigPoly f);
    /// c(x) d^k/dx^k
    static DiffOp monomial(TrigPoly c, int order);
    /// Lie derivative on weight-lambda densities: X d/dx + lambda X'.
    static DiffOp lie(const TrigPoly& X, double lambda);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    /// Coefficient of d^k/dx^k (zero polynomial beyond order()).
    const TrigPoly& coeff(int k) const;

    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator-=(const DiffOp& o);
    DiffOp& operator*=(double s);

    /// Largest absolute coefficient among orders >= k.
    double max_coeff_above(int k) const;

  private:
    void trim();

    std::vector<TrigPoly> c_;  // c_[k] multiplies d^k/dx^k
};

DiffOp operator+(DiffOp a, const DiffOp& b);
DiffOp operator-(DiffOp a, const DiffOp& b);
DiffOp operator*(DiffOp a, double s);

/// Operator composition (a after b).
DiffOp compose(const DiffOp& a, const DiffOp& b);
DiffOp commutator(const DiffOp& a, const DiffOp& b);

/// Apply to a trigonometric polynomial: sum_k c_k f^(k), exact.
TrigPoly apply(const DiffOp& op, const TrigPoly& f);

}  // namespace vircoad

#endif
