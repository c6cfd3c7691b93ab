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

// Test-only oracles, independent of the library's coefficient-level
// shortcuts: plain trapezoid quadrature on a fine grid and central finite
// differences.  Expected values asserted in the tests were produced by
// these.

#ifndef VIRCOAD_TEST_ORACLES_HPP
#define VIRCOAD_TEST_ORACLES_HPP

#include <cmath>
#include <functional>
#include <numbers>

namespace oracles {

inline double quad(const std::function<double(double)>& f, int n = 1 << 15) {
    const double h = 2.0 * std::numbers::pi / n;
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += f(h * j);
    return acc * h;
}

inline double diff(const std::function<double(double)>& f, double x, double h = 1e-5) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace oracles

#endif
