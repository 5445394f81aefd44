// Copyright 2026 The dayan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <random>

#include "dayan/interpolation.hpp"

namespace dayan::test {

/// |a - b| scaled by the larger magnitude (floored at 1 so values near
/// zero compare absolutely).
inline double rel_err(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
    return std::mt19937_64{seed};
}

/// Calendrically plausible random piece: qi lengths of a few days to a
/// month, deviations of a few du either way.
inline QiPiece random_piece(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> len(5.0, 30.0);
    std::uniform_real_distribution<double> dev(-3.0, 3.0);
    return QiPiece{len(rng), len(rng), dev(rng), dev(rng)};
}

// --------------------------------------------------------------------------
// Independent oracles. These deliberately avoid the library's algebra.
// --------------------------------------------------------------------------

/// Newton divided-difference form of the quadratic through three points;
/// cross-checks lagrange_quadratic by a different construction.
inline double newton_quadratic(double x0, double y0, double x1, double y1,
                               double x2, double y2, double x) {
    const double f01 = (y1 - y0) / (x1 - x0);
    const double f12 = (y2 - y1) / (x2 - x1);
    const double f012 = (f12 - f01) / (x2 - x0);
    return y0 + f01 * (x - x0) + f012 * (x - x0) * (x - x1);
}

/// Central finite difference of a callable.
template <class F>
double central_difference(F&& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Composite-midpoint quadrature of a callable; independent check that a
/// fitted speed line reproduces the per-qi deviations it was fitted to.
template <class F>
double midpoint_quadrature(F&& f, double a, double b, int panels = 4096) {
    const double h = (b - a) / panels;
    double sum = 0.0;
    for (int i = 0; i < panels; ++i) {
        sum += f(a + (i + 0.5) * h);
    }
    return sum * h;
}

}  // namespace dayan::test
