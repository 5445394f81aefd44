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

namespace dayan {

/**
 * Parameters of one interpolation piece spanning two consecutive qi.
 *
 * A qi is one of the 24 divisions of a tropical year in Chinese
 * calendrical astronomy. n1 and n2 are the lengths in days of two
 * consecutive qi; d1 and d2 are the observed deviations, in du, of the
 * true sun from the mean sun accumulated over each qi. One du is
 * 360deg/365.25, roughly the mean daily solar motion.
 *
 * The interpolant built from a piece lives on the first qi (local time
 * x in [0, n1)); the second qi only contributes curvature information.
 */
struct QiPiece {
    double n1;  ///< length of the first qi, days (> 0)
    double n2;  ///< length of the second qi, days (> 0)
    double d1;  ///< deviation over the first qi, du
    double d2;  ///< deviation over the second qi, du
};

/// p(x) = a0 + a1*x + a2*x^2 with x in days and p in du.
struct QuadraticPoly {
    double a0 = 0.0;
    double a1 = 0.0;
    double a2 = 0.0;

    double operator()(double x) const { return a0 + (a1 + a2 * x) * x; }
    double derivative(double x) const { return a1 + 2.0 * a2 * x; }
};

/// Daily solar speed modelled as a straight line v(t) = a + d*t.
struct SpeedLine {
    double a;  ///< initial speed, du/day
    double d;  ///< speed gradient, du/day^2
};

/// Whether evaluation enforces the historical half-open domain [0, n1).
enum class EvalDomain { permissive, strict };

/// How the speed-line construction turns speeds into accumulated deviation.
enum class SumMode { continuous, discrete };

/// Result of construct_from_speed_line: the fitted speed line and the
/// accumulated-deviation polynomial it induces.
struct SpeedLineFit {
    SpeedLine line;
    QuadraticPoly poly;
};

/// Throws validation_error unless n1, n2 > 0 and all fields are finite.
void validate(const QiPiece& piece);

/**
 * Second difference of a piece:
 *
 *   dd = (2*n1*n2 / (n1 + n2)) * (d1/n1 - d2/n2)
 *
 * For equal qi lengths (n1 == n2) this reduces to d1 - d2, the form used
 * in Liu Zhuo's Huangji li (600 AD).
 */
double second_difference(const QiPiece& piece);

/**
 * The unequal-interval quadratic interpolant of Yi-xing's Dayan li
 * (724 AD), evaluated at local time x days after the start of the first
 * qi:
 *
 *   f(x) = (x/n1)*d1 + (1 - x/n1) * (x/(2*n2)) * dd
 *
 * with dd = second_difference(piece). Interpolates (0, 0), (n1, d1),
 * (n1+n2, d1+d2). The historical domain is 0 <= x < n1; permissive mode
 * (the default) accepts any finite x so the node identities at x = n1
 * and x = n1 + n2 can be checked directly.
 */
double eval_dayan(const QiPiece& piece, double x,
                  EvalDomain domain = EvalDomain::permissive);

/// Equal-interval special case (Huangji li): eval_dayan with
/// n1 = n2 = n and the second difference replaced by d1 - d2.
double eval_huangji(double n, double d1, double d2, double x,
                    EvalDomain domain = EvalDomain::permissive);

/// Expanded monomial coefficients of eval_dayan:
///   a0 = 0,  a1 = d1/n1 + dd/(2*n2),  a2 = -dd/(2*n1*n2).
QuadraticPoly coefficients(const QiPiece& piece);

/// Slope f'(x) of the expanded interpolant. Crosses the mean speed of
/// each qi at that qi's midpoint: f'(n1/2) = d1/n1, f'(n1 + n2/2) = d2/n2.
double derivative_at(const QiPiece& piece, double x);

/**
 * Value at x of the unique polynomial of degree <= 2 through three
 * points with pairwise distinct abscissae. Uses the Lagrange basis, an
 * algebraic route independent of eval_dayan, so the two can serve as
 * oracles for each other.
 *
 * Throws invalid_nodes when two abscissae coincide.
 */
double lagrange_quadratic(double x0, double y0, double x1, double y1,
                          double x2, double y2, double x);

/**
 * Recovers the interpolant the way the Sui/Tang calendar-makers built
 * it: assume the solar speed changes linearly across the two qi, fit
 * v(t) = a + d*t to the observed per-qi deviations, and accumulate.
 *
 * Continuous mode solves
 *   integral_0^n1 v = d1,   integral_n1^(n1+n2) v = d2
 * and returns F(x) = a*x + (d/2)*x^2, which coincides exactly with
 * coefficients(piece).
 *
 * Discrete mode reads "day to day" literally: requires integer n1, n2,
 * solves
 *   sum_{k=0}^{n1-1} (a + k*d) = d1,   sum_{k=n1}^{n1+n2-1} (a + k*d) = d2
 * and returns the partial-sum polynomial S(x) = a*x + d*x*(x-1)/2.
 */
SpeedLineFit construct_from_speed_line(const QiPiece& piece, SumMode mode);

}  // namespace dayan
