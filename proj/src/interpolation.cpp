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

#include "dayan/interpolation.hpp"

#include <cassert>
#include <cmath>
#include <string>

#include "dayan/errors.hpp"

namespace dayan {

namespace {

bool is_positive_integer(double n) {
    return n > 0.0 && std::floor(n) == n;
}

void check_x(double x, double n1, EvalDomain domain) {
    if (!std::isfinite(x)) {
        throw validation_error("evaluation point must be finite");
    }
    if (domain == EvalDomain::strict && !(0.0 <= x && x < n1)) {
        throw out_of_domain("x = " + std::to_string(x) +
                            " outside strict domain [0, " +
                            std::to_string(n1) + ")");
    }
}

}  // namespace

void validate(const QiPiece& piece) {
    if (!(std::isfinite(piece.n1) && std::isfinite(piece.n2) &&
          std::isfinite(piece.d1) && std::isfinite(piece.d2))) {
        throw validation_error("qi piece fields must be finite");
    }
    if (!(piece.n1 > 0.0 && piece.n2 > 0.0)) {
        throw validation_error("qi lengths must be positive");
    }
}

double second_difference(const QiPiece& piece) {
    validate(piece);
    return (2.0 * piece.n1 * piece.n2 / (piece.n1 + piece.n2)) *
           (piece.d1 / piece.n1 - piece.d2 / piece.n2);
}

double eval_dayan(const QiPiece& piece, double x, EvalDomain domain) {
    validate(piece);
    check_x(x, piece.n1, domain);
    const double dd = second_difference(piece);
    // Historical nested form, kept distinct from the expanded monomials in
    // coefficients() so the two routes cross-check each other.
    return (x / piece.n1) * piece.d1 +
           (1.0 - x / piece.n1) * (x / (2.0 * piece.n2)) * dd;
}

double eval_huangji(double n, double d1, double d2, double x,
                    EvalDomain domain) {
    const QiPiece piece{n, n, d1, d2};
    validate(piece);
    check_x(x, n, domain);
    const double dd = d1 - d2;  // equal-interval second difference
    return (x / n) * d1 + (1.0 - x / n) * (x / (2.0 * n)) * dd;
}

QuadraticPoly coefficients(const QiPiece& piece) {
    const double dd = second_difference(piece);
    return QuadraticPoly{0.0, piece.d1 / piece.n1 + dd / (2.0 * piece.n2),
                         -dd / (2.0 * piece.n1 * piece.n2)};
}

double derivative_at(const QiPiece& piece, double x) {
    validate(piece);
    if (!std::isfinite(x)) {
        throw validation_error("evaluation point must be finite");
    }
    return coefficients(piece).derivative(x);
}

double lagrange_quadratic(double x0, double y0, double x1, double y1,
                          double x2, double y2, double x) {
    if (x0 == x1 || x0 == x2 || x1 == x2) {
        throw invalid_nodes("interpolation nodes must be pairwise distinct");
    }
    const double l0 = (x - x1) * (x - x2) / ((x0 - x1) * (x0 - x2));
    const double l1 = (x - x0) * (x - x2) / ((x1 - x0) * (x1 - x2));
    const double l2 = (x - x0) * (x - x1) / ((x2 - x0) * (x2 - x1));
    return y0 * l0 + y1 * l1 + y2 * l2;
}

SpeedLineFit construct_from_speed_line(const QiPiece& piece, SumMode mode) {
    validate(piece);
    const double n1 = piece.n1;
    const double n2 = piece.n2;

    // Both modes reduce to a 2x2 system  [n1 c1; n2 c2] * (a, d)^T = (d1, d2)
    // where c1, c2 weight the gradient contribution of each qi.
    double c1 = 0.0;
    double c2 = 0.0;
    if (mode == SumMode::continuous) {
        c1 = n1 * n1 / 2.0;
        c2 = ((n1 + n2) * (n1 + n2) - n1 * n1) / 2.0;
    } else {
        if (!is_positive_integer(n1) || !is_positive_integer(n2)) {
            throw validation_error(
                "discrete speed-line construction needs integer qi lengths");
        }
        c1 = n1 * (n1 - 1.0) / 2.0;
        c2 = n2 * (2.0 * n1 + n2 - 1.0) / 2.0;
    }

    // det = n1*n2*(n1+n2)/2 in both modes; positive whenever n1, n2 > 0.
    const double det = n1 * c2 - n2 * c1;
    assert(det > 0.0);
    if (det == 0.0) {
        throw numerical_error("speed-line system is singular");
    }
    const double a = (piece.d1 * c2 - piece.d2 * c1) / det;
    const double d = (n1 * piece.d2 - n2 * piece.d1) / det;

    QuadraticPoly poly;
    if (mode == SumMode::continuous) {
        // F(x) = integral_0^x v = a*x + (d/2)*x^2
        poly = QuadraticPoly{0.0, a, d / 2.0};
    } else {
        // S(x) = sum_{k=0}^{x-1} (a + k*d) = a*x + d*x*(x-1)/2
        poly = QuadraticPoly{0.0, a - d / 2.0, d / 2.0};
    }
    return SpeedLineFit{SpeedLine{a, d}, poly};
}

}  // namespace dayan
