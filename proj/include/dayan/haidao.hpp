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

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "dayan/errors.hpp"

namespace dayan {

/// Exact rational scalar. Doubles convert losslessly (every finite
/// double is a binary fraction), so the exact path can audit the
/// floating-point one bit for bit.
using Rational = boost::multiprecision::cpp_rational;

namespace detail {
inline bool is_finite(double v) { return std::isfinite(v); }
inline bool is_finite(const Rational&) { return true; }
}  // namespace detail

/**
 * The double-gnomon survey of the Haidao suanjing (Sea Island
 * Computational Canon, 263 AD), problem one: measure an island peak
 * that is too far away to reach.
 *
 * Two gnomons of equal height stand on level ground in line with the
 * island, `separation` apart. For each gnomon an observer backs away
 * from the island until eye (at ground level), gnomon tip, and peak
 * align; the eye-to-foot distance is that gnomon's shadow. The rear
 * gnomon, being farther from the island, casts the longer shadow.
 *
 * All lengths share one arbitrary unit; no unit system is enforced.
 */
template <class T>
struct BasicGnomonSurvey {
    T gnomon_height;  ///< common gnomon height (> 0)
    T separation;     ///< distance between the gnomon feet (> 0)
    T front_shadow;   ///< shadow of the gnomon nearer the island (> 0)
    T rear_shadow;    ///< shadow of the farther gnomon (> front_shadow)
};

using GnomonSurvey = BasicGnomonSurvey<double>;
using ExactGnomonSurvey = BasicGnomonSurvey<Rational>;

/// Ground truth for forward simulation: an island of known height and
/// distance plus the instrument that will observe it.
template <class T>
struct BasicIslandScene {
    T height;         ///< island peak above ground (> gnomon_height)
    T distance;       ///< front gnomon foot to island base (> 0)
    T gnomon_height;  ///< (> 0)
    T separation;     ///< (> 0)
};

using IslandScene = BasicIslandScene<double>;
using ExactIslandScene = BasicIslandScene<Rational>;

/// Intersection of the two sightlines: peak height and ground distance
/// from the front gnomon foot to the island base.
template <class T>
struct SightlineIntersection {
    T height;
    T distance;
};

template <class T>
void validate(const BasicGnomonSurvey<T>& s) {
    if (!(detail::is_finite(s.gnomon_height) && detail::is_finite(s.separation) &&
          detail::is_finite(s.front_shadow) && detail::is_finite(s.rear_shadow))) {
        throw validation_error("survey lengths must be finite");
    }
    if (!(s.gnomon_height > 0 && s.separation > 0 && s.front_shadow > 0 &&
          s.rear_shadow > 0)) {
        throw validation_error("survey lengths must be positive");
    }
    if (!(s.rear_shadow > s.front_shadow)) {
        throw degenerate_sightlines(
            "rear shadow must exceed front shadow; equal shadows mean "
            "parallel sightlines (island at infinity)");
    }
}

template <class T>
void validate(const BasicIslandScene<T>& sc) {
    if (!(detail::is_finite(sc.height) && detail::is_finite(sc.distance) &&
          detail::is_finite(sc.gnomon_height) && detail::is_finite(sc.separation))) {
        throw validation_error("scene lengths must be finite");
    }
    if (!(sc.gnomon_height > 0 && sc.distance > 0 && sc.separation > 0)) {
        throw validation_error("scene lengths must be positive");
    }
    if (!(sc.height > sc.gnomon_height)) {
        throw island_not_above_gnomon(
            "island height must exceed the gnomon height");
    }
}

/// Island altitude:  height = AB + AB*AC / (CF - AE)
/// with AB the gnomon height, AC the separation, AE and CF the shadows.
template <class T>
T island_height(const BasicGnomonSurvey<T>& s) {
    validate(s);
    return s.gnomon_height +
           s.gnomon_height * s.separation / (s.rear_shadow - s.front_shadow);
}

/// Companion quantity: ground distance from the front gnomon foot to
/// the island base,  AE*AC / (CF - AE).
template <class T>
T island_distance(const BasicGnomonSurvey<T>& s) {
    validate(s);
    return s.front_shadow * s.separation / (s.rear_shadow - s.front_shadow);
}

/// Forward model:  AE = h*D/(H-h),  CF = h*(D+AC)/(H-h).
/// The survey it returns satisfies every survey invariant.
template <class T>
BasicGnomonSurvey<T> simulate_shadows(const BasicIslandScene<T>& sc) {
    validate(sc);
    const T excess = sc.height - sc.gnomon_height;
    return BasicGnomonSurvey<T>{
        sc.gnomon_height, sc.separation,
        sc.gnomon_height * sc.distance / excess,
        sc.gnomon_height * (sc.distance + sc.separation) / excess};
}

/**
 * Analytic check of the height formula, with no similar-triangle
 * algebra: place the survey in ground coordinates and intersect the two
 * sightlines directly.
 *
 * Frame: front eye E at the origin, x increasing toward the island,
 * ground at y = 0. Front foot A = (AE, 0) with tip (AE, h); rear foot
 * C = (AE - AC, 0) with tip (AE - AC, h); rear eye F = (AE - AC - CF, 0).
 * The peak is the intersection of line E->tip(A) with line F->tip(C),
 * computed by the general two-line determinant formula. Over Rational
 * inputs the result is exact and must equal island_height /
 * island_distance identically.
 *
 * Throws degenerate_sightlines when the lines are parallel.
 */
template <class T>
SightlineIntersection<T> verify_by_coordinates(const BasicGnomonSurvey<T>& s) {
    if (!(detail::is_finite(s.gnomon_height) && detail::is_finite(s.separation) &&
          detail::is_finite(s.front_shadow) && detail::is_finite(s.rear_shadow))) {
        throw validation_error("survey lengths must be finite");
    }
    if (!(s.gnomon_height > 0 && s.separation > 0 && s.front_shadow > 0 &&
          s.rear_shadow > 0)) {
        throw validation_error("survey lengths must be positive");
    }

    const T h = s.gnomon_height;
    // Line 1 through E=(0,0) and (AE, h); line 2 through
    // F=(AE-AC-CF, 0) and (AE-AC, h).
    const T p1x = T(0), p1y = T(0);
    const T p2x = s.front_shadow, p2y = h;
    const T p3x = s.front_shadow - s.separation - s.rear_shadow, p3y = T(0);
    const T p4x = s.front_shadow - s.separation, p4y = h;

    const T denom = (p1x - p2x) * (p3y - p4y) - (p1y - p2y) * (p3x - p4x);
    if (denom == 0) {
        throw degenerate_sightlines("sightlines are parallel");
    }
    const T cross1 = p1x * p2y - p1y * p2x;
    const T cross2 = p3x * p4y - p3y * p4x;
    const T ix = (cross1 * (p3x - p4x) - (p1x - p2x) * cross2) / denom;
    const T iy = (cross1 * (p3y - p4y) - (p1y - p2y) * cross2) / denom;
    // A genuine peak lies above ground and beyond the front foot; a
    // diverging survey (rear shadow <= front shadow) intersects behind
    // the observers instead.
    if (!(iy > 0) || !(ix > s.front_shadow)) {
        throw degenerate_sightlines(
            "sightlines diverge; no island-side intersection");
    }
    return SightlineIntersection<T>{iy, ix - s.front_shadow};
}

/// Lossless double -> rational conversion of a survey.
inline ExactGnomonSurvey to_exact(const GnomonSurvey& s) {
    return ExactGnomonSurvey{Rational(s.gnomon_height), Rational(s.separation),
                             Rational(s.front_shadow), Rational(s.rear_shadow)};
}

/// Lossless double -> rational conversion of a scene.
inline ExactIslandScene to_exact(const IslandScene& sc) {
    return ExactIslandScene{Rational(sc.height), Rational(sc.distance),
                            Rational(sc.gnomon_height), Rational(sc.separation)};
}

}  // namespace dayan
