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

#include "dayan/piecewise.hpp"

namespace dayan {

/// One full revolution of the ecliptic in du: 1 du = 360 deg / 365.25.
inline constexpr double kDuPerRevolution = 365.25;

/**
 * Synthetic true-sun model: mean motion plus a single-harmonic equation
 * of center. No observational data survives alongside the historical
 * algorithms, so a smooth periodic stand-in exercises and ranks them.
 *
 * True longitude in du at time t days after the year start:
 *
 *   L(t) = (365.25 / year_length) * t
 *        + amplitude * sin(2*pi*(t - phase) / year_length)
 */
struct SolarModel {
    double year_length = 365.25;  ///< days (> 0)
    double amplitude = 0.0;       ///< equation-of-center amplitude, du (>= 0)
    double phase = 0.0;           ///< winter-solstice offset, days
};

/// Year division scheme.
enum class QiDivisionMode {
    ping,  ///< mean qi: 24 equal time intervals (Liu Zhuo, Huangji li)
    ding   ///< true qi: 24 equal 15-degree ecliptic arcs (Yi-xing, Dayan li)
};

void validate(const SolarModel& model);

/// True solar longitude L(t), du.
double true_longitude(const SolarModel& model, double t);

/// Deviation of the true sun from the mean sun accumulated since the
/// year start, du: the quantity the per-qi deviation table discretizes
/// and the reference curve for error sweeps.
double true_deviation(const SolarModel& model, double t);

/// Largest amplitude keeping L strictly increasing: 365.25 / (2*pi).
/// Independent of year_length (both motion terms scale with 1/year).
double amplitude_bound(const SolarModel& model);

/**
 * Discretizes the model into a per-qi deviation table.
 *
 * ping: boundaries at i * year_length / 24 (equal times).
 * ding: boundaries where L(t) - L(0) crosses i * 365.25/24 du (equal
 * 15-degree arcs), located by bisection to within 1e-9 du; the resulting
 * intervals are unequal in time. Requires strictly increasing L, i.e.
 * amplitude < amplitude_bound (throws invalid_model otherwise); a
 * bisection that fails to converge throws numerical_error.
 */
TropicalYearTable make_qi_table(const SolarModel& model, QiDivisionMode mode);

/// Max and mean of |interpolant - true_deviation| over sample points.
struct SweepResult {
    double max_abs_error = 0.0;   ///< du
    double mean_abs_error = 0.0;  ///< du
};

/// Evaluates the interpolant against the model at `samples` points
/// t_j = j * year_length / samples, j = 0 .. samples-1. The curve must
/// have been built from a table generated from the same model.
SweepResult error_sweep(const SolarModel& model, const PiecewiseParabola& pp,
                        int samples);

/// Side-by-side precision of the step-derived linear scheme and the
/// parabolic scheme on the same qi table.
struct MethodComparison {
    SweepResult linear;
    SweepResult parabolic;
    QiDivisionMode mode;
    int samples = 0;
};

MethodComparison compare_methods(const SolarModel& model, QiDivisionMode mode,
                                 int samples = 10000);

/// 1 du = 360/365.25 degrees.
double du_to_degrees(double v);
double degrees_to_du(double v);

}  // namespace dayan
