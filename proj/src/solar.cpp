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

#include "dayan/solar.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "dayan/errors.hpp"

namespace dayan {

namespace {

constexpr double kBoundaryToleranceDu = 1e-9;
constexpr int kMaxBisectionIterations = 200;

}  // namespace

void validate(const SolarModel& model) {
    if (!(std::isfinite(model.year_length) && model.year_length > 0.0)) {
        throw validation_error("year length must be positive and finite");
    }
    if (!(std::isfinite(model.amplitude) && model.amplitude >= 0.0)) {
        throw validation_error("amplitude must be non-negative and finite");
    }
    if (!std::isfinite(model.phase)) {
        throw validation_error("phase must be finite");
    }
}

double true_longitude(const SolarModel& model, double t) {
    validate(model);
    const double omega = 2.0 * std::numbers::pi / model.year_length;
    return (kDuPerRevolution / model.year_length) * t +
           model.amplitude * std::sin(omega * (t - model.phase));
}

double true_deviation(const SolarModel& model, double t) {
    validate(model);
    const double omega = 2.0 * std::numbers::pi / model.year_length;
    return model.amplitude *
           (std::sin(omega * (t - model.phase)) -
            std::sin(omega * (0.0 - model.phase)));
}

double amplitude_bound(const SolarModel& model) {
    validate(model);
    // L'(t) = (365.25 + 2*pi*A*cos(...)) / year_length stays positive
    // exactly when A < 365.25 / (2*pi), whatever the year length.
    return kDuPerRevolution / (2.0 * std::numbers::pi);
}

namespace {

// Solves L(t) == target on [lo, hi] for strictly increasing L.
double bisect_longitude(const SolarModel& model, double target, double lo,
                        double hi) {
    double mid = 0.5 * (lo + hi);
    for (int iter = 0; iter < kMaxBisectionIterations; ++iter) {
        mid = 0.5 * (lo + hi);
        const double residual = true_longitude(model, mid) - target;
        if (std::abs(residual) <= 0.1 * kBoundaryToleranceDu) {
            return mid;
        }
        if (residual < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= 0.0) {
            return mid;  // bracket exhausted at double resolution
        }
    }
    if (std::abs(true_longitude(model, mid) - target) <= kBoundaryToleranceDu) {
        return mid;
    }
    throw numerical_error("qi boundary bisection did not converge");
}

}  // namespace

TropicalYearTable make_qi_table(const SolarModel& model, QiDivisionMode mode) {
    validate(model);
    const int count = TropicalYearTable::kQiCount;
    const double year = model.year_length;

    std::vector<double> boundaries(static_cast<std::size_t>(count) + 1, 0.0);
    boundaries[0] = 0.0;
    boundaries[static_cast<std::size_t>(count)] = year;

    if (mode == QiDivisionMode::ping) {
        for (int i = 1; i < count; ++i) {
            boundaries[static_cast<std::size_t>(i)] = i * year / count;
        }
    } else {
        if (model.amplitude >= amplitude_bound(model)) {
            throw invalid_model(
                "amplitude " + std::to_string(model.amplitude) +
                " du makes the true longitude non-monotonic (bound " +
                std::to_string(amplitude_bound(model)) + " du)");
        }
        // Equal 15-degree arcs measured from the year-start longitude.
        const double arc = kDuPerRevolution / count;
        const double base = true_longitude(model, 0.0);
        double lo = 0.0;
        for (int i = 1; i < count; ++i) {
            const double t =
                bisect_longitude(model, base + i * arc, lo, year);
            boundaries[static_cast<std::size_t>(i)] = t;
            lo = t;  // monotone L keeps the remaining roots to the right
        }
    }

    std::vector<QiInterval> intervals;
    intervals.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double t0 = boundaries[static_cast<std::size_t>(i)];
        const double t1 = boundaries[static_cast<std::size_t>(i) + 1];
        intervals.push_back(QiInterval{
            i + 1, t1 - t0,
            true_deviation(model, t1) - true_deviation(model, t0)});
    }
    return TropicalYearTable(std::move(intervals));
}

SweepResult error_sweep(const SolarModel& model, const PiecewiseParabola& pp,
                        int samples) {
    validate(model);
    if (samples < 1) {
        throw validation_error("samples must be >= 1");
    }
    const double year = pp.year_length();
    SweepResult result;
    double sum = 0.0;
    for (int j = 0; j < samples; ++j) {
        const double t = j * year / samples;
        const double err =
            std::abs(eval_piecewise(pp, t) - true_deviation(model, t));
        if (err > result.max_abs_error) result.max_abs_error = err;
        sum += err;
    }
    result.mean_abs_error = sum / samples;
    return result;
}

MethodComparison compare_methods(const SolarModel& model, QiDivisionMode mode,
                                 int samples) {
    const TropicalYearTable table = make_qi_table(model, mode);
    MethodComparison cmp;
    cmp.mode = mode;
    cmp.samples = samples;
    cmp.linear = error_sweep(model, build_piecewise_linear(table), samples);
    cmp.parabolic = error_sweep(model, build_piecewise(table), samples);
    return cmp;
}

double du_to_degrees(double v) {
    if (!std::isfinite(v)) {
        throw validation_error("du value must be finite");
    }
    return v * 360.0 / 365.25;
}

double degrees_to_du(double v) {
    if (!std::isfinite(v)) {
        throw validation_error("degree value must be finite");
    }
    return v * 365.25 / 360.0;
}

}  // namespace dayan
