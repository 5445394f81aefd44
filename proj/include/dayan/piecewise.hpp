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

#include <cstddef>
#include <vector>

#include "dayan/interpolation.hpp"

namespace dayan {

/// One of the 24 qi of a tropical year.
struct QiInterval {
    int index;     ///< 1..24, strictly increasing within a table
    double n;      ///< length, days (> 0)
    double delta;  ///< deviation of the true sun over this qi, du
};

/**
 * Observed per-qi data for one tropical year: exactly 24 intervals,
 * indices 1..24 in order. The deviations of a closed table sum to zero
 * (the true sun returns to the mean sun after a full year); a nonzero
 * sum is reported by closure_defect() and treated as a diagnostic, not
 * an error, since user-supplied observations need not close exactly.
 */
class TropicalYearTable {
  public:
    static constexpr int kQiCount = 24;

    /// Validates and takes ownership; throws validation_error on bad data.
    explicit TropicalYearTable(std::vector<QiInterval> intervals);

    const std::vector<QiInterval>& intervals() const { return intervals_; }
    const QiInterval& at(int index) const { return intervals_[index - 1]; }

    /// Sum of interval lengths, days.
    double year_length() const { return year_length_; }

    /// Sum of deviations, du; ~0 for a closed table.
    double closure_defect() const { return closure_defect_; }

  private:
    std::vector<QiInterval> intervals_;
    double year_length_ = 0.0;
    double closure_defect_ = 0.0;
};

/// How to build the 24th piece, whose qi has no observed successor.
enum class FinalPairing {
    cyclic,      ///< pair qi 24 with qi 1 (the year is periodic)
    linear_tail  ///< no curvature information; last piece is linear
};

/// Whether evaluation wraps t around the year or rejects out-of-range t.
enum class WrapMode { cyclic, none };

/**
 * The 24 per-qi quadratic interpolants of a tropical year glued into one
 * curve: cumulative deviation of the true sun from the mean sun, du,
 * as a function of time in days since the year start.
 *
 * Piece i (0-based) covers [breakpoints[i], breakpoints[i+1]) in local
 * time x = t - breakpoints[i]; its value is offset by the prefix sum of
 * the deviations of the preceding qi. The node conditions of each piece
 * make the glued curve continuous in value; slopes generally jump at
 * breakpoints (see continuity_report).
 */
class PiecewiseParabola {
  public:
    PiecewiseParabola(std::vector<double> breakpoints,
                      std::vector<QuadraticPoly> pieces,
                      std::vector<double> offsets);

    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<QuadraticPoly>& pieces() const { return pieces_; }
    const std::vector<double>& offsets() const { return offsets_; }

    double year_length() const { return breakpoints_.back(); }

    /// Sum of all per-qi deviations (the value at t = year_length).
    double total_deviation() const { return total_deviation_; }

  private:
    std::vector<double> breakpoints_;    // 25, strictly increasing, [0] == 0
    std::vector<QuadraticPoly> pieces_;  // 24, in local time
    std::vector<double> offsets_;        // 24 prefix sums of deviations
    double total_deviation_ = 0.0;
};

/// Builds piece i from (n_i, n_{i+1}, delta_i, delta_{i+1}); the final
/// piece pairs with qi 1 (cyclic) or degrades to a line (linear_tail).
PiecewiseParabola build_piecewise(const TropicalYearTable& table,
                                  FinalPairing pairing = FinalPairing::cyclic);

/// Piecewise-linear counterpart: piece i is the line with slope
/// delta_i / n_i. The pre-parabolic scheme, kept for precision comparisons.
PiecewiseParabola build_piecewise_linear(const TropicalYearTable& table);

/**
 * Accumulated deviation at time t days. Cyclic mode maps t to
 * t mod year_length and adds one total_deviation() per whole year, so
 * eval(t + Y) - eval(t) == total_deviation() for all t. Non-cyclic mode
 * throws out_of_domain for t outside [0, year_length].
 */
double eval_piecewise(const PiecewiseParabola& pp, double t,
                      WrapMode wrap = WrapMode::cyclic);

/// Left-vs-right mismatch of the glued curve at one breakpoint.
struct BreakpointJump {
    double t;           ///< breakpoint time, days
    double value_jump;  ///< right value minus left limit, du
    double slope_jump;  ///< right slope minus left slope, du/day
};

/// Jumps at the 23 interior breakpoints plus the year-wrap boundary
/// (piece 24 end against piece 1 start), 24 entries total. Value jumps
/// vanish by construction; slope jumps are data, never "repaired".
std::vector<BreakpointJump> continuity_report(const PiecewiseParabola& pp);

}  // namespace dayan
