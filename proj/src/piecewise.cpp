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

#include "dayan/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "dayan/errors.hpp"

namespace dayan {

TropicalYearTable::TropicalYearTable(std::vector<QiInterval> intervals)
    : intervals_(std::move(intervals)) {
    if (intervals_.size() != static_cast<std::size_t>(kQiCount)) {
        throw validation_error("expected " + std::to_string(kQiCount) +
                               " qi intervals, got " +
                               std::to_string(intervals_.size()));
    }
    for (int i = 0; i < kQiCount; ++i) {
        const QiInterval& qi = intervals_[static_cast<std::size_t>(i)];
        if (qi.index != i + 1) {
            throw validation_error("qi index " + std::to_string(qi.index) +
                                   " at position " + std::to_string(i + 1) +
                                   "; indices must run 1.." +
                                   std::to_string(kQiCount) + " in order");
        }
        if (!(std::isfinite(qi.n) && qi.n > 0.0)) {
            throw validation_error("qi " + std::to_string(qi.index) +
                                   ": length must be positive and finite");
        }
        if (!std::isfinite(qi.delta)) {
            throw validation_error("qi " + std::to_string(qi.index) +
                                   ": deviation must be finite");
        }
        year_length_ += qi.n;
        closure_defect_ += qi.delta;
    }
}

PiecewiseParabola::PiecewiseParabola(std::vector<double> breakpoints,
                                     std::vector<QuadraticPoly> pieces,
                                     std::vector<double> offsets)
    : breakpoints_(std::move(breakpoints)),
      pieces_(std::move(pieces)),
      offsets_(std::move(offsets)) {
    if (breakpoints_.size() != pieces_.size() + 1 ||
        pieces_.size() != offsets_.size() || pieces_.empty()) {
        throw validation_error("piecewise curve shape mismatch");
    }
    if (breakpoints_.front() != 0.0) {
        throw validation_error("breakpoints must start at 0");
    }
    for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
        if (!(breakpoints_[i] > breakpoints_[i - 1]) ||
            !std::isfinite(breakpoints_[i])) {
            throw validation_error("breakpoints must be strictly increasing");
        }
    }
    const std::size_t last = pieces_.size() - 1;
    const double local_end = breakpoints_[last + 1] - breakpoints_[last];
    total_deviation_ = offsets_[last] + pieces_[last](local_end);
}

namespace {

PiecewiseParabola assemble(const TropicalYearTable& table,
                           const std::vector<QuadraticPoly>& pieces) {
    const auto& qi = table.intervals();
    std::vector<double> breakpoints(qi.size() + 1, 0.0);
    std::vector<double> offsets(qi.size(), 0.0);
    double t = 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < qi.size(); ++i) {
        offsets[i] = acc;
        t += qi[i].n;
        acc += qi[i].delta;
        breakpoints[i + 1] = t;
    }
    return PiecewiseParabola(std::move(breakpoints), pieces,
                             std::move(offsets));
}

}  // namespace

PiecewiseParabola build_piecewise(const TropicalYearTable& table,
                                  FinalPairing pairing) {
    const auto& qi = table.intervals();
    std::vector<QuadraticPoly> pieces(qi.size());
    for (std::size_t i = 0; i < qi.size(); ++i) {
        if (i + 1 < qi.size()) {
            pieces[i] = coefficients(
                QiPiece{qi[i].n, qi[i + 1].n, qi[i].delta, qi[i + 1].delta});
        } else if (pairing == FinalPairing::cyclic) {
            pieces[i] = coefficients(
                QiPiece{qi[i].n, qi[0].n, qi[i].delta, qi[0].delta});
        } else {
            pieces[i] = QuadraticPoly{0.0, qi[i].delta / qi[i].n, 0.0};
        }
    }
    return assemble(table, pieces);
}

PiecewiseParabola build_piecewise_linear(const TropicalYearTable& table) {
    const auto& qi = table.intervals();
    std::vector<QuadraticPoly> pieces(qi.size());
    for (std::size_t i = 0; i < qi.size(); ++i) {
        pieces[i] = QuadraticPoly{0.0, qi[i].delta / qi[i].n, 0.0};
    }
    return assemble(table, pieces);
}

double eval_piecewise(const PiecewiseParabola& pp, double t, WrapMode wrap) {
    if (!std::isfinite(t)) {
        throw validation_error("evaluation time must be finite");
    }
    const double year = pp.year_length();
    double shift = 0.0;
    if (wrap == WrapMode::cyclic) {
        const double k = std::floor(t / year);
        if (k != 0.0) {
            shift = k * pp.total_deviation();
            t -= k * year;
            // Guard against t == year after rounding of t - k*year.
            if (t >= year) {
                t -= year;
                shift += pp.total_deviation();
            }
            if (t < 0.0) t = 0.0;
        }
    } else if (!(0.0 <= t && t <= year)) {
        throw out_of_domain("t = " + std::to_string(t) +
                            " outside [0, " + std::to_string(year) + "]");
    }

    const auto& bp = pp.breakpoints();
    // Half-open pieces [t_i, t_{i+1}); the final right endpoint is closed.
    auto it = std::upper_bound(bp.begin(), bp.end(), t);
    std::size_t i = static_cast<std::size_t>(it - bp.begin());
    if (i > 0) --i;
    if (i >= pp.pieces().size()) i = pp.pieces().size() - 1;
    return shift + pp.offsets()[i] + pp.pieces()[i](t - bp[i]);
}

std::vector<BreakpointJump> continuity_report(const PiecewiseParabola& pp) {
    const auto& bp = pp.breakpoints();
    const auto& pieces = pp.pieces();
    const auto& offsets = pp.offsets();
    const std::size_t n = pieces.size();

    std::vector<BreakpointJump> report;
    report.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t left = i - 1;
        const std::size_t right = i % n;  // wraps the final boundary to piece 0
        const double left_len = bp[i] - bp[left];
        const double left_value = offsets[left] + pieces[left](left_len);
        const double right_value = (i == n)
                                       ? pp.total_deviation() + pieces[right](0.0)
                                       : offsets[right] + pieces[right](0.0);
        report.push_back(BreakpointJump{
            bp[i], right_value - left_value,
            pieces[right].derivative(0.0) - pieces[left].derivative(left_len)});
    }
    return report;
}

}  // namespace dayan
