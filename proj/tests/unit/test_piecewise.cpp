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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "dayan/errors.hpp"
#include "dayan/solar.hpp"
#include "test_util.hpp"

using namespace dayan;
using test::rel_err;

namespace {

TropicalYearTable uniform_table(double n, double delta) {
    std::vector<QiInterval> qi;
    for (int i = 1; i <= TropicalYearTable::kQiCount; ++i) {
        qi.push_back(QiInterval{i, n, delta});
    }
    return TropicalYearTable(std::move(qi));
}

/// Closed sinusoid table used across the piecewise tests.
TropicalYearTable sinusoid_table() {
    return make_qi_table(SolarModel{365.25, 2.0, 0.0}, QiDivisionMode::ping);
}

}  // namespace

TEST_CASE("table validation") {
    std::vector<QiInterval> qi;
    for (int i = 1; i <= 23; ++i) qi.push_back(QiInterval{i, 15.0, 0.0});
    CHECK_THROWS_AS(TropicalYearTable{qi}, validation_error);

    qi.push_back(QiInterval{25, 15.0, 0.0});  // 24 rows but bad index
    CHECK_THROWS_AS(TropicalYearTable{qi}, validation_error);

    qi.back() = QiInterval{24, 0.0, 0.0};  // zero length
    CHECK_THROWS_AS(TropicalYearTable{qi}, validation_error);

    qi.back() = QiInterval{24, 15.0, 0.0};
    const TropicalYearTable table(qi);
    CHECK(table.year_length() == doctest::Approx(360.0));
    CHECK(table.closure_defect() == 0.0);
}

TEST_CASE("all-zero table builds the zero curve") {
    const PiecewiseParabola pp = build_piecewise(uniform_table(15.0, 0.0));
    for (double t = 0.0; t <= 360.0; t += 7.3) {
        CHECK(eval_piecewise(pp, t) == doctest::Approx(0.0).epsilon(1e-15));
    }
    for (const auto& jump : continuity_report(pp)) {
        CHECK(jump.value_jump == 0.0);
        CHECK(jump.slope_jump == 0.0);
    }
}

TEST_CASE("constant-slope table is one global line") {
    const PiecewiseParabola pp = build_piecewise(uniform_table(15.0, 0.5));
    for (const auto& piece : pp.pieces()) {
        CHECK(piece.a2 == doctest::Approx(0.0).epsilon(1e-15));
    }
    for (const auto& jump : continuity_report(pp)) {
        CHECK(std::abs(jump.slope_jump) < 1e-15);
    }
    CHECK(eval_piecewise(pp, 123.0) ==
          doctest::Approx(123.0 * 0.5 / 15.0).epsilon(1e-12));
}

TEST_CASE("breakpoints evaluate to the prefix sums") {
    const TropicalYearTable table = sinusoid_table();
    const PiecewiseParabola pp = build_piecewise(table);

    double prefix = 0.0;
    for (int i = 0; i < TropicalYearTable::kQiCount; ++i) {
        CHECK(rel_err(eval_piecewise(pp, pp.breakpoints()[i]), prefix) <
              1e-12);
        prefix += table.intervals()[i].delta;
    }
    CHECK(rel_err(eval_piecewise(pp, pp.year_length()), prefix) < 1e-12);
    CHECK(rel_err(pp.total_deviation(), table.closure_defect()) < 1e-12);
}

TEST_CASE("value continuity holds, slopes may jump") {
    const PiecewiseParabola pp = build_piecewise(sinusoid_table());
    const auto report = continuity_report(pp);
    CHECK(report.size() == 24);
    bool any_slope_jump = false;
    for (const auto& jump : report) {
        CHECK(std::abs(jump.value_jump) <= 1e-10);
        if (std::abs(jump.slope_jump) > 1e-6) any_slope_jump = true;
    }
    CHECK(any_slope_jump);  // the scheme never promises C^1
}

TEST_CASE("piece-local node conditions hold for every piece") {
    const TropicalYearTable table = sinusoid_table();
    const PiecewiseParabola pp = build_piecewise(table);
    for (int i = 0; i < TropicalYearTable::kQiCount; ++i) {
        const auto& piece = pp.pieces()[static_cast<std::size_t>(i)];
        const QiInterval& qi = table.intervals()[static_cast<std::size_t>(i)];
        CHECK(piece(0.0) == 0.0);
        CHECK(rel_err(piece(qi.n), qi.delta) < 1e-12);
    }
}

TEST_CASE("lookup picks the half-open piece") {
    const TropicalYearTable table = sinusoid_table();
    const PiecewiseParabola pp = build_piecewise(table);
    // Just left of a breakpoint belongs to the left piece, the breakpoint
    // itself to the right piece; both agree in value by continuity.
    const double t1 = pp.breakpoints()[1];
    CHECK(rel_err(eval_piecewise(pp, std::nextafter(t1, 0.0)),
                  eval_piecewise(pp, t1)) < 1e-12);
    // The closed final endpoint returns the full-year sum.
    CHECK(rel_err(eval_piecewise(pp, pp.year_length(), WrapMode::none),
                  pp.total_deviation()) < 1e-12);
}

TEST_CASE("non-cyclic evaluation rejects out-of-range times") {
    const PiecewiseParabola pp = build_piecewise(uniform_table(15.0, 0.0));
    CHECK_THROWS_AS(eval_piecewise(pp, -1.0, WrapMode::none), out_of_domain);
    CHECK_THROWS_AS(eval_piecewise(pp, 360.1, WrapMode::none), out_of_domain);
    CHECK_THROWS_AS(eval_piecewise(pp, NAN), validation_error);
}

TEST_CASE("cyclic evaluation adds one year-sum per revolution") {
    // Deliberately open table: the year-sum is visible in the wrap.
    std::vector<QiInterval> qi;
    for (int i = 1; i <= TropicalYearTable::kQiCount; ++i) {
        qi.push_back(QiInterval{i, 15.0, 0.1 * i});
    }
    const TropicalYearTable table(std::move(qi));
    const PiecewiseParabola pp = build_piecewise(table);
    const double year = pp.year_length();
    const double total = pp.total_deviation();

    for (double t : {0.0, 3.7, 123.4, 359.9}) {
        CHECK(rel_err(eval_piecewise(pp, t + year),
                      eval_piecewise(pp, t) + total) < 1e-10);
        CHECK(rel_err(eval_piecewise(pp, t - year),
                      eval_piecewise(pp, t) - total) < 1e-10);
    }
}

TEST_CASE("linear-tail pairing degrades the last piece only") {
    const TropicalYearTable table = sinusoid_table();
    const PiecewiseParabola cyclic = build_piecewise(table);
    const PiecewiseParabola tail =
        build_piecewise(table, FinalPairing::linear_tail);
    for (std::size_t i = 0; i + 1 < tail.pieces().size(); ++i) {
        CHECK(tail.pieces()[i].a2 == cyclic.pieces()[i].a2);
    }
    CHECK(tail.pieces().back().a2 == 0.0);
    // Value continuity is preserved either way.
    for (const auto& jump : continuity_report(tail)) {
        CHECK(std::abs(jump.value_jump) <= 1e-10);
    }
}

TEST_CASE("piecewise-linear builder matches per-qi mean slopes") {
    const TropicalYearTable table = sinusoid_table();
    const PiecewiseParabola lin = build_piecewise_linear(table);
    for (int i = 0; i < TropicalYearTable::kQiCount; ++i) {
        const QiInterval& qi = table.intervals()[static_cast<std::size_t>(i)];
        const auto& piece = lin.pieces()[static_cast<std::size_t>(i)];
        CHECK(piece.a2 == 0.0);
        CHECK(rel_err(piece.a1, qi.delta / qi.n) < 1e-14);
    }
}
