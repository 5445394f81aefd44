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

#include "dayan/haidao.hpp"

#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace dayan;
using test::rel_err;

namespace {

const GnomonSurvey kCanon{5.0, 1000.0, 123.0, 127.0};

Rational make_rational(std::mt19937_64& rng, int num_lo, int num_hi,
                       int den_hi) {
    std::uniform_int_distribution<int> num(num_lo, num_hi);
    std::uniform_int_distribution<int> den(1, den_hi);
    return Rational(num(rng), den(rng));
}

ExactIslandScene random_scene(std::mt19937_64& rng) {
    const Rational h = make_rational(rng, 1, 200, 20);
    return ExactIslandScene{
        h + make_rational(rng, 1, 5000, 20),  // height strictly above gnomon
        make_rational(rng, 1, 30000, 20), h, make_rational(rng, 1, 2000, 20)};
}

}  // namespace

TEST_CASE("island height and distance on the canonical survey") {
    // Values confirmed by the coordinate intersection below.
    CHECK(island_height(kCanon) == doctest::Approx(1255.0).epsilon(1e-14));
    CHECK(island_distance(kCanon) == doctest::Approx(30750.0).epsilon(1e-14));

    const GnomonSurvey unit{1.0, 1.0, 1.0, 2.0};
    CHECK(island_height(unit) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(island_distance(unit) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("equal or inverted shadows are degenerate") {
    CHECK_THROWS_AS(island_height(GnomonSurvey{5, 1000, 127, 127}),
                    degenerate_sightlines);
    CHECK_THROWS_AS(island_distance(GnomonSurvey{5, 1000, 127, 123}),
                    degenerate_sightlines);
    CHECK_THROWS_AS(island_height(GnomonSurvey{5, 1000, -1, 127}),
                    validation_error);
}

TEST_CASE("coordinate intersection agrees with the formulas exactly") {
    const auto exact = verify_by_coordinates(to_exact(kCanon));
    CHECK(exact.height == Rational(1255));
    CHECK(exact.distance == Rational(30750));

    const auto unit = verify_by_coordinates(to_exact(GnomonSurvey{1, 1, 1, 2}));
    CHECK(unit.height == Rational(2));
    CHECK(unit.distance == Rational(1));

    auto rng = test::make_rng(31);
    for (int i = 0; i < 500; ++i) {
        ExactGnomonSurvey s{make_rational(rng, 1, 100, 10),
                            make_rational(rng, 1, 5000, 10),
                            make_rational(rng, 1, 3000, 10), Rational(0)};
        s.rear_shadow = s.front_shadow + make_rational(rng, 1, 1000, 10);
        const auto hit = verify_by_coordinates(s);
        CHECK(hit.height == island_height(s));
        CHECK(hit.distance == island_distance(s));
    }
}

TEST_CASE("coordinate intersection rejects degenerate sightlines") {
    CHECK_THROWS_AS(
        verify_by_coordinates(to_exact(GnomonSurvey{5, 1000, 127, 127})),
        degenerate_sightlines);
    // Diverging sightlines meet behind the observers, not at an island.
    CHECK_THROWS_AS(
        verify_by_coordinates(to_exact(GnomonSurvey{5, 10, 500, 100})),
        degenerate_sightlines);
}

TEST_CASE("shadow simulation and its edge cases") {
    const GnomonSurvey s =
        simulate_shadows(IslandScene{1255.0, 30750.0, 5.0, 1000.0});
    CHECK(s.front_shadow == doctest::Approx(123.0).epsilon(1e-14));
    CHECK(s.rear_shadow == doctest::Approx(127.0).epsilon(1e-14));

    // Peak exactly twice the gnomon height: front shadow equals distance.
    const GnomonSurvey twice =
        simulate_shadows(IslandScene{10.0, 40.0, 5.0, 40.0});
    CHECK(twice.front_shadow == doctest::Approx(40.0).epsilon(1e-14));

    CHECK_THROWS_AS(simulate_shadows(IslandScene{5.0, 40.0, 5.0, 40.0}),
                    island_not_above_gnomon);
    CHECK_THROWS_AS(simulate_shadows(IslandScene{4.0, 40.0, 5.0, 40.0}),
                    island_not_above_gnomon);
    CHECK_THROWS_AS(simulate_shadows(IslandScene{10.0, 0.0, 5.0, 40.0}),
                    validation_error);
}

TEST_CASE("roundtrip is exact in rational arithmetic") {
    auto rng = test::make_rng(32);
    for (int i = 0; i < 500; ++i) {
        const ExactIslandScene scene = random_scene(rng);
        const ExactGnomonSurvey survey = simulate_shadows(scene);
        CHECK(survey.rear_shadow > survey.front_shadow);
        CHECK(island_height(survey) == scene.height);
        CHECK(island_distance(survey) == scene.distance);
        const auto hit = verify_by_coordinates(survey);
        CHECK(hit.height == scene.height);
        CHECK(hit.distance == scene.distance);
    }
}

TEST_CASE("roundtrip stays within 1e-9 in floating point") {
    auto rng = test::make_rng(33);
    for (int i = 0; i < 500; ++i) {
        const ExactIslandScene exact = random_scene(rng);
        const IslandScene scene{
            static_cast<double>(exact.height), static_cast<double>(exact.distance),
            static_cast<double>(exact.gnomon_height),
            static_cast<double>(exact.separation)};
        const GnomonSurvey survey = simulate_shadows(scene);
        CHECK(rel_err(island_height(survey), scene.height) < 1e-9);
        CHECK(rel_err(island_distance(survey), scene.distance) < 1e-9);
    }
}

TEST_CASE("scaling every length scales height and distance") {
    auto rng = test::make_rng(34);
    std::uniform_real_distribution<double> lambda(0.1, 10.0);
    for (int i = 0; i < 200; ++i) {
        const double k = lambda(rng);
        const GnomonSurvey scaled{kCanon.gnomon_height * k, kCanon.separation * k,
                                  kCanon.front_shadow * k,
                                  kCanon.rear_shadow * k};
        CHECK(rel_err(island_height(scaled), k * island_height(kCanon)) <
              1e-12);
        CHECK(rel_err(island_distance(scaled), k * island_distance(kCanon)) <
              1e-12);
    }
}

TEST_CASE("height falls as the shadow difference grows") {
    double previous = island_height(GnomonSurvey{5, 1000, 123, 123.5});
    for (double rear = 124.0; rear < 140.0; rear += 0.5) {
        const double h = island_height(GnomonSurvey{5, 1000, 123, rear});
        CHECK(h < previous);
        previous = h;
    }
}
