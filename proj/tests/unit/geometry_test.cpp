// Copyright 2026 The camplace Authors
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

#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "camplace/geometry.hpp"
#include "camplace/sampling.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace camplace;
using fixtures::caught;

TEST_CASE("signed_area follows orientation") {
  const Ring square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(signed_area(square) == doctest::Approx(1.0));
  const Ring reversed(square.rbegin(), square.rend());
  CHECK(signed_area(reversed) == doctest::Approx(-1.0));
  CHECK(signed_area(Ring{{0, 0}, {2, 0}, {0, 2}}) == doctest::Approx(2.0));
  CHECK(caught([] { signed_area(Ring{{0, 0}, {1, 0}}); }).first == ErrorCode::kInvalidGeometry);
}

TEST_CASE("point_in_floorplan classifies inside, boundary and hole") {
  const Floorplan unit = fixtures::square(1.0);
  CHECK(point_in_floorplan({0.5, 0.5}, unit) == Location::kInside);
  CHECK(point_in_floorplan({1.0, 0.5}, unit) == Location::kOnBoundary);
  CHECK(point_in_floorplan({1.5, 0.5}, unit) == Location::kOutside);

  const Floorplan holed = Floorplan::create({{0, 0}, {1, 0}, {1, 1}, {0, 1}},
                                            {{{0.25, 0.25}, {0.25, 0.75}, {0.75, 0.75}, {0.75, 0.25}}});
  CHECK(point_in_floorplan({0.5, 0.5}, holed) == Location::kOutside);
  CHECK(point_in_floorplan({0.25, 0.5}, holed) == Location::kOnBoundary);
  CHECK(point_in_floorplan({0.1, 0.5}, holed) == Location::kInside);
}

TEST_CASE("segments_intersect distinguishes proper, touching and none") {
  CHECK(segments_intersect({{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}) == Intersection::kProper);
  CHECK(segments_intersect({{0, 0}, {1, 0}}, {{1, 0}, {2, 0}}) == Intersection::kTouching);
  CHECK(segments_intersect({{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}) == Intersection::kNone);
  // T junction: an endpoint in the interior of the other segment.
  CHECK(segments_intersect({{0, 0}, {2, 0}}, {{1, 0}, {1, 1}}) == Intersection::kTouching);
  CHECK(caught([] { make_segment({1, 1}, {1, 1}); }).first == ErrorCode::kInvalidGeometry);
}

TEST_CASE("floorplan validation") {
  SUBCASE("bowtie") {
    const auto [code, msg] = caught([] { Floorplan::create({{0, 0}, {1, 1}, {1, 0}, {0, 1}}); });
    CHECK(code == ErrorCode::kInvalidGeometry);
    CHECK(msg.find("outer ring self-intersects") != std::string::npos);
  }
  SUBCASE("hole outside the outer ring") {
    const auto [code, msg] = caught([] {
      Floorplan::create({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{{2, 2}, {2, 3}, {3, 3}, {3, 2}}});
    });
    CHECK(code == ErrorCode::kInvalidGeometry);
    CHECK(msg.find("hole not contained") != std::string::npos);
  }
  SUBCASE("orientation is normalized with warnings") {
    std::vector<std::string> warnings;
    const Floorplan f = Floorplan::create({{0, 0}, {0, 4}, {4, 4}, {4, 0}},
                                          {{{1, 1}, {2, 1}, {2, 2}, {1, 2}}}, &warnings);
    CHECK(warnings.size() == 2);
    CHECK(signed_area(f.outer()) > 0);
    CHECK(signed_area(f.holes()[0]) < 0);
    CHECK(f.area() == doctest::Approx(15.0));
  }
  SUBCASE("collinear vertices and repeats are merged") {
    const Floorplan f =
        Floorplan::create({{0, 0}, {0.5, 0}, {1, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(f.outer().size() == 4);
    CHECK(f.walls().size() == 4);
    CHECK(f.is_convex());
  }
}

TEST_CASE("convex viewpoint sees the whole room") {
  const Floorplan f = Floorplan::create({{0, 0}, {4, 0}, {5, 2}, {3, 4}, {0, 3}});
  const VisibilityPolygon vp = visibility_polygon({2, 2}, f);
  CHECK(vp.area() == doctest::Approx(f.area()).epsilon(1e-12));
  for (const BoundaryPoint& b : sample_boundary(f, 0.3)) CHECK(sees({2, 2}, b.position, vp));
  CHECK(sees({2, 2}, {2, 2}, vp));
}

TEST_CASE("fan area matches the ray-casting oracle") {
  SUBCASE("L shape") {
    const Floorplan f = fixtures::l_shape();
    const double oracle_area = oracle::ray_cast_area({0.5, 0.5}, f);
    CHECK(std::abs(visibility_polygon({0.5, 0.5}, f).area() - oracle_area) <= 1e-3 * oracle_area);
  }
  SUBCASE("annulus corridor") {
    const Floorplan f = fixtures::annulus();
    const Point2 v{1.0, 3.0};
    const double area = visibility_polygon(v, f).area();
    const double oracle_area = oracle::ray_cast_area(v, f);
    CHECK(area < f.area());
    CHECK(std::abs(area - oracle_area) <= 1e-3 * oracle_area);
  }
}

TEST_CASE("reflex corner occludes") {
  const Floorplan f = fixtures::l_shape();
  const VisibilityPolygon vp = visibility_polygon({0.5, 1.5}, f);
  CHECK_FALSE(oracle::segment_visible({0.5, 1.5}, {2, 1}, f));
  CHECK_FALSE(sees({0.5, 1.5}, {2, 1}, vp));
  CHECK(sees({0.5, 1.5}, {0.5, 0.5}, vp));
}

TEST_CASE("viewpoints on or outside the walls are rejected") {
  const Floorplan f = fixtures::square(1.0);
  CHECK(caught([&] { visibility_polygon({1.0, 0.5}, f); }).first == ErrorCode::kPlacementInfeasible);
  CHECK(caught([&] { visibility_polygon({2.0, 0.5}, f); }).first == ErrorCode::kPlacementInfeasible);
}

TEST_CASE("sees is symmetric and agrees with the segment oracle") {
  gen::Rng rng(20261016);
  for (int poly = 0; poly < 5; ++poly) {
    const Floorplan f = gen::random_rectilinear(rng, {.hole = poly % 2 == 1});
    for (int i = 0; i < 200; ++i) {
      const Point2 p = fixtures::random_inside(rng, f);
      const Point2 q = fixtures::random_inside(rng, f);
      if (oracle::near_visibility_edge(p, q, f)) continue;
      const bool pq = sees(p, q, visibility_polygon(p, f));
      CHECK(pq == sees(q, p, visibility_polygon(q, f)));
      CHECK(pq == oracle::segment_visible(p, q, f));
    }
  }
}

TEST_CASE("fan vertices are visible and fan area never exceeds the floorplan") {
  gen::Rng rng(7);
  for (int poly = 0; poly < 5; ++poly) {
    const Floorplan f = gen::random_rectilinear(rng, {.hole = poly % 2 == 0});
    for (int i = 0; i < 10; ++i) {
      const Point2 v = fixtures::random_inside(rng, f);
      const VisibilityPolygon vp = visibility_polygon(v, f);
      CHECK(vp.area() <= f.area() * (1 + 1e-12));
      for (const FanTriangle& t : vp.fan()) {
        // Pull the wall endpoints back a hair so the oracle sees an interior point.
        for (Point2 w : {t.near, t.far}) {
          const Point2 inner = v + (1.0 - 1e-7) * (w - v);
          CHECK((oracle::segment_visible(v, inner, f) || oracle::near_visibility_edge(v, inner, f)));
        }
      }
    }
  }
}
