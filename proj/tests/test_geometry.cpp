// Copyright 2026 The Authors.
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

#include "doctest.h"
#include "sector_cover/geometry.hpp"
#include "support.hpp"

using namespace sector_cover;
using testutil::rect_ring;
using testutil::Rng;

TEST_SUITE_BEGIN("geometry");

TEST_CASE("area of unit square is one") {
  RegionSet r = region_from_ring(rect_ring(0, 0, 1, 1));
  CHECK(area(r) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("area of empty region set is zero") {
  CHECK(area(RegionSet{}) == 0.0);
}

TEST_CASE("area subtracts holes") {
  // 4x2 outer with a 1x1 hole: 8 - 1 = 7 by shoelace.
  Environment env =
      make_environment(rect_ring(0, 0, 4, 2), {rect_ring(1, 0.5, 1, 1)});
  CHECK(area(env) == doctest::Approx(7.0).epsilon(1e-12));
}

TEST_CASE("self difference is empty") {
  RegionSet r = region_from_ring(rect_ring(0, 0, 1, 1));
  RegionSet d = region_difference(r, r);
  CHECK(d.empty());
  CHECK(area(d) == 0.0);
}

TEST_CASE("union of disjoint squares adds areas") {
  RegionSet a = region_from_ring(rect_ring(0, 0, 1, 1));
  RegionSet b = region_from_ring(rect_ring(3, 0, 1, 1));
  RegionSet u = region_union(a, b);
  CHECK(u.components.size() == 2);
  CHECK(area(u) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("intersection of overlapping rectangles") {
  RegionSet a = region_from_ring(rect_ring(0, 0, 2, 1));
  RegionSet b = region_from_ring(rect_ring(1, 0, 2, 1));
  RegionSet i = region_intersection(a, b);
  CHECK(area(i) == doctest::Approx(1.0).epsilon(1e-12));
  Box box = bounding_box(i);
  CHECK(box.min.x == doctest::Approx(1.0));
  CHECK(box.max.x == doctest::Approx(2.0));
}

TEST_CASE("erosion shrinks a rectangle by the radius on each side") {
  RegionSet r = region_from_ring(rect_ring(0, 0, 4, 2));
  RegionSet e = erode(r, 0.2);
  CHECK(area(e) == doctest::Approx(3.6 * 1.6).epsilon(1e-9));
  Box box = bounding_box(e);
  CHECK(box.min.x == doctest::Approx(0.2).epsilon(1e-9));
  CHECK(box.min.y == doctest::Approx(0.2).epsilon(1e-9));
  CHECK(box.max.x == doctest::Approx(3.8).epsilon(1e-9));
  CHECK(box.max.y == doctest::Approx(1.8).epsilon(1e-9));
}

TEST_CASE("erosion with zero radius is the identity") {
  RegionSet r = region_from_ring(testutil::lshape_ring());
  RegionSet e = erode(r, 0.0);
  REQUIRE(e.components.size() == 1);
  CHECK(e.components[0].outer == r.components[0].outer);
}

TEST_CASE("erosion past the half extent empties the region") {
  RegionSet r = region_from_ring(rect_ring(0, 0, 1, 1));
  CHECK(erode(r, 0.6).empty());
}

TEST_CASE("erosion distance certificate at reflex corners") {
  // Eroding the L-shape puts an arc around the reflex vertex (2,2); chord
  // vertices must stay >= radius from the complement up to the sagitta.
  RegionSet r = region_from_ring(testutil::lshape_ring());
  const double radius = 0.3;
  RegionSet e = erode(r, radius);
  RegionSet complement =
      region_difference(region_from_ring(rect_ring(-1, -1, 6, 6)), r);
  for (const Environment& comp : e.components) {
    for (const Point& p : comp.outer) {
      RegionSet pt = region_from_ring(
          {{p.x - 1e-6, p.y - 1e-6}, {p.x + 1e-6, p.y - 1e-6},
           {p.x + 1e-6, p.y + 1e-6}, {p.x - 1e-6, p.y + 1e-6}});
      CHECK(region_distance(pt, complement) >= radius - 2e-3);
    }
  }
}

TEST_CASE("rotation by a quarter turn about the origin") {
  RegionSet r = region_from_ring(rect_ring(0, 0, 1, 1));
  RegionSet q = rotate(r, M_PI / 2.0, Point{0, 0});
  Box box = bounding_box(q);
  CHECK(box.min.x == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(box.max.x == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(box.min.y == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(box.max.y == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(area(q) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("rotation by zero returns identical vertices") {
  RegionSet r = region_from_ring(testutil::lshape_ring());
  RegionSet q = rotate(r, 0.0, Point{1, 1});
  CHECK(q.components[0].outer == r.components[0].outer);
}

TEST_CASE("central symmetry of a rectangle") {
  RegionSet r = region_from_ring(rect_ring(0, 0, 2, 1));
  RegionSet q = rotate(r, M_PI, Point{1, 0.5});
  RegionSet sym = region_union(region_difference(r, q),
                               region_difference(q, r));
  CHECK(area(sym) < 1e-9);
}

TEST_CASE("round trip rotation restores vertices") {
  RegionSet r = region_from_ring(testutil::lshape_ring());
  RegionSet q = rotate(rotate(r, 0.7, Point{2, 1}), -0.7, Point{2, 1});
  REQUIRE(q.components.size() == 1);
  const Ring& a = r.components[0].outer;
  const Ring& b = q.components[0].outer;
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(distance(a[i], b[i]) < 1e-6);
}

TEST_CASE("inclusion-exclusion identity on random rectangle pairs") {
  Rng rng(20260809);
  for (int i = 0; i < 1000; ++i) {
    RegionSet a = region_from_ring(rect_ring(rng.uniform(0, 5),
                                             rng.uniform(0, 5),
                                             rng.uniform(0.5, 4),
                                             rng.uniform(0.5, 4)));
    RegionSet b = region_from_ring(rect_ring(rng.uniform(0, 5),
                                             rng.uniform(0, 5),
                                             rng.uniform(0.5, 4),
                                             rng.uniform(0.5, 4)));
    double lhs = area(region_union(a, b));
    double rhs = area(a) + area(b) - area(region_intersection(a, b));
    CHECK(std::abs(lhs - rhs) <= 1e-6 * std::max(1.0, rhs));
    CHECK(lhs >= 0.0);
  }
}

TEST_CASE("boolean idempotence") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    RegionSet a = region_from_ring(rect_ring(rng.uniform(0, 3),
                                             rng.uniform(0, 3),
                                             rng.uniform(0.5, 3),
                                             rng.uniform(0.5, 3)));
    CHECK(std::abs(area(region_union(a, a)) - area(a)) < 1e-9);
    CHECK(area(region_difference(a, a)) < 1e-9);
  }
}

TEST_CASE("erosion is monotone in the radius") {
  Rng rng(99);
  RegionSet shapes[] = {region_from_ring(testutil::lshape_ring()),
                        region_from_ring(rect_ring(0, 0, 5, 3))};
  for (const RegionSet& shape : shapes) {
    for (int i = 0; i < 30; ++i) {
      double r1 = rng.uniform(0, 1.5);
      double r2 = rng.uniform(0, 1.5);
      if (r1 > r2) std::swap(r1, r2);
      CHECK(area(erode(shape, r1)) >= area(erode(shape, r2)) - 1e-9);
    }
  }
}

TEST_CASE("rotation preserves pairwise vertex distances") {
  Rng rng(4242);
  RegionSet r = region_from_ring(testutil::lshape_ring());
  for (int i = 0; i < 20; ++i) {
    double ang = rng.uniform(-3, 3);
    Point pivot{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    RegionSet q = rotate(r, ang, pivot);
    const Ring& a = r.components[0].outer;
    const Ring& b = q.components[0].outer;
    for (size_t u = 0; u < a.size(); ++u) {
      for (size_t v = u + 1; v < a.size(); ++v) {
        double da = distance(a[u], a[v]);
        double db = distance(b[u], b[v]);
        CHECK(std::abs(da - db) <= 1e-9 * std::max(1.0, da));
      }
    }
  }
}

TEST_CASE("self-intersecting ring is rejected") {
  Ring bowtie = {{0, 0}, {2, 2}, {2, 0}, {0, 2}};
  CHECK_THROWS_AS(make_environment(bowtie), ValidationError);
}

TEST_CASE("hole escaping the outer ring is rejected") {
  CHECK_THROWS_AS(
      make_environment(rect_ring(0, 0, 2, 2), {rect_ring(1.5, 0.5, 2, 1)}),
      ValidationError);
}

TEST_CASE("winding is normalized with a warning") {
  Ring cw = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};  // clockwise outer
  std::vector<std::string> warnings;
  Environment env = make_environment(cw, {}, &warnings);
  CHECK(ring_area(env.outer) > 0);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("reversed") != std::string::npos);
}

TEST_CASE("near-duplicate vertices are welded") {
  Ring r = {{0, 0}, {1e-12, 1e-12}, {1, 0}, {1, 1}, {0, 1}};
  Environment env = make_environment(r);
  CHECK(env.outer.size() == 4);
}

TEST_CASE("point containment is closed") {
  Environment env =
      make_environment(rect_ring(0, 0, 2, 2), {rect_ring(0.5, 0.5, 1, 1)});
  RegionSet free = free_region(env);
  CHECK(contains_point(free, Point{0.25, 0.25}));
  CHECK(contains_point(free, Point{0, 0}));          // outer boundary
  CHECK(contains_point(free, Point{0.5, 0.5}));      // hole boundary
  CHECK(!contains_point(free, Point{1.0, 1.0}));     // inside the hole
  CHECK(!contains_point(free, Point{-0.1, 0.5}));    // outside
}

TEST_CASE("segment containment respects holes") {
  Environment env =
      make_environment(rect_ring(0, 0, 4, 2), {rect_ring(1.5, 0.5, 1, 1)});
  RegionSet free = free_region(env);
  CHECK(segment_in_region(free, Point{0.2, 0.2}, Point{3.8, 0.2}));
  CHECK(!segment_in_region(free, Point{0.2, 1.0}, Point{3.8, 1.0}));
  // Grazing along the hole boundary is allowed (closed region).
  CHECK(segment_in_region(free, Point{1.5, 0.5}, Point{2.5, 0.5}));
}

TEST_CASE("region distance reports gaps and contact") {
  RegionSet a = region_from_ring(rect_ring(0, 0, 1, 1));
  RegionSet b = region_from_ring(rect_ring(2, 0, 1, 1));
  RegionSet c = region_from_ring(rect_ring(1, 0, 1, 1));
  CHECK(region_distance(a, b) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(region_distance(a, c) == 0.0);
}

TEST_SUITE_END();
