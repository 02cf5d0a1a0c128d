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

#ifndef SECTOR_COVER_GEOMETRY_HPP
#define SECTOR_COVER_GEOMETRY_HPP

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sector_cover {

// Vertex weld / snap grid, in meters. All boolean operations snap their
// operands to this grid and are exact on it.
inline constexpr double kGeomEps = 1e-9;

// Maximum sagitta of the chords that approximate erosion arcs at reflex
// corners, in meters.
inline constexpr double kArcSagitta = 1e-3;

// Output components with |area| below this are dropped as slivers.
inline constexpr double kSliverArea = 1e-12;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline bool operator==(const Point& a, const Point& b) {
  return a.x == b.x && a.y == b.y;
}
inline bool operator!=(const Point& a, const Point& b) { return !(a == b); }

inline double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// Ordered vertex list with implicit closure last -> first.
using Ring = std::vector<Point>;

struct Box {
  Point min;
  Point max;
  double width() const { return max.x - min.x; }
  double height() const { return max.y - min.y; }
};

// One connected workspace component: a counterclockwise outer ring and
// clockwise holes.
struct Environment {
  Ring outer;
  std::vector<Ring> holes;
};

// A possibly disconnected region; boolean results live here.
struct RegionSet {
  std::vector<Environment> components;
  bool empty() const { return components.empty(); }
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string where, const std::string& message)
      : std::runtime_error(where + ": " + message), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// Signed shoelace area; positive for counterclockwise rings.
double ring_area(const Ring& ring);

double perimeter(const Ring& ring);

// Validates invariants (finite coords, >= 3 vertices after welding
// near-duplicates, simplicity). Throws ValidationError. `where` names the
// ring in error messages.
Ring normalize_ring(const Ring& ring, const std::string& where);

// Builds a validated Environment. Winding is auto-normalized (outer CCW,
// holes CW); a note is appended to `warnings` when a ring was flipped or a
// hole touches the outer boundary. Throws ValidationError on structural
// problems (hole escaping the outer ring, overlapping holes, empty area).
Environment make_environment(Ring outer, std::vector<Ring> holes = {},
                             std::vector<std::string>* warnings = nullptr);

RegionSet region_from(const Environment& env);
RegionSet region_from_ring(const Ring& ring);

// Free space of the environment: outer minus holes. Disconnects into
// multiple components when a hole spans the outer boundary.
RegionSet free_region(const Environment& env);

double area(const Environment& env);
double area(const RegionSet& region);

enum class BoolOp { kUnion, kDifference, kIntersection };

RegionSet boolean_op(const RegionSet& a, const RegionSet& b, BoolOp op);

inline RegionSet region_union(const RegionSet& a, const RegionSet& b) {
  return boolean_op(a, b, BoolOp::kUnion);
}
inline RegionSet region_difference(const RegionSet& a, const RegionSet& b) {
  return boolean_op(a, b, BoolOp::kDifference);
}
inline RegionSet region_intersection(const RegionSet& a, const RegionSet& b) {
  return boolean_op(a, b, BoolOp::kIntersection);
}

// Minkowski difference with a disk of the given radius. Reflex arcs are
// approximated by chords with sagitta <= kArcSagitta. erode(r, 0) returns
// the input unchanged; the result may be empty.
RegionSet erode(const RegionSet& region, double radius);

Point rotate_point(const Point& p, double angle, const Point& pivot = {});
RegionSet rotate(const RegionSet& region, double angle,
                 const Point& pivot = {});

Box bounding_box(const RegionSet& region);

// Closed containment: boundary points count as inside.
bool contains_point(const RegionSet& region, const Point& p);
bool contains_point(const Environment& env, const Point& p);

// True when the whole segment [a, b] stays inside the closed region.
bool segment_in_region(const RegionSet& region, const Point& a,
                       const Point& b);

// Minimum distance between the two regions' boundaries/interiors; zero when
// they touch or overlap.
double region_distance(const RegionSet& a, const RegionSet& b);

// Extent of the region projected onto the direction `angle` (along) and its
// normal (perpendicular).
double extent_along(const RegionSet& region, double angle);
double extent_perpendicular(const RegionSet& region, double angle);

struct Span {
  double lo = 0.0;
  double hi = 0.0;
};

// Closed x-intervals of the region along the horizontal line y, merged and
// sorted. Edges lying on the line contribute their full span, so boundary
// points count as inside.
std::vector<Span> horizontal_spans(const RegionSet& region, double y);

// Distance from p to the nearest point of the polyline.
double polyline_distance(const std::vector<Point>& polyline, const Point& p);

}  // namespace sector_cover

#endif  // SECTOR_COVER_GEOMETRY_HPP
