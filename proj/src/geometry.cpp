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

#include "sector_cover/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>

#include "clipper.hpp"

namespace sector_cover {
namespace {

namespace cl = ClipperLib;

// Meters -> integer grid. 1 unit == kGeomEps meters, so snapping and the
// spec's weld tolerance coincide.
constexpr double kScale = 1e9;

cl::cInt snap_coord(double v) {
  return static_cast<cl::cInt>(std::llround(v * kScale));
}

cl::IntPoint snap(const Point& p) {
  return cl::IntPoint(snap_coord(p.x), snap_coord(p.y));
}

Point unsnap(const cl::IntPoint& p) {
  return Point{static_cast<double>(p.X) / kScale,
               static_cast<double>(p.Y) / kScale};
}

cl::Path to_path(const Ring& ring) {
  cl::Path path;
  path.reserve(ring.size());
  for (const Point& p : ring) path.push_back(snap(p));
  return path;
}

Ring from_path(const cl::Path& path) {
  Ring ring;
  ring.reserve(path.size());
  for (const cl::IntPoint& p : path) ring.push_back(unsnap(p));
  return ring;
}

void add_region_paths(cl::Paths* out, const RegionSet& region) {
  for (const Environment& comp : region.components) {
    out->push_back(to_path(comp.outer));
    for (const Ring& hole : comp.holes) out->push_back(to_path(hole));
  }
}

Ring oriented(Ring ring, bool ccw) {
  if ((ring_area(ring) > 0) != ccw) std::reverse(ring.begin(), ring.end());
  return ring;
}

void collect_components(const cl::PolyNode* node, RegionSet* out) {
  // Children of the (implicit or explicit) root are outer contours; their
  // children are holes; holes may contain nested outer contours (islands),
  // which become components of their own.
  for (const cl::PolyNode* outer_node : node->Childs) {
    Ring outer = from_path(outer_node->Contour);
    if (std::abs(ring_area(outer)) < kSliverArea) continue;
    Environment comp;
    comp.outer = oriented(std::move(outer), /*ccw=*/true);
    for (const cl::PolyNode* hole_node : outer_node->Childs) {
      Ring hole = from_path(hole_node->Contour);
      if (std::abs(ring_area(hole)) >= kSliverArea)
        comp.holes.push_back(oriented(std::move(hole), /*ccw=*/false));
      collect_components(hole_node, out);
    }
    out->components.push_back(std::move(comp));
  }
}

RegionSet from_polytree(cl::PolyTree& tree) {
  RegionSet out;
  collect_components(&tree, &out);
  return out;
}

// ---- exact predicates on the snapped grid ----

using Int128 = __int128;

Int128 cross(const cl::IntPoint& o, const cl::IntPoint& a,
             const cl::IntPoint& b) {
  return Int128(a.X - o.X) * Int128(b.Y - o.Y) -
         Int128(a.Y - o.Y) * Int128(b.X - o.X);
}

int sgn(Int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

bool on_segment_collinear(const cl::IntPoint& p, const cl::IntPoint& a,
                          const cl::IntPoint& b) {
  return std::min(a.X, b.X) <= p.X && p.X <= std::max(a.X, b.X) &&
         std::min(a.Y, b.Y) <= p.Y && p.Y <= std::max(a.Y, b.Y);
}

// True when closed segments [a,b] and [c,d] share at least one point.
bool segments_touch(const cl::IntPoint& a, const cl::IntPoint& b,
                    const cl::IntPoint& c, const cl::IntPoint& d) {
  int d1 = sgn(cross(a, b, c));
  int d2 = sgn(cross(a, b, d));
  int d3 = sgn(cross(c, d, a));
  int d4 = sgn(cross(c, d, b));
  if (d1 != d2 && d3 != d4 && (d1 != 0 || d2 != 0) && (d3 != 0 || d4 != 0))
    return true;
  if (d1 == 0 && on_segment_collinear(c, a, b)) return true;
  if (d2 == 0 && on_segment_collinear(d, a, b)) return true;
  if (d3 == 0 && on_segment_collinear(a, c, d)) return true;
  if (d4 == 0 && on_segment_collinear(b, c, d)) return true;
  return false;
}

double segment_point_distance(const Point& a, const Point& b, const Point& p) {
  double vx = b.x - a.x, vy = b.y - a.y;
  double len2 = vx * vx + vy * vy;
  if (len2 == 0.0) return distance(a, p);
  double t = ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return distance(Point{a.x + t * vx, a.y + t * vy}, p);
}

double segment_segment_distance(const Point& a, const Point& b,
                                const Point& c, const Point& d) {
  if (segments_touch(snap(a), snap(b), snap(c), snap(d))) return 0.0;
  return std::min(std::min(segment_point_distance(a, b, c),
                           segment_point_distance(a, b, d)),
                  std::min(segment_point_distance(c, d, a),
                           segment_point_distance(c, d, b)));
}

void for_each_edge(const Environment& env,
                   const std::function<void(const Point&, const Point&)>& fn) {
  auto walk = [&fn](const Ring& ring) {
    for (size_t i = 0; i < ring.size(); ++i)
      fn(ring[i], ring[(i + 1) % ring.size()]);
  };
  walk(env.outer);
  for (const Ring& hole : env.holes) walk(hole);
}

bool point_on_ring(const cl::Path& path, const cl::IntPoint& p) {
  for (size_t i = 0; i < path.size(); ++i) {
    const cl::IntPoint& a = path[i];
    const cl::IntPoint& b = path[(i + 1) % path.size()];
    if (sgn(cross(a, b, p)) == 0 && on_segment_collinear(p, a, b)) return true;
  }
  return false;
}

}  // namespace

double ring_area(const Ring& ring) {
  double twice = 0.0;
  for (size_t i = 0; i < ring.size(); ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % ring.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * twice;
}

double perimeter(const Ring& ring) {
  double total = 0.0;
  for (size_t i = 0; i < ring.size(); ++i)
    total += distance(ring[i], ring[(i + 1) % ring.size()]);
  return total;
}

Ring normalize_ring(const Ring& ring, const std::string& where) {
  Ring out;
  out.reserve(ring.size());
  for (const Point& p : ring) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw ValidationError(where, "non-finite coordinate");
    Point snapped = unsnap(snap(p));
    if (!out.empty() && distance(out.back(), snapped) < kGeomEps) continue;
    out.push_back(snapped);
  }
  while (out.size() > 1 && distance(out.front(), out.back()) < kGeomEps)
    out.pop_back();
  if (out.size() < 3)
    throw ValidationError(where, "fewer than 3 distinct vertices");

  cl::Path path = to_path(out);
  const size_t n = path.size();
  for (size_t i = 0; i < n; ++i) {
    // Spike: the next edge folds straight back onto the previous one.
    const cl::IntPoint& prev = path[(i + n - 1) % n];
    const cl::IntPoint& v = path[i];
    const cl::IntPoint& next = path[(i + 1) % n];
    if (sgn(cross(v, prev, next)) == 0 &&
        Int128(prev.X - v.X) * Int128(next.X - v.X) +
                Int128(prev.Y - v.Y) * Int128(next.Y - v.Y) >
            0)
      throw ValidationError(where,
                            "degenerate spike at vertex " + std::to_string(i));
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;  // adjacent edges
      if (segments_touch(path[i], path[(i + 1) % n], path[j],
                         path[(j + 1) % n]))
        throw ValidationError(where, "self-intersection between edges " +
                                         std::to_string(i) + " and " +
                                         std::to_string(j));
    }
  }
  return out;
}

Environment make_environment(Ring outer, std::vector<Ring> holes,
                             std::vector<std::string>* warnings) {
  auto warn = [warnings](const std::string& msg) {
    if (warnings) warnings->push_back(msg);
  };

  Environment env;
  env.outer = normalize_ring(outer, "outer");
  if (ring_area(env.outer) < 0) {
    std::reverse(env.outer.begin(), env.outer.end());
    warn("outer ring was clockwise; reversed to counterclockwise");
  }
  cl::Path outer_path = to_path(env.outer);

  for (size_t h = 0; h < holes.size(); ++h) {
    const std::string where = "holes[" + std::to_string(h) + "]";
    Ring hole = normalize_ring(holes[h], where);
    if (ring_area(hole) > 0) {
      std::reverse(hole.begin(), hole.end());
      warn(where + " was counterclockwise; reversed to clockwise");
    }
    bool touches = false;
    for (const Point& p : hole) {
      int pip = cl::PointInPolygon(snap(p), outer_path);
      if (pip == 0)
        throw ValidationError(where, "hole vertex outside the outer ring");
      if (pip == -1) touches = true;
    }
    // Vertex containment alone misses holes whose edges cross the outer
    // boundary; a difference test catches those.
    RegionSet escaped = region_difference(region_from_ring(hole),
                                          region_from_ring(env.outer));
    if (area(escaped) > kSliverArea)
      throw ValidationError(where, "hole extends beyond the outer ring");
    if (!touches) {
      for (const Point& p : env.outer)
        if (point_on_ring(to_path(hole), snap(p))) touches = true;
    }
    if (touches)
      warn(where + " touches the outer boundary; free space may disconnect");
    env.holes.push_back(std::move(hole));
  }

  for (size_t i = 0; i < env.holes.size(); ++i) {
    for (size_t j = i + 1; j < env.holes.size(); ++j) {
      RegionSet overlap = region_intersection(region_from_ring(env.holes[i]),
                                              region_from_ring(env.holes[j]));
      if (area(overlap) > kSliverArea)
        throw ValidationError("holes[" + std::to_string(j) + "]",
                              "overlaps holes[" + std::to_string(i) + "]");
    }
  }

  if (area(env) <= 0.0)
    throw ValidationError("environment", "holes consume the whole area");
  return env;
}

RegionSet region_from(const Environment& env) {
  return RegionSet{{env}};
}

RegionSet region_from_ring(const Ring& ring) {
  Environment env;
  env.outer.reserve(ring.size());
  for (const Point& p : ring) env.outer.push_back(unsnap(snap(p)));
  if (ring_area(env.outer) < 0)
    std::reverse(env.outer.begin(), env.outer.end());
  return RegionSet{{std::move(env)}};
}

RegionSet free_region(const Environment& env) {
  if (env.holes.empty()) return region_from(env);
  RegionSet outer = region_from_ring(env.outer);
  RegionSet holes;
  for (const Ring& hole : env.holes) {
    Environment h;
    h.outer = hole;
    std::reverse(h.outer.begin(), h.outer.end());
    holes.components.push_back(std::move(h));
  }
  return region_difference(outer, holes);
}

double area(const Environment& env) {
  double a = std::abs(ring_area(env.outer));
  for (const Ring& hole : env.holes) a -= std::abs(ring_area(hole));
  return a;
}

double area(const RegionSet& region) {
  double total = 0.0;
  for (const Environment& comp : region.components) total += area(comp);
  return total;
}

RegionSet boolean_op(const RegionSet& a, const RegionSet& b, BoolOp op) {
  if (a.empty())
    return (op == BoolOp::kUnion) ? b : RegionSet{};
  if (b.empty())
    return (op == BoolOp::kIntersection) ? RegionSet{} : a;

  cl::Paths subject, clip;
  add_region_paths(&subject, a);
  add_region_paths(&clip, b);

  cl::ClipType type = cl::ctUnion;
  if (op == BoolOp::kDifference) type = cl::ctDifference;
  if (op == BoolOp::kIntersection) type = cl::ctIntersection;

  cl::Clipper clipper;
  clipper.StrictlySimple(true);
  clipper.AddPaths(subject, cl::ptSubject, true);
  clipper.AddPaths(clip, cl::ptClip, true);
  cl::PolyTree tree;
  clipper.Execute(type, tree, cl::pftNonZero, cl::pftNonZero);
  return from_polytree(tree);
}

RegionSet erode(const RegionSet& region, double radius) {
  if (radius < 0.0)
    throw std::invalid_argument("erode: negative radius");
  if (region.empty() || radius == 0.0) return region;

  cl::Paths paths;
  add_region_paths(&paths, region);
  cl::ClipperOffset offset(/*miterLimit=*/2.0,
                           /*arcTolerance=*/kArcSagitta * kScale);
  offset.AddPaths(paths, cl::jtRound, cl::etClosedPolygon);
  cl::PolyTree tree;
  offset.Execute(tree, -radius * kScale);
  return from_polytree(tree);
}

Point rotate_point(const Point& p, double angle, const Point& pivot) {
  if (angle == 0.0) return p;
  double c = std::cos(angle), s = std::sin(angle);
  double dx = p.x - pivot.x, dy = p.y - pivot.y;
  return Point{pivot.x + c * dx - s * dy, pivot.y + s * dx + c * dy};
}

RegionSet rotate(const RegionSet& region, double angle, const Point& pivot) {
  if (angle == 0.0) return region;
  RegionSet out = region;
  for (Environment& comp : out.components) {
    for (Point& p : comp.outer) p = rotate_point(p, angle, pivot);
    for (Ring& hole : comp.holes)
      for (Point& p : hole) p = rotate_point(p, angle, pivot);
  }
  return out;
}

Box bounding_box(const RegionSet& region) {
  Box box{{std::numeric_limits<double>::max(),
           std::numeric_limits<double>::max()},
          {std::numeric_limits<double>::lowest(),
           std::numeric_limits<double>::lowest()}};
  for (const Environment& comp : region.components) {
    for (const Point& p : comp.outer) {
      box.min.x = std::min(box.min.x, p.x);
      box.min.y = std::min(box.min.y, p.y);
      box.max.x = std::max(box.max.x, p.x);
      box.max.y = std::max(box.max.y, p.y);
    }
  }
  return box;
}

bool contains_point(const Environment& env, const Point& p) {
  cl::IntPoint ip = snap(p);
  int in_outer = cl::PointInPolygon(ip, to_path(env.outer));
  if (in_outer == 0) return false;
  if (in_outer == -1) return true;  // on the outer boundary
  for (const Ring& hole : env.holes) {
    int in_hole = cl::PointInPolygon(ip, to_path(hole));
    if (in_hole == 1) return false;  // strictly inside a hole
  }
  return true;
}

bool contains_point(const RegionSet& region, const Point& p) {
  for (const Environment& comp : region.components)
    if (contains_point(comp, p)) return true;
  return false;
}

bool segment_in_region(const RegionSet& region, const Point& a,
                       const Point& b) {
  if (!contains_point(region, a) || !contains_point(region, b)) return false;
  if (distance(a, b) < kGeomEps) return true;

  cl::IntPoint ia = snap(a), ib = snap(b);
  std::vector<double> params = {0.0, 1.0};
  double abx = b.x - a.x, aby = b.y - a.y;
  double len2 = abx * abx + aby * aby;

  auto add_point_param = [&](const Point& p) {
    double t = ((p.x - a.x) * abx + (p.y - a.y) * aby) / len2;
    if (t > 0.0 && t < 1.0) params.push_back(t);
  };

  for (const Environment& comp : region.components) {
    for_each_edge(comp, [&](const Point& c, const Point& d) {
      cl::IntPoint ic = snap(c), id = snap(d);
      if (!segments_touch(ia, ib, ic, id)) return;
      int d1 = sgn(cross(ia, ib, ic));
      int d2 = sgn(cross(ia, ib, id));
      if (d1 == 0) add_point_param(c);
      if (d2 == 0) add_point_param(d);
      if (d1 != d2 && d1 != 0 && d2 != 0) {
        // Proper crossing; the double-precision parameter is only used to
        // pick midpoint samples, so snapping error is acceptable.
        double denom = (d.y - c.y) * abx - (d.x - c.x) * aby;
        if (denom != 0.0) {
          double t = ((d.x - c.x) * (a.y - c.y) - (d.y - c.y) * (a.x - c.x)) /
                     denom;
          if (t > 0.0 && t < 1.0) params.push_back(t);
        }
      }
    });
  }

  std::sort(params.begin(), params.end());
  for (size_t i = 0; i + 1 < params.size(); ++i) {
    if (params[i + 1] - params[i] < 1e-12) continue;
    double t = 0.5 * (params[i] + params[i + 1]);
    Point mid{a.x + t * abx, a.y + t * aby};
    if (!contains_point(region, mid)) return false;
  }
  return true;
}

double region_distance(const RegionSet& a, const RegionSet& b) {
  if (a.empty() || b.empty())
    return std::numeric_limits<double>::infinity();
  for (const Environment& comp : a.components)
    for (const Point& p : comp.outer)
      if (contains_point(b, p)) return 0.0;
  for (const Environment& comp : b.components)
    for (const Point& p : comp.outer)
      if (contains_point(a, p)) return 0.0;

  double best = std::numeric_limits<double>::infinity();
  for (const Environment& ca : a.components) {
    for_each_edge(ca, [&](const Point& p1, const Point& p2) {
      for (const Environment& cb : b.components) {
        for_each_edge(cb, [&](const Point& q1, const Point& q2) {
          best = std::min(best, segment_segment_distance(p1, p2, q1, q2));
        });
      }
    });
  }
  return best;
}

double extent_along(const RegionSet& region, double angle) {
  double c = std::cos(angle), s = std::sin(angle);
  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();
  for (const Environment& comp : region.components) {
    for (const Point& p : comp.outer) {
      double proj = c * p.x + s * p.y;
      lo = std::min(lo, proj);
      hi = std::max(hi, proj);
    }
  }
  return region.empty() ? 0.0 : hi - lo;
}

double extent_perpendicular(const RegionSet& region, double angle) {
  return extent_along(region, angle + M_PI / 2.0);
}

std::vector<Span> horizontal_spans(const RegionSet& region, double y) {
  constexpr double kLineEps = 1e-9;
  std::vector<double> crossings;
  std::vector<Span> spans;
  for (const Environment& comp : region.components) {
    auto walk = [&](const Ring& ring) {
      for (size_t i = 0; i < ring.size(); ++i) {
        const Point& p = ring[i];
        const Point& q = ring[(i + 1) % ring.size()];
        if (std::abs(p.y - y) <= kLineEps && std::abs(q.y - y) <= kLineEps) {
          spans.push_back({std::min(p.x, q.x), std::max(p.x, q.x)});
          continue;
        }
        if ((p.y <= y && y < q.y) || (q.y <= y && y < p.y))
          crossings.push_back(p.x + (y - p.y) * (q.x - p.x) / (q.y - p.y));
      }
    };
    walk(comp.outer);
    for (const Ring& hole : comp.holes) walk(hole);
  }
  std::sort(crossings.begin(), crossings.end());
  for (size_t i = 0; i + 1 < crossings.size(); i += 2)
    spans.push_back({crossings[i], crossings[i + 1]});
  if (spans.empty()) return spans;

  std::sort(spans.begin(), spans.end(),
            [](const Span& a, const Span& b) { return a.lo < b.lo; });
  std::vector<Span> merged;
  for (const Span& s : spans) {
    if (!merged.empty() && s.lo <= merged.back().hi + kLineEps)
      merged.back().hi = std::max(merged.back().hi, s.hi);
    else
      merged.push_back(s);
  }
  return merged;
}

double polyline_distance(const std::vector<Point>& polyline, const Point& p) {
  if (polyline.empty()) return std::numeric_limits<double>::infinity();
  if (polyline.size() == 1) return distance(polyline[0], p);
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i + 1 < polyline.size(); ++i)
    best = std::min(best,
                    segment_point_distance(polyline[i], polyline[i + 1], p));
  return best;
}

}  // namespace sector_cover
